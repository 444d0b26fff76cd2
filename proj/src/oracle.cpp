// Brute-force Galois oscillation through exact norms in L = Q(ζ_{p^n})[Y]/(Y^{p^n} - p).
#include "axtower/ax.hpp"

#include "axtower/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace axtower {

namespace {

using i64 = std::int64_t;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

class CyclotomicKummer {
public:
    CyclotomicKummer(i64 p, int n) : p_(p), pn_(ipow(p, n)), phi_(pn_ / p * (p - 1)), dim_(phi_ * pn_) {
        // ζ^k in the basis 1, ζ, ..., ζ^{φ-1}, using Φ_{p^n}(ζ) = Σ_{i<p} ζ^{i p^{n-1}} = 0.
        const i64 block = pn_ / p;
        std::vector<i64> cur(phi_, 0);
        cur[0] = 1;
        zeta_.push_back(cur);
        for (i64 k = 1; k < pn_; ++k) {
            std::vector<i64> next(phi_, 0);
            for (i64 u = 0; u + 1 < phi_; ++u) next[u + 1] = cur[u];
            const i64 top = cur[phi_ - 1];
            for (i64 i = 0; i + 1 < p; ++i) next[i * block] -= top;
            zeta_.push_back(next);
            cur = next;
        }
    }

    i64 dim() const { return dim_; }

    using Elem = std::vector<cpp_rational>;

    /// Σ terms[k] (ζ^a Y)^k.
    Elem conjugate(const std::map<i64, Rational>& terms, i64 a) const {
        Elem z(dim_);
        for (const auto& [k, q] : terms) {
            const i64 v = ((k % pn_) + pn_) % pn_;
            const i64 t = (k - v) / pn_;
            cpp_rational c(q.numerator(), q.denominator());
            const cpp_rational pt = pow_p(t);
            c *= pt;
            const i64 u = (((a * k) % pn_) + pn_) % pn_;
            for (i64 w = 0; w < phi_; ++w)
                if (zeta_[u][w] != 0) z[v * phi_ + w] += c * zeta_[u][w];
        }
        return z;
    }

    /// v(z) = v_p(N_{L/Q}(z)) / [L:Q]; p is totally ramified in L.
    Valuation valuation(const Elem& z) const {
        bool zero = true;
        for (const auto& c : z)
            if (c != 0) zero = false;
        if (zero) return Valuation::infinite();
        std::vector<Elem> m(dim_, Elem(dim_));
        for (i64 col = 0; col < dim_; ++col) {
            Elem b(dim_);
            b[col] = 1;
            const Elem prod = mul(z, b);
            for (i64 row = 0; row < dim_; ++row) m[row][col] = prod[row];
        }
        const cpp_rational d = det(std::move(m));
        return Valuation::exact(Rational(vp_rational(d), dim_));
    }

private:
    cpp_rational pow_p(i64 t) const {
        cpp_rational r = 1;
        for (i64 i = 0; i < (t < 0 ? -t : t); ++i) r *= p_;
        return t < 0 ? 1 / r : r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out(dim_);
        for (i64 i = 0; i < dim_; ++i) {
            if (a[i] == 0) continue;
            for (i64 j = 0; j < dim_; ++j) {
                if (b[j] == 0) continue;
                i64 v = i / phi_ + j / phi_;
                cpp_rational c = a[i] * b[j];
                if (v >= pn_) {
                    v -= pn_;
                    c *= p_;
                }
                const i64 u = (i % phi_ + j % phi_) % pn_;
                for (i64 w = 0; w < phi_; ++w)
                    if (zeta_[u][w] != 0) out[v * phi_ + w] += c * zeta_[u][w];
            }
        }
        return out;
    }

    static cpp_rational det(std::vector<Elem> m) {
        const std::size_t n = m.size();
        cpp_rational d = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && m[piv][c] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != c) {
                std::swap(m[piv], m[c]);
                d = -d;
            }
            d *= m[c][c];
            for (std::size_t r = c + 1; r < n; ++r) {
                if (m[r][c] == 0) continue;
                const cpp_rational f = m[r][c] / m[c][c];
                for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            }
        }
        return d;
    }

    i64 vp_rational(const cpp_rational& q) const {
        auto count = [&](cpp_int v) {
            if (v < 0) v = -v;
            i64 k = 0;
            while (v % p_ == 0) {
                v /= p_;
                ++k;
            }
            return k;
        };
        return count(boost::multiprecision::numerator(q)) - count(boost::multiprecision::denominator(q));
    }

    i64 p_, pn_, phi_, dim_;
    std::vector<std::vector<i64>> zeta_;
};

void require_tiny(i64 p, int n) {
    const bool ok = n == 0 ? (p == 2 || p == 3) : ((p == 2 && (n == 1 || n == 2)) || (p == 3 && n == 1));
    if (!ok)
        throw UnsupportedConfig("cyclotomic oracle supports (p, n) in {(2,1), (2,2), (3,1)}, got (" +
                                std::to_string(p) + "," + std::to_string(n) + ")");
}

}  // namespace

Valuation cyclotomic_oracle_oscillation(i64 p, int n, const std::map<i64, Rational>& terms) {
    require_tiny(p, n);
    if (n == 0) return Valuation::infinite();
    const CyclotomicKummer L(p, n);
    const auto x = L.conjugate(terms, 0);
    Valuation best = Valuation::infinite();
    for (i64 a = 1; a < ipow(p, n); ++a) {
        auto z = L.conjugate(terms, a);
        for (i64 i = 0; i < L.dim(); ++i) z[i] -= x[i];
        best = min_exact(best, L.valuation(z));
    }
    return best;
}

Valuation cyclotomic_oracle_oscillation(const TowerElement& x) {
    const auto& cfg = x.config();
    if (cfg->e() != 1 || cfg->f() != 1)
        throw UnsupportedConfig("cyclotomic oracle needs e = 1 and k = F_p");
    require_tiny(cfg->p(), x.level());
    std::map<i64, Rational> terms;
    if (!x.is_exact_zero()) {
        for (i64 j = 0; j < x.width(); ++j) {
            const i64 c = x.coefficient(j)[0];
            if (c != 0) terms[x.shift() + j] = Rational(c);
        }
    }
    return cyclotomic_oracle_oscillation(cfg->p(), x.level(), terms);
}

}  // namespace axtower
