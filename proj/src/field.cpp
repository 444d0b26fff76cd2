#include "axtower/field.hpp"

#include "axtower/errors.hpp"

#include <algorithm>
#include <sstream>

namespace axtower {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Remainder of a modulo a nonzero polynomial m over F_p.
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::int64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::int64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = mod(a[shift + i] - c * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_rem(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m.
Poly frobenius_power_of_x(int k, const Poly& m, std::int64_t p) {
    Poly x = poly_rem(Poly{0, 1}, m, p);
    for (int i = 0; i < k; ++i) x = poly_powmod(x, static_cast<std::uint64_t>(p), m, p);
    return x;
}

// Rabin's test.
bool is_irreducible(const Poly& m, std::int64_t p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f == 1) return true;
    Poly x_mod = poly_rem(Poly{0, 1}, m, p);
    Poly full = frobenius_power_of_x(f, m, p);
    if (full != x_mod) return false;
    for (int l = 2; l <= f; ++l) {
        if (f % l != 0 || !is_prime(l)) continue;
        Poly h = frobenius_power_of_x(f / l, m, p);
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = mod(h[1] - 1, p);
        Poly g = poly_gcd(m, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

ResidueField::ResidueField(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p), f_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < f_; ++i) q_ *= static_cast<std::uint64_t>(p_);
    // t^f = -(m_0 + ... + m_{f-1} t^{f-1}); higher powers by shifting.
    std::vector<std::int64_t> cur(f_);
    for (int i = 0; i < f_; ++i) cur[i] = mod(-modulus_[i], p_);
    for (int k = 0; k + 1 < f_; ++k) {
        high_powers_.push_back(cur);
        std::vector<std::int64_t> next(f_, 0);
        const std::int64_t top = cur[f_ - 1];
        for (int i = f_ - 1; i > 0; --i) next[i] = cur[i - 1];
        for (int i = 0; i < f_; ++i) next[i] = mod(next[i] - top * modulus_[i], p_);
        cur = std::move(next);
    }
}

Field ResidueField::make(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (p > kMaxPrime) throw UnsupportedConfig("p must be <= 97");
    if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
    if (static_cast<int>(modulus.size()) - 1 > kMaxDegree) throw UnsupportedConfig("f must be <= 8");
    for (auto& c : modulus) c = mod(c, p);
    if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
    if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus is reducible over F_p");
    return Field(new ResidueField(p, std::move(modulus)));
}

Field ResidueField::prime(std::int64_t p) { return make(p, {0, 1}); }

bool same_field(const Field& a, const Field& b) { return a == b || (a && b && *a == *b); }

ResidueElement::ResidueElement(Field field, std::vector<std::int64_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw InvalidArgument("residue element needs exactly f coordinates");
    for (auto& c : coords_) c = mod(c, field_->p());
}

ResidueElement ResidueElement::zero(const Field& field) {
    return {field, std::vector<std::int64_t>(field->degree(), 0)};
}

ResidueElement ResidueElement::one(const Field& field) { return from_int(field, 1); }

ResidueElement ResidueElement::from_int(const Field& field, std::int64_t c) {
    std::vector<std::int64_t> v(field->degree(), 0);
    v[0] = c;
    return {field, std::move(v)};
}

ResidueElement ResidueElement::from_index(const Field& field, std::uint64_t index) {
    std::vector<std::int64_t> v(field->degree(), 0);
    const auto p = static_cast<std::uint64_t>(field->p());
    for (auto& c : v) {
        c = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    return {field, std::move(v)};
}

std::uint64_t ResidueElement::index() const {
    std::uint64_t r = 0;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it)
        r = r * static_cast<std::uint64_t>(field_->p()) + static_cast<std::uint64_t>(*it);
    return r;
}

bool ResidueElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

void ResidueElement::check_same(const ResidueElement& b) const {
    if (!same_field(field_, b.field_)) throw FieldMismatch("operands live in different residue fields");
}

ResidueElement ResidueElement::operator+(const ResidueElement& b) const {
    check_same(b);
    auto r = coords_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.coords_[i];
    return {field_, std::move(r)};
}

ResidueElement ResidueElement::operator-(const ResidueElement& b) const {
    check_same(b);
    auto r = coords_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.coords_[i];
    return {field_, std::move(r)};
}

ResidueElement ResidueElement::operator-() const {
    auto r = coords_;
    for (auto& c : r) c = -c;
    return {field_, std::move(r)};
}

ResidueElement ResidueElement::operator*(const ResidueElement& b) const {
    check_same(b);
    const int f = field_->degree();
    const std::int64_t p = field_->p();
    std::vector<std::int64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + coords_[i] * b.coords_[j]) % p;
    }
    std::vector<std::int64_t> r(prod.begin(), prod.begin() + f);
    for (int k = f; k < 2 * f - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = field_->high_power(k - f);
        for (int i = 0; i < f; ++i) r[i] = (r[i] + prod[k] * red[i]) % p;
    }
    return {field_, std::move(r)};
}

ResidueElement ResidueElement::pow(std::uint64_t e) const {
    ResidueElement r = one(field_);
    ResidueElement b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

ResidueElement ResidueElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in F_" + std::to_string(field_->order()));
    return pow(field_->order() - 2);
}

bool ResidueElement::operator==(const ResidueElement& b) const {
    return same_field(field_, b.field_) && coords_ == b.coords_;
}

std::string ResidueElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ']';
    return os.str();
}

ResidueElement frobenius(const ResidueElement& a, std::uint64_t s) {
    const auto f = static_cast<std::uint64_t>(a.field()->degree());
    ResidueElement r = a;
    for (std::uint64_t i = 0; i < s % f; ++i) r = r.pow(static_cast<std::uint64_t>(a.field()->p()));
    return r;
}

ResidueElement frobenius_inverse(const ResidueElement& a, std::uint64_t s) {
    const auto f = static_cast<std::uint64_t>(a.field()->degree());
    return frobenius(a, (f - s % f) % f);
}

std::vector<ResidueVector> kernel_basis(const Field& field, const std::vector<ResidueVector>& rows,
                                        std::size_t ncols) {
    std::vector<ResidueVector> m = rows;
    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const ResidueElement scale = m[rank][col].inv();
        for (auto& x : m[rank]) x *= scale;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const ResidueElement c = m[r][col];
            for (std::size_t j = 0; j < ncols; ++j) m[r][j] = m[r][j] - c * m[rank][j];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<ResidueVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        ResidueVector v(ncols, ResidueElement::zero(field));
        v[free] = ResidueElement::one(field);
        for (std::size_t col = 0; col < ncols; ++col)
            if (pivot_of_col[col] >= 0) v[col] = -m[pivot_of_col[col]][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ResidueVector> lex_first_nonzero(const Field& field, std::vector<ResidueVector> basis) {
    if (basis.empty()) return std::nullopt;
    const std::size_t n = basis.front().size();
    // Row echelon form by leading position; the row with the latest leading
    // position spans the one-dimensional subspace whose vectors start latest.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < basis.size(); ++col) {
        std::size_t piv = rank;
        while (piv < basis.size() && basis[piv][col].is_zero()) ++piv;
        if (piv == basis.size()) continue;
        std::swap(basis[piv], basis[rank]);
        const ResidueElement scale = basis[rank][col].inv();
        for (auto& x : basis[rank]) x *= scale;
        for (std::size_t r = rank + 1; r < basis.size(); ++r) {
            if (basis[r][col].is_zero()) continue;
            const ResidueElement c = basis[r][col];
            for (std::size_t j = 0; j < n; ++j) basis[r][j] = basis[r][j] - c * basis[rank][j];
        }
        ++rank;
    }
    if (rank == 0) return std::nullopt;
    (void)field;
    return basis[rank - 1];
}

}  // namespace axtower
