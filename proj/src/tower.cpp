#include "axtower/tower.hpp"

#include "axtower/errors.hpp"

#include <algorithm>
#include <sstream>

namespace axtower {

namespace {

using i64 = std::int64_t;

i64 mod_reduce(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

}  // namespace

// ---------------------------------------------------------------- TowerConfig

int TowerConfig::max_precision(i64 p) {
    int P = 0;
    i64 pw = 1;
    while (pw <= (i64{1} << 31) / p) {
        pw *= p;
        ++P;
    }
    // pw = p^P is now the largest power not exceeding 2^31; keep it strictly below.
    if (pw == (i64{1} << 31)) --P;
    return P;
}

int TowerConfig::default_precision(i64 p) { return std::min(12, max_precision(p)); }

TowerConfig::TowerConfig(Field field, int e, std::vector<WCoeffs> eisenstein, int precision)
    : field_(std::move(field)), e_(e), precision_(precision) {
    const i64 p = field_->p();
    const int f = field_->degree();
    if (e < 1) throw InvalidArgument("ramification index must be >= 1");
    if (precision_ == 0) precision_ = default_precision(p);
    if (precision_ < 2 || precision_ > max_precision(p))
        throw UnsupportedConfig("precision " + std::to_string(precision_) + " outside [2, " +
                                std::to_string(max_precision(p)) + "] for p = " + std::to_string(p));
    pP_ = ipow(p, static_cast<unsigned>(precision_));
    if (static_cast<int>(eisenstein.size()) != e + 1)
        throw InvalidArgument("Eisenstein polynomial must have e+1 coefficients");
    for (auto& c : eisenstein) {
        if (static_cast<int>(c.size()) > f) throw InvalidArgument("coefficient has more than f coordinates");
        c.resize(f, 0);
    }

    // Unit part of the constant term, taken from the exact integer input.
    WCoeffs eps(f);
    for (int i = 0; i < f; ++i) {
        if (eisenstein[0][i] % p != 0) throw InvalidArgument("polynomial is not Eisenstein: p does not divide E_0");
        eps[i] = mod_reduce(eisenstein[0][i] / p, pP_);
    }

    eisenstein_.resize(e + 1);
    for (int i = 0; i <= e; ++i) {
        eisenstein_[i].resize(f);
        for (int t = 0; t < f; ++t) eisenstein_[i][t] = mod_reduce(eisenstein[i][t], pP_);
    }

    // Lifted modulus reduction table.
    const auto& mod = field_->modulus();
    if (f > 1) {
        WCoeffs cur(f);
        for (int t = 0; t < f; ++t) cur[t] = mod_reduce(-mod[t], pP_);
        high_powers_.push_back(cur);
        for (int k = 1; k < f - 1; ++k) {
            WCoeffs next(f, 0);
            const i64 top = cur[f - 1];
            for (int t = f - 1; t > 0; --t) next[t] = cur[t - 1];
            next[0] = 0;
            for (int t = 0; t < f; ++t) next[t] = mod_reduce(next[t] - top * mod[t], pP_);
            high_powers_.push_back(next);
            cur = next;
        }
    }

    WCoeffs one(f, 0);
    one[0] = 1;
    if (eisenstein_[e] != one) throw InvalidArgument("Eisenstein polynomial must be monic");
    for (int i = 0; i < e; ++i)
        for (int t = 0; t < f; ++t)
            if (eisenstein_[i][t] % p != 0)
                throw InvalidArgument("polynomial is not Eisenstein: p does not divide E_" + std::to_string(i));
    if (w_residue(eps.data()).is_zero())
        throw InvalidArgument("polynomial is not Eisenstein: p^2 divides E_0");

    // p = -eps^{-1} Σ_{i>=1} E_i π^i, so p/π = -eps^{-1} Σ_{i=1}^{e} E_i π^{i-1}.
    const WCoeffs eps_inv = w_inverse(eps);
    p_over_pi_.assign(e, WCoeffs(f, 0));
    for (int i = 1; i <= e; ++i) {
        WCoeffs t(f, 0);
        w_mul(eps_inv.data(), eisenstein_[i].data(), t.data());
        for (int c = 0; c < f; ++c) p_over_pi_[i - 1][c] = mod_reduce(-t[c], pP_);
    }
}

Config TowerConfig::make(Field field, int e, std::vector<WCoeffs> eisenstein, int precision) {
    return Config(new TowerConfig(std::move(field), e, std::move(eisenstein), precision));
}

Config TowerConfig::unramified(Field field, int precision) { return pure(std::move(field), 1, precision); }

Config TowerConfig::pure(Field field, int e, int precision) {
    std::vector<WCoeffs> E(e + 1, WCoeffs{0});
    E[0] = WCoeffs{-field->p()};
    E[e] = WCoeffs{1};
    return make(std::move(field), e, std::move(E), precision);
}

bool TowerConfig::operator==(const TowerConfig& o) const {
    return *field_ == *o.field_ && e_ == o.e_ && precision_ == o.precision_ && eisenstein_ == o.eisenstein_;
}

void TowerConfig::w_mul(const i64* a, const i64* b, i64* out) const {
    const int f = this->f();
    if (f == 1) {
        out[0] = (a[0] * b[0]) % pP_;
        return;
    }
    i64 prod[2 * ResidueField::kMaxDegree - 1] = {};
    for (int i = 0; i < f; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % pP_;
    }
    for (int t = 0; t < f; ++t) out[t] = prod[t];
    for (int k = 0; k < f - 1; ++k) {
        const i64 c = prod[f + k];
        if (c == 0) continue;
        for (int t = 0; t < f; ++t) out[t] = (out[t] + c * high_powers_[k][t]) % pP_;
    }
}

void TowerConfig::w_mul_acc(const i64* a, const i64* b, i64* out) const {
    const int f = this->f();
    if (f == 1) {
        out[0] = (out[0] + a[0] * b[0] % pP_) % pP_;
        return;
    }
    i64 t[ResidueField::kMaxDegree];
    w_mul(a, b, t);
    for (int i = 0; i < f; ++i) out[i] = (out[i] + t[i]) % pP_;
}

WCoeffs TowerConfig::w_inverse(const WCoeffs& unit) const {
    const ResidueElement r = w_residue(unit.data());
    if (r.is_zero()) throw DivisionByZero("element of W(k) is not a unit");
    const int f = this->f();
    WCoeffs y(f);
    const auto ri = r.inv().coords();
    for (int i = 0; i < f; ++i) y[i] = ri[i];
    // Newton: y <- y (2 - u y), doubling the number of correct digits.
    for (int correct = 1; correct < precision_; correct *= 2) {
        WCoeffs uy(f), t(f);
        w_mul(unit.data(), y.data(), uy.data());
        for (int i = 0; i < f; ++i) uy[i] = mod_reduce(-uy[i] + (i == 0 ? 2 : 0), pP_);
        w_mul(y.data(), uy.data(), t.data());
        y = t;
    }
    return y;
}

int TowerConfig::w_valuation(const i64* a) const {
    int best = -1;
    for (int i = 0; i < f(); ++i) {
        if (a[i] == 0) continue;
        const int v = vp(a[i], p());
        if (best < 0 || v < best) best = v;
    }
    return best;
}

ResidueElement TowerConfig::w_residue(const i64* a) const {
    std::vector<i64> c(f());
    for (int i = 0; i < f(); ++i) c[i] = mod_reduce(a[i], p());
    return ResidueElement(field_, std::move(c));
}

WCoeffs TowerConfig::teichmuller_lift(const ResidueElement& c) const {
    if (!same_field(c.field(), field_)) throw FieldMismatch("residue element from a different field");
    const int f = this->f();
    WCoeffs y(c.coords().begin(), c.coords().end());
    if (c.is_zero()) return y;
    const auto q = field_->order();
    // y <- y^q converges to the root of unity lifting c: one p-adic digit per step.
    for (int step = 0; step < precision_; ++step) {
        WCoeffs base = y, acc(f, 0);
        acc[0] = 1;
        for (auto e = q; e > 0; e >>= 1) {
            WCoeffs t(f);
            if (e & 1) {
                w_mul(acc.data(), base.data(), t.data());
                acc = t;
            }
            w_mul(base.data(), base.data(), t.data());
            base = t;
        }
        y = acc;
    }
    return y;
}

void require_same_config(const Config& a, const Config& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw ConfigMismatch("elements belong to different tower configurations");
}

// --------------------------------------------------------------- TowerElement

TowerElement::TowerElement(Config cfg, int level) : cfg_(std::move(cfg)), level_(level) {
    if (level < 0) throw InvalidArgument("tower level must be >= 0");
    width_ = cfg_->e() * ipow(cfg_->p(), static_cast<unsigned>(level));
    if (width_ > 100000) throw UnsupportedConfig("tower level too large");
    c_.assign(width_ * cfg_->f(), 0);
}

TowerElement TowerElement::zero(const Config& cfg, int level) {
    return TowerElement(cfg, level);
}

TowerElement TowerElement::from_coeffs(const Config& cfg, int level, i64 shift, const std::vector<WCoeffs>& coeffs) {
    TowerElement x(cfg, level);
    const int f = cfg->f();
    bool any = false;
    const i64 len = std::max<i64>(static_cast<i64>(coeffs.size()), x.width_);
    std::vector<i64> poly(len * f, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (static_cast<int>(coeffs[j].size()) > f) throw InvalidArgument("coefficient has more than f coordinates");
        for (std::size_t t = 0; t < coeffs[j].size(); ++t) {
            if (coeffs[j][t] != 0) any = true;
            poly[j * f + t] = mod_reduce(coeffs[j][t], cfg->modulus());
        }
    }
    if (!any) return x;
    x.reduce_high(poly);
    std::copy(poly.begin(), poly.begin() + x.width_ * f, x.c_.begin());
    x.shift_ = shift;
    x.cutoff_ = shift + x.width_ * cfg->precision();
    x.normalize();
    return x;
}

TowerElement TowerElement::from_integer(const Config& cfg, int level, i64 value) {
    return from_coeffs(cfg, level, 0, {WCoeffs{value}});
}

TowerElement TowerElement::teichmuller(const Config& cfg, int level, const ResidueElement& c, i64 index) {
    if (c.is_zero()) return zero(cfg, level);
    return from_coeffs(cfg, level, index, {cfg->teichmuller_lift(c)});
}

TowerElement TowerElement::uniformizer(const Config& cfg, int level) {
    return from_coeffs(cfg, level, 1, {WCoeffs{1}});
}

TowerElement TowerElement::eta(const Config& cfg, int m, int level) {
    if (m < 0 || m > level) throw InvalidArgument("eta_m needs 0 <= m <= level");
    return from_coeffs(cfg, level, -ipow(cfg->p(), static_cast<unsigned>(level - m)), {WCoeffs{1}});
}

bool TowerElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}

WCoeffs TowerElement::coefficient(i64 j) const {
    if (j < 0 || j >= width_) throw InvalidArgument("coefficient index out of range");
    const int f = cfg_->f();
    return WCoeffs(c_.begin() + j * f, c_.begin() + (j + 1) * f);
}

void TowerElement::normalize() {
    const int f = cfg_->f();
    if (cutoff_ == kExact) {
        std::fill(c_.begin(), c_.end(), 0);
        shift_ = 0;
        return;
    }
    const i64 M = width_ * cfg_->precision();
    if (cutoff_ - shift_ > M) cutoff_ = shift_ + M;
    if (cutoff_ < shift_) shift_ = cutoff_;
    const i64 k = cutoff_ - shift_;
    const i64 a = k / width_;
    const i64 b = k % width_;
    const i64 p = cfg_->p();
    const int P = cfg_->precision();
    const i64 lo_mod = ipow(p, static_cast<unsigned>(std::min<i64>(a, P)));
    const i64 hi_mod = ipow(p, static_cast<unsigned>(std::min<i64>(a + 1, P)));
    for (i64 j = 0; j < width_; ++j) {
        const i64 m = j < b ? hi_mod : lo_mod;
        for (int t = 0; t < f; ++t) {
            i64& v = c_[j * f + t];
            v = m == 1 ? 0 : mod_reduce(v, m);
        }
    }
    // Rebase onto the true order, so repeated products keep their window. A
    // leading coefficient p u is rewritten as u (p/π_n), one index higher.
    const i64 pn = width_ / cfg_->e();
    bool moved = false;
    std::vector<i64> u(f);
    while (shift_ < cutoff_) {
        const auto first = std::find_if(c_.begin(), c_.end(), [](i64 v) { return v != 0; });
        if (first == c_.end()) {
            shift_ = cutoff_;
            break;
        }
        const i64 lead = (first - c_.begin()) / f;
        if (lead > 0) {
            std::copy(c_.begin() + lead * f, c_.end(), c_.begin());
            std::fill(c_.end() - lead * f, c_.end(), 0);
            shift_ += lead;
            moved = true;
            continue;
        }
        if (cfg_->w_valuation(c_.data()) == 0) break;
        for (int t = 0; t < f; ++t) u[t] = c_[t] / p;
        std::copy(c_.begin() + f, c_.end(), c_.begin());
        std::fill(c_.end() - f, c_.end(), 0);
        const auto& w = cfg_->p_over_pi();
        for (int r = 0; r < cfg_->e(); ++r) cfg_->w_mul_acc(u.data(), w[r].data(), &c_[(pn - 1 + r * pn) * f]);
        ++shift_;
        moved = true;
    }
    if (moved) normalize();
}

void TowerElement::reduce_high(std::vector<i64>& poly) const {
    // π_n^N = -Σ_{i<e} E_i π_n^{i p^n}, N = e p^n.
    const int f = cfg_->f();
    const int e = cfg_->e();
    const i64 pn = width_ / e;
    const i64 len = static_cast<i64>(poly.size()) / f;
    const auto& E = cfg_->eisenstein();
    const i64 m = cfg_->modulus();
    std::vector<i64> neg(f);
    for (i64 idx = len - 1; idx >= width_; --idx) {
        i64* c = &poly[idx * f];
        if (std::all_of(c, c + f, [](i64 v) { return v == 0; })) continue;
        for (int t = 0; t < f; ++t) neg[t] = mod_reduce(-c[t], m);
        std::fill(c, c + f, 0);
        for (int i = 0; i < e; ++i) {
            if (std::all_of(E[i].begin(), E[i].end(), [](i64 v) { return v == 0; })) continue;
            cfg_->w_mul_acc(neg.data(), E[i].data(), &poly[(idx - width_ + i * pn) * f]);
        }
    }
}

std::vector<i64> TowerElement::shifted(i64 delta) const {
    const int f = cfg_->f();
    if (delta == 0) return c_;
    std::vector<i64> poly((width_ + delta) * f, 0);
    std::copy(c_.begin(), c_.end(), poly.begin() + delta * f);
    reduce_high(poly);
    poly.resize(width_ * f);
    return poly;
}

i64 TowerElement::order() const {
    if (cutoff_ == kExact) return kExact;
    const int f = cfg_->f();
    i64 best = kExact;
    for (i64 j = 0; j < width_; ++j) {
        const int v = cfg_->w_valuation(&c_[j * f]);
        if (v < 0) continue;
        best = std::min(best, v * width_ + j);
    }
    return best == kExact ? cutoff_ : shift_ + best;
}

Valuation TowerElement::valuation() const {
    if (cutoff_ == kExact) return Valuation::infinite();
    const Rational scale(1, width_);
    if (is_zero()) return Valuation::at_least(Rational(cutoff_) * scale);
    return Valuation::exact(Rational(order()) * scale);
}

TowerElement TowerElement::operator+(const TowerElement& y) const {
    require_same_config(cfg_, y.cfg_);
    if (level_ != y.level_) {
        const int L = std::max(level_, y.level_);
        return embed(L) + y.embed(L);
    }
    if (is_exact_zero()) return y;
    if (y.is_exact_zero()) return *this;
    TowerElement r(cfg_, level_);
    r.shift_ = std::min(shift_, y.shift_);
    r.cutoff_ = std::min(cutoff_, y.cutoff_);
    const i64 m = cfg_->modulus();
    for (const TowerElement* z : {this, &y}) {
        if (z->shift_ >= r.cutoff_) continue;
        const auto v = z->shifted(z->shift_ - r.shift_);
        for (std::size_t i = 0; i < v.size(); ++i) r.c_[i] = (r.c_[i] + v[i]) % m;
    }
    r.normalize();
    return r;
}

TowerElement TowerElement::operator-() const {
    TowerElement r = *this;
    const i64 m = cfg_->modulus();
    for (auto& v : r.c_) v = v == 0 ? 0 : m - v;
    r.normalize();
    return r;
}

TowerElement TowerElement::operator-(const TowerElement& y) const { return *this + (-y); }

TowerElement TowerElement::operator*(const TowerElement& y) const {
    require_same_config(cfg_, y.cfg_);
    if (level_ != y.level_) {
        const int L = std::max(level_, y.level_);
        return embed(L) * y.embed(L);
    }
    if (is_exact_zero()) return *this;
    if (y.is_exact_zero()) return y;
    const int f = cfg_->f();
    TowerElement r(cfg_, level_);
    r.shift_ = shift_ + y.shift_;
    r.cutoff_ = std::min(order() + y.cutoff_, y.order() + cutoff_);
    std::vector<i64> poly((2 * width_ - 1) * f, 0);
    for (i64 i = 0; i < width_; ++i) {
        const i64* a = &c_[i * f];
        if (std::all_of(a, a + f, [](i64 v) { return v == 0; })) continue;
        for (i64 j = 0; j < width_; ++j) {
            const i64* b = &y.c_[j * f];
            if (std::all_of(b, b + f, [](i64 v) { return v == 0; })) continue;
            cfg_->w_mul_acc(a, b, &poly[(i + j) * f]);
        }
    }
    reduce_high(poly);
    std::copy(poly.begin(), poly.begin() + width_ * f, r.c_.begin());
    r.normalize();
    return r;
}

TowerElement TowerElement::with_cutoff(i64 c) const {
    if (c >= cutoff_) return *this;
    TowerElement r = *this;
    if (r.cutoff_ == kExact) r.shift_ = std::min<i64>(0, c);
    r.cutoff_ = c;
    r.normalize();
    return r;
}

TowerElement TowerElement::mul_pi_power(i64 j) const {
    if (is_exact_zero()) return *this;
    TowerElement r = *this;
    r.shift_ += j;
    r.cutoff_ += j;
    return r;
}

TowerElement TowerElement::pow(unsigned k) const {
    TowerElement acc = from_integer(cfg_, level_, 1);
    TowerElement base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

TowerElement TowerElement::embed(int target) const {
    if (target < level_) throw InvalidArgument("cannot embed into a lower level");
    if (target == level_) return *this;
    const i64 factor = ipow(cfg_->p(), static_cast<unsigned>(target - level_));
    TowerElement r(cfg_, target);
    if (is_exact_zero()) return r;
    const int f = cfg_->f();
    for (i64 j = 0; j < width_; ++j)
        std::copy(c_.begin() + j * f, c_.begin() + (j + 1) * f, r.c_.begin() + j * factor * f);
    r.shift_ = shift_ * factor;
    r.cutoff_ = cutoff_ * factor;
    r.normalize();
    return r;
}

bool TowerElement::operator==(const TowerElement& y) const {
    return (cfg_ == y.cfg_ || *cfg_ == *y.cfg_) && level_ == y.level_ && shift_ == y.shift_ &&
           cutoff_ == y.cutoff_ && c_ == y.c_;
}

std::string TowerElement::to_string() const {
    std::ostringstream os;
    os << "TowerElement(level=" << level_;
    if (is_exact_zero()) {
        os << ", 0)";
        return os.str();
    }
    os << ", shift=" << shift_ << ", cutoff=" << cutoff_ << ", coeffs=[";
    const int f = cfg_->f();
    for (i64 j = 0; j < width_; ++j) {
        if (j) os << ",";
        if (f == 1) {
            os << c_[j];
        } else {
            os << "[";
            for (int t = 0; t < f; ++t) os << (t ? "," : "") << c_[j * f + t];
            os << "]";
        }
    }
    os << "])";
    return os.str();
}

// ------------------------------------------------------------- decompositions

std::vector<TowerElement> coefficients_over_base(const TowerElement& x) {
    const Config& cfg = x.cfg_;
    const int f = cfg->f();
    const int e = cfg->e();
    const i64 pn = x.width_ / e;
    std::vector<TowerElement> out;
    out.reserve(pn);
    for (i64 i = 0; i < pn; ++i) {
        TowerElement a = TowerElement::zero(cfg, 0);
        if (!x.is_exact_zero()) {
            const i64 q0 = ceil_div(x.shift_ - i, pn);
            for (int r = 0; r < e; ++r) {
                const i64 j = i + pn * (q0 + r) - x.shift_;
                std::copy(x.c_.begin() + j * f, x.c_.begin() + (j + 1) * f, a.c_.begin() + r * f);
            }
            a.shift_ = q0;
            a.cutoff_ = ceil_div(x.cutoff_ - i, pn);
            a.normalize();
        }
        out.push_back(std::move(a));
    }
    return out;
}

TowerElement from_base_coefficients(const Config& cfg, int level, const std::vector<TowerElement>& a) {
    const i64 pn = ipow(cfg->p(), static_cast<unsigned>(level));
    if (static_cast<i64>(a.size()) != pn) throw InvalidArgument("expected p^n base coefficients");
    TowerElement acc = TowerElement::zero(cfg, level);
    for (i64 i = 0; i < pn; ++i) {
        if (a[i].level() != 0) throw InvalidArgument("base coefficients must lie in K");
        acc += a[i].embed(level).mul_pi_power(i);
    }
    return acc;
}

std::map<i64, ResidueElement> teichmuller_expand(const TowerElement& x, i64 lo, i64 hi) {
    const Config& cfg = x.cfg_;
    std::map<i64, ResidueElement> out;
    if (hi <= lo) return out;
    if (!x.is_exact_zero() && hi > x.cutoff_)
        throw PrecisionExhausted("digit " + std::to_string(hi - 1) + " lies beyond the cutoff " +
                                 std::to_string(x.cutoff_));
    const auto zero = ResidueElement::zero(cfg->field());
    if (x.is_exact_zero()) {
        for (i64 i = lo; i < hi; ++i) out.emplace(i, zero);
        return out;
    }
    for (i64 i = lo; i < std::min(hi, x.shift_); ++i) out.emplace(i, zero);

    const int f = cfg->f();
    const int e = cfg->e();
    const i64 N = x.width_;
    const i64 pn = N / e;
    const i64 p = cfg->p();
    const i64 m = cfg->modulus();
    const auto& w = cfg->p_over_pi();
    TowerElement y = x;
    std::vector<i64> u(f);
    for (i64 idx = x.shift_; idx < hi; ++idx) {
        if (y.shift_ > idx) {
            if (idx >= lo) out.emplace(idx, zero);
            continue;
        }
        const ResidueElement d = cfg->w_residue(y.c_.data());
        if (idx >= lo) out.emplace(idx, d);
        const WCoeffs lift = cfg->teichmuller_lift(d);
        for (int t = 0; t < f; ++t) u[t] = mod_reduce(y.c_[t] - lift[t], m) / p;
        std::copy(y.c_.begin() + f, y.c_.end(), y.c_.begin());
        std::fill(y.c_.end() - f, y.c_.end(), 0);
        // (c_0 - [d]) = p u, and p/π_n = π_n^(p^n - 1) Σ_r w_r π_n^(r p^n).
        for (int r = 0; r < e; ++r) cfg->w_mul_acc(u.data(), w[r].data(), &y.c_[(pn - 1 + r * pn) * f]);
        y.shift_ = idx + 1;
        y.normalize();
    }
    return out;
}

ResidueElement residue(const TowerElement& x) {
    if (!x.valuation().certainly_at_least(Rational(0)))
        throw InvalidArgument("residue needs an element of valuation >= 0");
    return teichmuller_expand(x, 0, 1).at(0);
}

}  // namespace axtower
