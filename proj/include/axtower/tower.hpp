#pragma once

#include "axtower/field.hpp"
#include "axtower/rational.hpp"
#include "axtower/valuation.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace axtower {

/// An element of the truncated unramified ring W(k)/p^P, as f integer
/// coordinates in [0, p^P) with respect to the lifted modulus basis.
using WCoeffs = std::vector<std::int64_t>;

class TowerConfig;
using Config = std::shared_ptr<const TowerConfig>;

/// Base field K = W(k)[1/p][π]/(E(π)) together with the working precision P.
///
/// Coefficients of tower elements live in W(k)/p^P; p^P is kept below 2^31 so
/// products of two coordinates fit in 64 bits.
class TowerConfig {
public:
    static Config make(Field field, int e, std::vector<WCoeffs> eisenstein, int precision);
    /// K = Frac W(k): e = 1 with E(T) = T - p, so π = p.
    static Config unramified(Field field, int precision = 0);
    /// E(T) = T^e - p.
    static Config pure(Field field, int e, int precision = 0);

    /// Largest precision the 64-bit arithmetic supports for this p.
    static int max_precision(std::int64_t p);
    /// Precision used when 0 is passed: min(12, max_precision(p)).
    static int default_precision(std::int64_t p);

    const Field& field() const { return field_; }
    std::int64_t p() const { return field_->p(); }
    int f() const { return field_->degree(); }
    int e() const { return e_; }
    int precision() const { return precision_; }
    const std::vector<WCoeffs>& eisenstein() const { return eisenstein_; }

    /// p^P.
    std::int64_t modulus() const { return pP_; }
    /// Coefficients of p/π as a polynomial of degree < e in π.
    const std::vector<WCoeffs>& p_over_pi() const { return p_over_pi_; }

    bool operator==(const TowerConfig& o) const;

    // Arithmetic in W(k)/p^P on raw coordinate arrays of length f.
    void w_mul(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
    /// out += a * b
    void w_mul_acc(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;
    WCoeffs w_inverse(const WCoeffs& unit) const;
    /// min over coordinates of v_p; -1 for zero.
    int w_valuation(const std::int64_t* a) const;
    WCoeffs teichmuller_lift(const ResidueElement& c) const;
    ResidueElement w_residue(const std::int64_t* a) const;

private:
    TowerConfig(Field field, int e, std::vector<WCoeffs> eisenstein, int precision);

    Field field_;
    int e_;
    int precision_;
    std::int64_t pP_;
    std::vector<WCoeffs> eisenstein_;
    std::vector<WCoeffs> p_over_pi_;
    // Lifted modulus reduction t^(f+k) mod (modulus, p^P), for 0 <= k < f-1.
    std::vector<WCoeffs> high_powers_;
};

void require_same_config(const Config& a, const Config& b);

/// An element of K_n = K(π_n), π_n^(p^n) = π, known modulo π_n^cutoff.
///
/// Stored as π_n^shift * Σ_{j < e p^n} c_j π_n^j with c_j in W(k)/p^P, reduced
/// modulo the relation E(π_n^(p^n)) = 0. The coefficients are canonical: every
/// digit at or beyond the cutoff is zeroed, so equal elements compare equal.
class TowerElement {
public:
    static constexpr std::int64_t kExact = INT64_MAX;

    /// Exact zero (valuation +inf).
    static TowerElement zero(const Config& cfg, int level);
    /// π_n^shift * Σ coeffs[j] π_n^j at full precision. `coeffs` may be longer
    /// than e p^n; it is reduced.
    static TowerElement from_coeffs(const Config& cfg, int level, std::int64_t shift,
                                    const std::vector<WCoeffs>& coeffs);
    static TowerElement from_integer(const Config& cfg, int level, std::int64_t value);
    /// [c] π_n^index, with [c] the Teichmüller lift.
    static TowerElement teichmuller(const Config& cfg, int level, const ResidueElement& c, std::int64_t index);
    /// π_level.
    static TowerElement uniformizer(const Config& cfg, int level);
    /// η_m = π_m^{-1}, expressed at `level` >= m.
    static TowerElement eta(const Config& cfg, int m, int level);

    const Config& config() const { return cfg_; }
    int level() const { return level_; }
    std::int64_t shift() const { return shift_; }
    /// e p^level: number of stored coefficients.
    std::int64_t width() const { return width_; }
    /// Absolute cutoff in π_n units; kExact for exact zero.
    std::int64_t cutoff() const { return cutoff_; }
    bool is_exact_zero() const { return cutoff_ == kExact; }
    /// True when every stored coefficient is zero.
    bool is_zero() const;
    WCoeffs coefficient(std::int64_t j) const;

    Valuation valuation() const;
    /// Smallest index (π_n units) of a nonzero digit, or the cutoff when zero.
    std::int64_t order() const;

    TowerElement operator+(const TowerElement& y) const;
    TowerElement operator-(const TowerElement& y) const;
    TowerElement operator-() const;
    TowerElement operator*(const TowerElement& y) const;
    TowerElement& operator+=(const TowerElement& y) { return *this = *this + y; }
    TowerElement& operator-=(const TowerElement& y) { return *this = *this - y; }
    TowerElement& operator*=(const TowerElement& y) { return *this = *this * y; }

    /// Multiplication by π_n^j, j in Z.
    TowerElement mul_pi_power(std::int64_t j) const;
    TowerElement pow(unsigned k) const;
    /// The same element known only modulo π_n^c (no-op when c >= cutoff).
    TowerElement with_cutoff(std::int64_t c) const;
    /// Same element of K_∞ seen in K_target (target >= level).
    TowerElement embed(int target) const;

    /// Structural equality (same config, level, shift, cutoff and digits).
    bool operator==(const TowerElement& y) const;

    std::string to_string() const;

private:
    TowerElement(Config cfg, int level);

    void normalize();
    /// Coefficient vector multiplied by π_n^delta, reduced.
    std::vector<std::int64_t> shifted(std::int64_t delta) const;
    void reduce_high(std::vector<std::int64_t>& poly) const;

    Config cfg_;
    int level_ = 0;
    std::int64_t width_ = 0;
    std::int64_t shift_ = 0;
    std::int64_t cutoff_ = kExact;
    std::vector<std::int64_t> c_;  // width_ * f

    friend std::map<std::int64_t, ResidueElement> teichmuller_expand(const TowerElement&, std::int64_t,
                                                                    std::int64_t);
    friend std::vector<TowerElement> coefficients_over_base(const TowerElement&);
};

inline Valuation valuation(const TowerElement& x) { return x.valuation(); }
inline TowerElement embed(const TowerElement& x, int target) { return x.embed(target); }

/// The a_i in K with x = Σ_{i < p^n} a_i π_n^i (level-0 elements).
std::vector<TowerElement> coefficients_over_base(const TowerElement& x);
/// Inverse of coefficients_over_base.
TowerElement from_base_coefficients(const Config& cfg, int level, const std::vector<TowerElement>& a);

/// Digits c_i of x = Σ [c_i] π_n^i for lo <= i < hi. Throws PrecisionExhausted
/// when hi exceeds the cutoff.
std::map<std::int64_t, ResidueElement> teichmuller_expand(const TowerElement& x, std::int64_t lo, std::int64_t hi);

/// Residue in k of an element of valuation >= 0.
ResidueElement residue(const TowerElement& x);

}  // namespace axtower
