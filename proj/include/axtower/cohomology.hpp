#pragma once

#include "axtower/tower.hpp"
#include "axtower/twistrec.hpp"

#include <map>
#include <utility>
#include <vector>

namespace axtower {

/// A representative ξ of a class in (K̄/O_K̄)^G, read modulo K.
struct InvariantClass {
    TowerElement rep;
    /// ξ minus its best approximation in K; the representative every other
    /// operation works with.
    TowerElement normalized;
    Valuation oscillation = Valuation::infinite();
    Valuation normalized_valuation = Valuation::infinite();
    bool validated = false;
};

/// validated = Λ(ξ) >= 0 and v(ξ - y) >= -1/(p-1) for the best y in K.
InvariantClass validate_invariant(const TowerElement& xi);

/// Same class in H^1: the normalized representatives differ by an integral element.
bool same_class(const InvariantClass& a, const InvariantClass& b);

struct TorsionReport {
    int n = 0;      // smallest n with π^n ξ in K + O
    int bound = 0;  // ceil(e/(p-1))
    bool within_bound() const { return n <= bound; }
};

TorsionReport torsion_check(const InvariantClass& cls);

/// Digits x_1, ..., x_count with ξ = Σ [x_m] η_m (mod integral), e = 1.
std::vector<ResidueElement> psi_digits(const InvariantClass& cls, int count);

/// For e <= p-1: result[j-1][m-1] is the digit at η_m^j, 1 <= j <= e.
std::vector<std::vector<ResidueElement>> psi_digit_families(const InvariantClass& cls, int count);

/// ξ_0 = normalized rep, ξ_{s+1} = ξ_s^p - [t_s] η_0 with t_s the η_0-digit of ξ_s^p (e = 1).
std::vector<TowerElement> xi_tower_sequence(const InvariantClass& cls, int s_max);

/// A relation Σ d_s ψ(ξ_s) = 0 from the K-linear dependence of the ξ_s (e = 1),
/// tested on the windows m = 1..n-r of the level-n digits; orders 1..r_max, r_max <= n/2
/// (default n/2).
TwistRelation find_K_linear_dependence(const std::vector<TowerElement>& xis, int r_max = -1);

/// P(X) = C + Σ_s δ_s X^{p^s}, δ_s = [d_s], with constant term
/// C = -Σ_{m=1}^{r} (Σ_{s=r+1-m}^{r} δ_s [x_{m+s}]^{p^s}) η_m.
struct AdditiveWitnessPolynomial {
    Config config;
    TwistRelation relation;
    std::vector<ResidueElement> digits;  // x_1, x_2, ...
    std::vector<TowerElement> delta;     // δ_0..δ_r at level 0
    TowerElement constant;               // at level r

    /// P(y) with y at any level >= r.
    TowerElement evaluate(const TowerElement& y) const;
};

/// Needs at least 2r digits (x_1..x_{2r}).
AdditiveWitnessPolynomial build_witness_polynomial(const Config& cfg, const TwistRelation& rel,
                                                   const std::vector<ResidueElement>& digit_prefix);

/// ξ_n = Σ_{i=r+1}^{n+r} [x_i] η_i, extending the digits with the relation.
TowerElement witness_partial_root(const AdditiveWitnessPolynomial& P, int n);

/// v(P(ξ_n)).
Valuation approximate_root_defect(const AdditiveWitnessPolynomial& P, int n);

/// Coefficient valuations of Q(y) = P(ξ_n + y η_{n+r+1}), degree -> valuation.
std::map<std::int64_t, Valuation> stage_polynomial_valuations(const AdditiveWitnessPolynomial& P, int n);

struct NewtonSegment {
    Rational slope;
    std::int64_t length = 0;
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments;
    /// Lowest degree with a nonzero coefficient: the multiplicity of the root 0.
    std::int64_t zero_roots = 0;
};

/// Lower convex hull of the points (j, v(b_j)).
NewtonPolygon newton_polygon(const std::map<std::int64_t, Valuation>& coeff_valuations);

/// Some root has valuation > 0 (a slope < 0, or the root 0).
bool has_positive_valuation_root(const NewtonPolygon& np);
/// Some root has valuation >= 0 (a slope <= 0, or the root 0).
bool has_integral_root(const NewtonPolygon& np);

struct IndexSet {
    std::int64_t p = 0;
    int e = 0;
    int r = 0;
    std::int64_t tau = 0;
    std::int64_t rho = 0;
    std::vector<std::pair<int, std::int64_t>> pairs;    // I, for i with r p^i < rho
    std::vector<std::pair<int, std::int64_t>> pairs_r;  // I_r
    Rational bound;                                      // pe/(r(p-1)^2)
    bool within_bound() const { return Rational(static_cast<std::int64_t>(pairs_r.size())) <= bound; }
};

IndexSet index_sets(std::int64_t p, int e, int r);

/// γ_{i,j} = max{s in (τ, ρ] : p^i | s - j}.
std::int64_t gamma_index(std::int64_t p, int e, int i, std::int64_t j);

/// β_{i,γ} with ξ = Σ β_{i,γ} η_i^γ modulo K + O_K̄.
std::map<std::pair<int, std::int64_t>, TowerElement> ramified_support(const InvariantClass& cls);

/// Σ β_{i,γ} η_i^γ at the given level.
TowerElement resum_ramified_support(const Config& cfg, int level,
                                    const std::map<std::pair<int, std::int64_t>, TowerElement>& support);

}  // namespace axtower
