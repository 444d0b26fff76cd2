#pragma once

#include "axtower/tower.hpp"

#include <map>
#include <optional>

namespace axtower {

/// Λ(x) = inf over σ of v(σx - x), through the per-index formula.
struct OscillationReport {
    Valuation oscillation = Valuation::infinite();
    /// i -> v(a_i) + i/(e p^n) + p^{v_p(i)}/(p^{n-1}(p-1)), for 1 <= i < p^n with a_i not exactly zero.
    std::map<std::int64_t, Valuation> per_index_terms;
    std::optional<std::int64_t> argmin_index;
};

OscillationReport galois_oscillation(const TowerElement& x);

/// The element y of K_m maximizing v(x - y): keeps the a_i with p^{n-m} | i.
TowerElement best_approximant(const TowerElement& x, int m);

/// v(x - best_approximant(x, m)), by the closed formula; cross-checked against
/// the direct subtraction (a mismatch is a library bug and throws logic_error).
Valuation approximation_defect(const TowerElement& x, int m);

struct IdentityReport {
    Valuation lhs = Valuation::infinite();  // Λ(x)
    Valuation rhs = Valuation::infinite();  // min_m defect(x, m) + 1/(p^m(p-1))
    bool holds() const { return lhs == rhs; }
};

IdentityReport oscillation_identity(const TowerElement& x);

/// The two sides of the equivalence "Λ(x) >= A" vs "defect(x, m) >= A - 1/(p^m(p-1)) for all m".
struct EquivalenceReport {
    bool oscillation_side = false;
    bool approximation_side = false;
    bool agree() const { return oscillation_side == approximation_side; }
};

EquivalenceReport approximation_equivalence(const TowerElement& x, const Rational& A);

struct AxConstants {
    Rational optimal;      // 1/(p^m(p-1))
    Rational ax_original;  // p/(p-1)^2
};

AxConstants ax_constants(std::int64_t p, int m);

/// Brute-force Λ(x) over the explicit conjugates π_n -> ζ^a π_n in
/// L = Q(ζ_{p^n}, p^{1/p^n}), with valuations from exact norms. Only for
/// e = 1, f = 1 and (p, n) in {(2,1), (2,2), (3,1)}.
Valuation cyclotomic_oracle_oscillation(const TowerElement& x);

/// Same, for x = Σ terms[k] π_n^k with exact rational coefficients.
Valuation cyclotomic_oracle_oscillation(std::int64_t p, int n, const std::map<std::int64_t, Rational>& terms);

}  // namespace axtower
