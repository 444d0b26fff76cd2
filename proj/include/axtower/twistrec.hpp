#pragma once

#include "axtower/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace axtower {

/// d_0 x_n + d_1 x_{n+1}^p + ... + d_r x_{n+r}^{p^r} = 0.
class TwistRelation {
public:
    /// Not all coefficients may be zero. Coefficients are kept as given, so the
    /// order (and the number of windows checked) is coeffs.size() - 1.
    TwistRelation(Field field, std::vector<ResidueElement> coeffs);

    const Field& field() const { return field_; }
    const std::vector<ResidueElement>& coeffs() const { return coeffs_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool d0_nonzero() const { return !coeffs_.front().is_zero(); }
    bool dr_nonzero() const { return !coeffs_.back().is_zero(); }
    /// Copy with leading and trailing zero coefficients removed. Dropping k
    /// leading zeros shifts the index by k and twists the rest by Frob^{-k}.
    TwistRelation canonical() const;
    int leading_zeros() const;
    int trailing_zeros() const;

    bool operator==(const TwistRelation& o) const { return coeffs_ == o.coeffs_; }
    /// "([..],[..],...)"
    std::string to_string() const;

private:
    Field field_;
    std::vector<ResidueElement> coeffs_;
};

using TwistSequence = std::vector<ResidueElement>;

/// True iff the relation holds on every window of the sequence.
bool check_relation(const TwistSequence& seq, const TwistRelation& rel);

/// Smallest-order relation annihilating the data, with the lexicographically
/// first kernel vector; nullopt when none of order <= r_max exists.
std::optional<TwistRelation> find_relation(const Field& field, const TwistSequence& seq, int r_max);

/// Runs the relation forward from r seed values; `count` is the total length.
TwistSequence extend_sequence(const TwistRelation& rel, const TwistSequence& seed, std::size_t count);

/// Exhaustive number of length-`length` sequences satisfying the relation.
std::uint64_t solution_count(const TwistRelation& rel, std::size_t length);

}  // namespace axtower
