#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace axtower {

class ResidueField;
using Field = std::shared_ptr<const ResidueField>;

/// The finite field k = F_p[t]/(modulus) with q = p^f elements.
///
/// Supported range is p <= 97, f <= 8; the modulus must be monic and
/// irreducible over F_p. Both are checked on construction.
class ResidueField {
public:
    static constexpr std::int64_t kMaxPrime = 97;
    static constexpr int kMaxDegree = 8;

    /// `modulus` lists f+1 coefficients, constant term first, leading 1.
    static Field make(std::int64_t p, std::vector<std::int64_t> modulus);
    /// F_p, presented by the modulus t.
    static Field prime(std::int64_t p);

    std::int64_t p() const { return p_; }
    int degree() const { return f_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    bool operator==(const ResidueField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

    /// Reduction of t^(f+k) in the modulus basis, for 0 <= k < f-1.
    const std::vector<std::int64_t>& high_power(int k) const { return high_powers_[k]; }

private:
    ResidueField(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t p_;
    int f_;
    std::uint64_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::vector<std::int64_t>> high_powers_;
};

bool same_field(const Field& a, const Field& b);

/// An element of k as f coordinates in {0, ..., p-1}.
class ResidueElement {
public:
    ResidueElement(Field field, std::vector<std::int64_t> coords);

    static ResidueElement zero(const Field& field);
    static ResidueElement one(const Field& field);
    static ResidueElement from_int(const Field& field, std::int64_t c);
    /// Enumeration order: coordinates read as base-p digits, c_0 least significant.
    static ResidueElement from_index(const Field& field, std::uint64_t index);
    std::uint64_t index() const;

    const Field& field() const { return field_; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    bool is_zero() const;

    ResidueElement operator+(const ResidueElement& b) const;
    ResidueElement operator-(const ResidueElement& b) const;
    ResidueElement operator-() const;
    ResidueElement operator*(const ResidueElement& b) const;
    ResidueElement& operator+=(const ResidueElement& b) { return *this = *this + b; }
    ResidueElement& operator*=(const ResidueElement& b) { return *this = *this * b; }

    ResidueElement inv() const;
    ResidueElement operator/(const ResidueElement& b) const { return *this * b.inv(); }
    ResidueElement pow(std::uint64_t e) const;

    bool operator==(const ResidueElement& b) const;

    /// "[c_0,...,c_{f-1}]"
    std::string to_string() const;

private:
    void check_same(const ResidueElement& b) const;

    Field field_;
    std::vector<std::int64_t> coords_;
};

/// a^(p^s).
ResidueElement frobenius(const ResidueElement& a, std::uint64_t s);
/// The unique b with frobenius(b, s) == a.
ResidueElement frobenius_inverse(const ResidueElement& a, std::uint64_t s);

using ResidueVector = std::vector<ResidueElement>;

/// Basis of the right kernel of `rows` (each of length `ncols`) over k.
std::vector<ResidueVector> kernel_basis(const Field& field, const std::vector<ResidueVector>& rows,
                                        std::size_t ncols);

/// Lexicographically smallest nonzero vector (coordinates compared by
/// ResidueElement::index) in the span of `basis`; nullopt for the zero space.
std::optional<ResidueVector> lex_first_nonzero(const Field& field, std::vector<ResidueVector> basis);

}  // namespace axtower
