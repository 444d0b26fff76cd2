#include "axtower/twistrec.hpp"

#include "axtower/errors.hpp"

#include <functional>

namespace axtower {

TwistRelation::TwistRelation(Field field, std::vector<ResidueElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& d : coeffs_)
        if (!same_field(d.field(), field_)) throw FieldMismatch("relation coefficient from a different field");
    bool any = false;
    for (const auto& d : coeffs_) any = any || !d.is_zero();
    if (!any) throw InvalidArgument("relation coefficients are all zero");
}

int TwistRelation::leading_zeros() const {
    int k = 0;
    while (coeffs_[k].is_zero()) ++k;
    return k;
}

int TwistRelation::trailing_zeros() const {
    int k = 0;
    while (coeffs_[coeffs_.size() - 1 - k].is_zero()) ++k;
    return k;
}

TwistRelation TwistRelation::canonical() const {
    // Σ_{s>=k} d_s x_{n+s}^{p^s} = 0 is the p^k-th power of Σ_s d_{s+k}^{1/p^k} x_{n+k+s}^{p^s} = 0.
    const int k = leading_zeros();
    std::vector<ResidueElement> c;
    for (std::size_t s = k; s + trailing_zeros() < coeffs_.size(); ++s)
        c.push_back(frobenius_inverse(coeffs_[s], k));
    return TwistRelation(field_, std::move(c));
}

std::string TwistRelation::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + coeffs_[i].to_string();
    return s + ")";
}

namespace {

ResidueElement window_value(const TwistSequence& seq, const TwistRelation& rel, std::size_t n) {
    auto acc = ResidueElement::zero(rel.field());
    for (int s = 0; s <= rel.order(); ++s) acc += rel.coeffs()[s] * frobenius(seq[n + s], s);
    return acc;
}

}  // namespace

bool check_relation(const TwistSequence& seq, const TwistRelation& rel) {
    const auto r = static_cast<std::size_t>(rel.order());
    if (seq.size() < r + 1)
        throw WindowTooShort("sequence of length " + std::to_string(seq.size()) + " has no window of size " +
                             std::to_string(r + 1));
    for (const auto& x : seq)
        if (!same_field(x.field(), rel.field())) throw FieldMismatch("sequence and relation over different fields");
    for (std::size_t n = 0; n + r < seq.size(); ++n)
        if (!window_value(seq, rel, n).is_zero()) return false;
    return true;
}

std::optional<TwistRelation> find_relation(const Field& field, const TwistSequence& seq, int r_max) {
    if (r_max < 0) throw InvalidArgument("r_max must be >= 0");
    if (seq.size() < static_cast<std::size_t>(std::max(2 * r_max, 1)))
        throw WindowTooShort("need at least 2*r_max terms to search relations up to order " + std::to_string(r_max));
    for (const auto& x : seq)
        if (!same_field(x.field(), field)) throw FieldMismatch("sequence element from a different field");
    for (int r = 0; r <= r_max; ++r) {
        std::vector<ResidueVector> rows;
        for (std::size_t n = 0; n + r < seq.size(); ++n) {
            ResidueVector row;
            for (int s = 0; s <= r; ++s) row.push_back(frobenius(seq[n + s], s));
            rows.push_back(std::move(row));
        }
        auto v = lex_first_nonzero(field, kernel_basis(field, rows, r + 1));
        if (v) return TwistRelation(field, *v);
    }
    return std::nullopt;
}

TwistSequence extend_sequence(const TwistRelation& rel, const TwistSequence& seed, std::size_t count) {
    const int r = rel.order();
    if (!rel.dr_nonzero())
        throw LeadingCoefficientZero("d_r = 0: the relation cannot be run forward");
    if (seed.size() != static_cast<std::size_t>(r))
        throw InvalidArgument("expected " + std::to_string(r) + " seed values");
    for (const auto& x : seed)
        if (!same_field(x.field(), rel.field())) throw FieldMismatch("seed from a different field");
    TwistSequence out = seed;
    const auto neg_inv = -rel.coeffs().back().inv();
    while (out.size() < count) {
        const std::size_t n = out.size() - r;
        auto acc = ResidueElement::zero(rel.field());
        for (int s = 0; s < r; ++s) acc += rel.coeffs()[s] * frobenius(out[n + s], s);
        out.push_back(frobenius_inverse(neg_inv * acc, r));
    }
    if (out.size() > count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
    return out;
}

std::uint64_t solution_count(const TwistRelation& rel, std::size_t length) {
    const auto q = rel.field()->order();
    const int r = rel.order();
    if (q > 4 || r > 2) throw UnsupportedConfig("exhaustive count needs q <= 4 and r <= 2");
    if (length < static_cast<std::size_t>(r) + 1) throw WindowTooShort("length must exceed the order");
    if (length > 11) throw UnsupportedConfig("exhaustive count limited to length <= 11");
    TwistSequence seq(length, ResidueElement::zero(rel.field()));
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == length) {
            ++count;
            return;
        }
        for (std::uint64_t v = 0; v < q; ++v) {
            seq[pos] = ResidueElement::from_index(rel.field(), v);
            // The window ending at pos is complete once pos >= r.
            if (pos >= static_cast<std::size_t>(r) && !window_value(seq, rel, pos - r).is_zero()) continue;
            rec(pos + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace axtower
