#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

/// Exact value sum(mult * sqrt(radicand)) kept as a multiset of radicands.
///
/// Terms are stored as given (no square-factor extraction), so a value built
/// from edge degrees reads back exactly as the edge list produced it. Equality
/// and ordering work on the reduced form, where every radicand is square-free:
/// {20:1} == {5:2}.
class RadicalSum {
public:
    using Radicand = std::uint64_t;
    using Multiplicity = std::uint64_t;

    RadicalSum() = default;
    RadicalSum(std::initializer_list<std::pair<const Radicand, Multiplicity>> terms);

    /// Radicands must be >= 1; zero multiplicities are ignored.
    void add(Radicand radicand, Multiplicity count = 1);
    RadicalSum& operator+=(const RadicalSum& other);
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }

    const std::map<Radicand, Multiplicity>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Ascending radicand order, so the result is reproducible bit for bit.
    double value() const;

    /// Square-free radicand -> integer coefficient.
    std::map<Radicand, Multiplicity> reduced() const;

    /// Raw multiset identity, stronger than ==.
    bool same_terms(const RadicalSum& other) const { return terms_ == other.terms_; }

    /// "{5:2,8:1}"
    std::string to_string() const;
    /// [[5,2],[8,1]] pairs, sorted by radicand.
    std::vector<std::pair<Radicand, Multiplicity>> pairs() const;

    friend bool operator==(const RadicalSum& a, const RadicalSum& b);

private:
    std::map<Radicand, Multiplicity> terms_;
};

/// Thrown when two different reduced sums cannot be separated at the highest
/// available precision. Never a tie.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Splits r = s^2 * q with q square-free; returns {s, q}.
std::pair<std::uint64_t, std::uint64_t> extract_square(std::uint64_t r);

/// Exact three-way comparison. Equal reduced forms give `equal`; otherwise the
/// sign of the difference is settled in double precision with a rigorous error
/// bound, then in ~113-bit binary floating point.
std::strong_ordering compare_exact(const RadicalSum& a, const RadicalSum& b);

}  // namespace sombor
