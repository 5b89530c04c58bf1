#include "sombor/radical_sum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numeric>
#include <optional>

namespace sombor {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

// Per-term relative error allowance at each rung of the ladder.
const double kDoubleTermError = std::ldexp(1.0, -40);
const Quad kQuadTermError = Quad(std::ldexp(1.0, -100));

struct SignedTerm {
    std::uint64_t radicand;
    std::int64_t coefficient;
};

// Reduced a - b with zero coefficients dropped.
std::vector<SignedTerm> reduced_difference(const RadicalSum& a, const RadicalSum& b) {
    std::map<std::uint64_t, std::int64_t> diff;
    for (auto [q, c] : a.reduced()) diff[q] += static_cast<std::int64_t>(c);
    for (auto [q, c] : b.reduced()) diff[q] -= static_cast<std::int64_t>(c);
    std::vector<SignedTerm> out;
    for (auto [q, c] : diff)
        if (c != 0) out.push_back({q, c});
    return out;
}

template <typename Real>
std::optional<std::strong_ordering> decide(const std::vector<SignedTerm>& terms, const Real& term_error) {
    using std::abs;
    using std::sqrt;
    Real sum = 0;
    Real magnitude = 0;
    for (const auto& t : terms) {
        Real root = sqrt(Real(t.radicand));
        Real term = Real(t.coefficient) * root;
        sum += term;
        magnitude += abs(term);
    }
    Real bound = magnitude * term_error * Real(terms.size() + 1);
    if (sum > bound) return std::strong_ordering::greater;
    if (sum < -bound) return std::strong_ordering::less;
    return std::nullopt;
}

}  // namespace

RadicalSum::RadicalSum(std::initializer_list<std::pair<const Radicand, Multiplicity>> terms) {
    for (auto [r, m] : terms) add(r, m);
}

void RadicalSum::add(Radicand radicand, Multiplicity count) {
    if (radicand == 0) throw std::invalid_argument("RadicalSum: radicand must be positive");
    if (count == 0) return;
    terms_[radicand] += count;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
    for (auto [r, m] : other.terms_) add(r, m);
    return *this;
}

double RadicalSum::value() const {
    double sum = 0.0;
    for (auto [r, m] : terms_) sum += static_cast<double>(m) * std::sqrt(static_cast<double>(r));
    return sum;
}

std::map<RadicalSum::Radicand, RadicalSum::Multiplicity> RadicalSum::reduced() const {
    std::map<Radicand, Multiplicity> out;
    for (auto [r, m] : terms_) {
        auto [s, q] = extract_square(r);
        out[q] += s * m;
    }
    return out;
}

std::string RadicalSum::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [r, m] : terms_) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(r) + ":" + std::to_string(m);
    }
    return out + "}";
}

std::vector<std::pair<RadicalSum::Radicand, RadicalSum::Multiplicity>> RadicalSum::pairs() const {
    return {terms_.begin(), terms_.end()};
}

bool operator==(const RadicalSum& a, const RadicalSum& b) {
    return a.same_terms(b) || a.reduced() == b.reduced();
}

std::pair<std::uint64_t, std::uint64_t> extract_square(std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("extract_square: zero");
    std::uint64_t s = 1;
    for (std::uint64_t p = 2; p * p <= r; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            s *= p;
        }
    }
    return {s, r};
}

std::strong_ordering compare_exact(const RadicalSum& a, const RadicalSum& b) {
    // Square roots of distinct square-free integers are linearly independent
    // over Q, so a nonzero reduced difference is a nonzero real.
    auto diff = reduced_difference(a, b);
    if (diff.empty()) return std::strong_ordering::equal;
    if (auto r = decide<double>(diff, kDoubleTermError)) return *r;
    if (auto r = decide<Quad>(diff, kQuadTermError)) return *r;
    throw PrecisionExhausted("compare_exact: " + a.to_string() + " vs " + b.to_string() +
                             " not separable at 113-bit precision");
}

}  // namespace sombor
