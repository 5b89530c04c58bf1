#pragma once

#include "sombor/canonical.hpp"
#include "sombor/radical_sum.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sombor {

/// Exact extremum of the Sombor index over one (n, m) class.
struct ExtremalRecord {
    int n = 0;
    int m = 0;
    GraphKind graph_class = GraphKind::Tree;
    std::size_t class_size = 0;
    RadicalSum max_value;
    std::vector<CanonicalCode> argmax_codes;  // sorted
    std::vector<std::string> argmax_graph6;   // parallel to argmax_codes
    RadicalSum predicted;
    CanonicalCode predicted_code;
    bool pass = false;

    bool unique() const { return argmax_codes.size() == 1; }
};

/// Per-order bookkeeping: enumerated = sum of class sizes + outside_range,
/// where outside_range counts graphs whose matching number is outside [2, n/2].
struct ClassTotal {
    int n = 0;
    GraphKind graph_class = GraphKind::Tree;
    std::size_t enumerated = 0;
    std::size_t outside_range = 0;
};

struct TheoremReport {
    std::vector<ExtremalRecord> records;
    std::vector<ClassTotal> totals;

    bool pass() const;
};

struct Counterexample {
    std::string graph6;
    std::string detail;
};

struct LemmaReport {
    std::string lemma;
    std::size_t instances = 0;
    std::vector<Counterexample> counterexamples;

    bool pass() const { return counterexamples.empty(); }
};

/// All trees of order 4..n_max (n_max <= 16), every 2 <= m <= n/2, against
/// T_{n,m} and tree_upper_bound. Orders are spread over `workers` threads;
/// the report does not depend on the worker count.
TheoremReport verify_tree_theorem(int n_max, int workers = 1);

/// Same for connected unicyclic graphs of order 4..n_max (n_max <= 13).
TheoremReport verify_unicyclic_theorem(int n_max, int workers = 1);

/// Both sides of the perfect-matching bounds for m = 2..m_max (m_max <= 7):
/// P_{2m} and C_{2m} are the unique minima, T_{2m,m} and U_{2m,m} the unique
/// maxima. Returns one report per side and class.
std::vector<LemmaReport> verify_perfect_matching_bounds(int m_max, int workers = 1);

/// Sun graph on C_m has value {18:m, 10:m} and sits strictly below
/// unicyclic_upper_bound(2m, m), for m = 3..m_max.
LemmaReport verify_sun_checkpoint(int m_max);

/// Pendant-vertex lemmas over all trees and unicyclic graphs of order <= n_max (<= 12).
std::vector<LemmaReport> verify_structural_lemmas(int n_max, int workers = 1);

/// h1(x) = sqrt(x^2+a) - sqrt((x-1)^2+a) strictly increasing and
/// h2(x) = sqrt(x^2+b^2) - sqrt(x^2+(b-1)^2) strictly decreasing on 2 <= x <= x_max.
LemmaReport verify_lemma21(int a_max, int b_max, int x_max);

/// Random valid neighbor shifts on random connected graphs with 4..12 vertices.
LemmaReport verify_neighbor_shift(std::size_t trials, std::uint64_t seed);

}  // namespace sombor
