#pragma once

#include "sombor/graph.hpp"

#include <compare>
#include <string>

namespace sombor {

enum class GraphKind { Tree, Unicyclic };

/// Isomorphism certificate for trees and connected unicyclic graphs.
struct CanonicalCode {
    GraphKind kind = GraphKind::Tree;
    std::string code;

    /// "T:" or "U:" followed by the parenthesis string.
    std::string to_string() const;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// AHU parenthesis string of the subtree hanging from root, never stepping
/// onto a vertex with blocked[v] set.
std::string rooted_code(const Graph& g, Vertex root, const std::vector<char>& blocked);

/// Trees are encoded from their center (smaller encoding over the two roots of
/// a bicenter). Unicyclic graphs are encoded as the dihedrally smallest
/// sequence of the rooted codes hanging from the cycle.
CanonicalCode canonical_code(const Graph& g);

/// Backtracking isomorphism test with degree pruning, order <= 8.
bool are_isomorphic_oracle(const Graph& a, const Graph& b);
constexpr int kIsomorphismOracleLimit = 8;

}  // namespace sombor
