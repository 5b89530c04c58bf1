#pragma once

#include "sombor/graph.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sombor {

/// Pairwise vertex-disjoint edges over a graph of a given order.
class Matching {
public:
    /// Throws std::invalid_argument if two edges share a vertex.
    Matching(int order, std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool is_saturated(Vertex v) const { return saturated_.at(v) != 0; }
    std::vector<Vertex> saturated() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<char> saturated_;
};

/// Forests and graphs with a single cycle only.
std::size_t matching_number(const Graph& g);
Matching maximum_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

/// Exhaustive search for any simple graph with at most 24 edges.
std::size_t brute_force_matching_number(const Graph& g);
constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Calls visit for every maximum matching of g (any simple graph, n <= 24)
/// until it returns false. Each matching is produced once.
void for_each_maximum_matching(const Graph& g, const std::function<bool(const Matching&)>& visit);

}  // namespace sombor
