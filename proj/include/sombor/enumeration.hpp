#pragma once

#include "sombor/graph.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sombor {

class EnumerationLimit : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr int kMaxTreeOrder = 18;
constexpr int kMaxUnicyclicOrder = 14;

/// Level sequence (root at level 0, preorder) to a tree labeled in preorder.
Graph tree_from_levels(const std::vector<int>& levels);

/// Pull-style stream of free trees on n vertices, one per isomorphism class.
///
/// Walks canonical level sequences rooted at the center in the order of
/// Wright, Richmond, Odlyzko and McKay; each step is constant amortized time.
class TreeGenerator {
public:
    explicit TreeGenerator(int n);

    std::optional<Graph> next();
    /// Level sequence of the tree last returned by next().
    const std::vector<int>& levels() const { return current_; }

private:
    int n_;
    std::optional<std::vector<int>> pending_;
    std::vector<int> current_;
};

/// All rooted trees on s vertices as canonical level sequences, in
/// Beyer-Hedetniemi successor order.
std::vector<std::vector<int>> rooted_trees(int s);

using GraphVisitor = std::function<void(const Graph&)>;

void for_each_tree(int n, const GraphVisitor& visit);

/// Connected unicyclic graphs on n vertices, one per isomorphism class.
/// Passing cycle_length restricts to one shard.
void for_each_unicyclic(int n, const GraphVisitor& visit, std::optional<int> cycle_length = std::nullopt);

std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_unicyclic(int n);

/// Groups graphs by matching number.
std::map<std::size_t, std::vector<Graph>> partition_by_matching(const std::vector<Graph>& graphs);

}  // namespace sombor
