#pragma once

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

#include <functional>

namespace sombor {

/// One radicand d(u)^2 + d(v)^2 per edge.
RadicalSum sombor_exact(const Graph& g);

/// Floating value of sombor_exact, summed in ascending radicand order.
double sombor_value(const Graph& g);

using EdgeWeight = std::function<double(int, int)>;

/// Sum of weight(d(u), d(v)) over edges, in edge order.
double degree_index(const Graph& g, const EdgeWeight& weight);

}  // namespace sombor
