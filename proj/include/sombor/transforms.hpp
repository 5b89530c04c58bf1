#pragma once

#include "sombor/graph.hpp"

#include <stdexcept>

namespace sombor {

class TransformError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge u0v0 whose v0-side neighbors move over to u0.
struct ShiftSpec {
    Vertex u0 = 0;
    Vertex v0 = 0;
};

/// Re-attaches every neighbor of v0 other than u0 to u0, leaving v0 pendant.
///
/// Requires u0v0 to be an edge, N(u0) and N(v0) disjoint, and both endpoints
/// to have a neighbor besides each other. The Sombor index strictly grows.
Graph neighbor_shift(const Graph& g, ShiftSpec spec);

/// True when spec satisfies every neighbor_shift precondition on g.
bool is_valid_shift(const Graph& g, ShiftSpec spec);

/// With the cycle listed by cycle_order as c_0 .. c_{k-1}, replaces edge
/// c_i c_{i+1} by c_i c_{i+2} (indices mod k). Needs k >= 4.
Graph cycle_rewire(const Graph& g, int position);

}  // namespace sombor
