#include "sombor/transforms.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace sombor {

namespace {

void check_shift(const Graph& g, ShiftSpec spec) {
    if (spec.u0 < 0 || spec.u0 >= g.order() || spec.v0 < 0 || spec.v0 >= g.order())
        throw TransformError("shift: vertex outside the graph");
    if (!g.has_edge(spec.u0, spec.v0))
        throw TransformError("shift: " + std::to_string(spec.u0) + "-" + std::to_string(spec.v0) +
                             " is not an edge");
    auto nu = g.neighbors(spec.u0);
    auto nv = g.neighbors(spec.v0);
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty())
        throw TransformError("shift: endpoints share neighbor " + std::to_string(common.front()));
    if (nu.size() < 2) throw TransformError("shift: u0 has no neighbor besides v0");
    if (nv.size() < 2) throw TransformError("shift: v0 has no neighbor besides u0");
}

}  // namespace

bool is_valid_shift(const Graph& g, ShiftSpec spec) {
    try {
        check_shift(g, spec);
        return true;
    } catch (const TransformError&) {
        return false;
    }
}

Graph neighbor_shift(const Graph& g, ShiftSpec spec) {
    check_shift(g, spec);
    std::vector<Edge> es;
    es.reserve(g.size());
    for (const Edge& e : g.edges()) {
        const bool at_v0 = e.u == spec.v0 || e.v == spec.v0;
        const Vertex other = e.u == spec.v0 ? e.v : e.u;
        if (at_v0 && other != spec.u0) {
            if (g.has_edge(spec.u0, other))
                throw TransformError("shift: moving " + std::to_string(other) + " would duplicate an edge");
            es.emplace_back(spec.u0, other);
        } else {
            es.push_back(e);
        }
    }
    return Graph::from_edges(g.order(), es);
}

Graph cycle_rewire(const Graph& g, int position) {
    if (!is_unicyclic(g)) throw TransformError("cycle_rewire: graph is not unicyclic");
    auto cycle = cycle_order(g);
    const int k = static_cast<int>(cycle.size());
    if (k < 4) throw TransformError("cycle_rewire: cycle of length 3 would gain a duplicate edge");
    if (position < 0 || position >= k)
        throw TransformError("cycle_rewire: position outside [0," + std::to_string(k) + ")");
    const Vertex a = cycle[position];
    const Vertex b = cycle[(position + 1) % k];
    const Vertex c = cycle[(position + 2) % k];
    std::vector<Edge> es = g.edges();
    es.erase(std::find(es.begin(), es.end(), Edge(a, b)));
    es.emplace_back(a, c);
    return Graph::from_edges(g.order(), es);
}

}  // namespace sombor
