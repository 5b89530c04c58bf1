#include "sombor/indices.hpp"

namespace sombor {

RadicalSum sombor_exact(const Graph& g) {
    RadicalSum out;
    for (const Edge& e : g.edges()) {
        auto du = static_cast<RadicalSum::Radicand>(g.degree(e.u));
        auto dv = static_cast<RadicalSum::Radicand>(g.degree(e.v));
        out.add(du * du + dv * dv);
    }
    return out;
}

double sombor_value(const Graph& g) { return sombor_exact(g).value(); }

double degree_index(const Graph& g, const EdgeWeight& weight) {
    double sum = 0.0;
    for (const Edge& e : g.edges()) sum += weight(g.degree(e.u), g.degree(e.v));
    return sum;
}

}  // namespace sombor
