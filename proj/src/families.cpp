#include "sombor/families.hpp"

#include <string>
#include <vector>

namespace sombor {

namespace {

void require_matching_range(const char* what, int n, int m) {
    if (m < 2 || 2 * m > n)
        throw ParameterError(std::string(what) + ": need 2 <= m <= n/2, got n=" + std::to_string(n) +
                             " m=" + std::to_string(m));
}

RadicalSum::Radicand sq(int x) { return static_cast<RadicalSum::Radicand>(x) * x; }

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
    if (name == "T") return Family::T;
    if (name == "U") return Family::U;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "sun") return Family::Sun;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::T: return "T";
        case Family::U: return "U";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::Sun: return "sun";
    }
    return "?";
}

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::T: return build_T(spec.n, spec.m);
        case Family::U: return build_U(spec.n, spec.m);
        case Family::Path: return build_path(spec.n);
        case Family::Cycle: return build_cycle(spec.n);
        case Family::Star: return build_star(spec.n);
        case Family::Sun:
            if (spec.n != 2 * spec.m) throw ParameterError("sun: n must equal 2m");
            return build_sun(spec.m);
    }
    throw ParameterError("unknown family");
}

Graph build_T(int n, int m) {
    require_matching_range("build_T", n, m);
    const int leaves = n - m;  // star S_{n-m+1} has n-m leaves
    std::vector<Edge> es;
    for (Vertex leaf = 1; leaf <= leaves; ++leaf) es.emplace_back(0, leaf);
    for (int i = 0; i < m - 1; ++i) es.emplace_back(1 + i, leaves + 1 + i);
    return Graph::from_edges(n, es);
}

Graph build_U(int n, int m) {
    require_matching_range("build_U", n, m);
    const int pendants = n - 2 * m + 1;
    const int paths = m - 2;
    std::vector<Edge> es{{0, 1}, {0, 2}, {1, 2}};
    Vertex next = 3;
    for (int i = 0; i < pendants; ++i) es.emplace_back(0, next++);
    const Vertex first_path = next;
    for (int i = 0; i < paths; ++i) es.emplace_back(0, next++);
    for (int i = 0; i < paths; ++i) es.emplace_back(first_path + i, next++);
    return Graph::from_edges(n, es);
}

Graph build_path(int n) {
    if (n < 1) throw ParameterError("path: need n >= 1");
    std::vector<Edge> es;
    for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph build_cycle(int n) {
    if (n < 3) throw ParameterError("cycle: need n >= 3");
    std::vector<Edge> es;
    for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(0, n - 1);
    return Graph::from_edges(n, es);
}

Graph build_star(int n) {
    if (n < 1) throw ParameterError("star: need n >= 1");
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(0, v);
    return Graph::from_edges(n, es);
}

Graph build_sun(int k) {
    if (k < 3) throw ParameterError("sun: need cycle length >= 3");
    std::vector<Edge> es;
    for (Vertex v = 0; v < k; ++v) {
        es.emplace_back(v, (v + 1) % k);
        es.emplace_back(v, k + v);
    }
    return Graph::from_edges(2 * k, es);
}

RadicalSum tree_upper_bound(int n, int m) {
    require_matching_range("tree_upper_bound", n, m);
    RadicalSum out;
    out.add(sq(n - m) + 1, static_cast<RadicalSum::Multiplicity>(n - 2 * m + 1));
    out.add(sq(n - m) + 4, static_cast<RadicalSum::Multiplicity>(m - 1));
    out.add(5, static_cast<RadicalSum::Multiplicity>(m - 1));
    return out;
}

RadicalSum unicyclic_upper_bound(int n, int m) {
    require_matching_range("unicyclic_upper_bound", n, m);
    const int hub = n - m + 1;
    RadicalSum out;
    out.add(sq(hub) + 4, static_cast<RadicalSum::Multiplicity>(m));
    out.add(sq(hub) + 1, static_cast<RadicalSum::Multiplicity>(n - 2 * m + 1));
    out.add(5, static_cast<RadicalSum::Multiplicity>(m - 2));
    out.add(8, 1);
    return out;
}

RadicalSum tree_lower_bound_perfect(int m) {
    if (m < 2) throw ParameterError("tree_lower_bound_perfect: need m >= 2");
    return RadicalSum{{8, static_cast<RadicalSum::Multiplicity>(2 * m - 3)}, {5, 2}};
}

RadicalSum unicyclic_lower_bound_perfect(int m) {
    if (m < 2) throw ParameterError("unicyclic_lower_bound_perfect: need m >= 2");
    return RadicalSum{{8, static_cast<RadicalSum::Multiplicity>(2 * m)}};
}

RadicalSum pendant_cycle_value(int m) {
    if (m < 3) throw ParameterError("pendant_cycle_value: need m >= 3");
    const auto k = static_cast<RadicalSum::Multiplicity>(m);
    return RadicalSum{{18, k}, {10, k}};
}

}  // namespace sombor
