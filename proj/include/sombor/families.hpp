#pragma once

#include "sombor/graph.hpp"
#include "sombor/radical_sum.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace sombor {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { T, U, Path, Cycle, Star, Sun };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct FamilySpec {
    Family family = Family::Path;
    int n = 0;
    int m = 0;  // matching number for T/U; cycle length for Sun
};

Graph build(const FamilySpec& spec);

// All constructors put the hub or center at vertex 0 and number the rest in
// breadth-first order.

/// Star S_{n-m+1} with one pendant hung on m-1 of its leaves. 2 <= m <= n/2.
Graph build_T(int n, int m);
/// Triangle whose hub carries n-2m+1 pendants and m-2 paths on two vertices.
Graph build_U(int n, int m);
Graph build_path(int n);
Graph build_cycle(int n);
Graph build_star(int n);
/// Cycle C_k with one pendant on every cycle vertex; 2k vertices.
Graph build_sun(int k);

/// Sombor value of T_{n,m}: {(n-m)^2+1 : n-2m+1, (n-m)^2+4 : m-1, 5 : m-1}.
RadicalSum tree_upper_bound(int n, int m);
/// Sombor value of U_{n,m}: {(n-m+1)^2+4 : m, (n-m+1)^2+1 : n-2m+1, 5 : m-2, 8 : 1}.
RadicalSum unicyclic_upper_bound(int n, int m);
/// Sombor value of P_{2m}.
RadicalSum tree_lower_bound_perfect(int m);
/// Sombor value of C_{2m}.
RadicalSum unicyclic_lower_bound_perfect(int m);
/// Sombor value of the sun on C_m: {18 : m, 10 : m}.
RadicalSum pendant_cycle_value(int m);

}  // namespace sombor
