#include "sombor/enumeration.hpp"

#include "sombor/canonical.hpp"
#include "sombor/matching.hpp"

#include <algorithm>
#include <string>

namespace sombor {

namespace {

using Levels = std::vector<int>;

// Beyer-Hedetniemi successor. With p unset, p is the last position whose
// level is not 1.
std::optional<Levels> next_rooted(const Levels& pred, std::optional<std::size_t> p_hint = std::nullopt) {
    std::size_t p;
    if (p_hint) {
        p = *p_hint;
    } else {
        p = pred.size() - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Levels out = pred;
    for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
    return out;
}

// First principal subtree (levels shifted up by one) and the rest with the root.
std::pair<Levels, Levels> split(const Levels& layout) {
    std::size_t m = layout.size();
    bool seen_one = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (seen_one) {
                m = i;
                break;
            }
            seen_one = true;
        }
    }
    Levels left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

// Moves a rooted candidate forward to the next sequence rooted at a center.
Levels next_free(Levels candidate) {
    auto [left, rest] = split(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return candidate;

    const std::size_t p = left.size();
    Levels next = *next_rooted(candidate, p);
    if (candidate[p] > 2) {
        auto [new_left, new_rest] = split(next);
        const int h = *std::max_element(new_left.begin(), new_left.end());
        // Overwrite the tail with a path 1, 2, ..., h + 1.
        for (int i = 0; i <= h; ++i) next[next.size() - 1 - h + i] = i + 1;
    }
    return next;
}

struct RootedTreeTable {
    // by size: level sequences, sorted by rooted code
    std::vector<std::vector<Levels>> trees;
};

RootedTreeTable rooted_table(int max_size) {
    RootedTreeTable table;
    table.trees.resize(max_size + 1);
    for (int s = 1; s <= max_size; ++s) {
        auto all = rooted_trees(s);
        std::vector<std::pair<std::string, Levels>> keyed;
        keyed.reserve(all.size());
        for (auto& lv : all) {
            Graph t = tree_from_levels(lv);
            keyed.emplace_back(rooted_code(t, 0, std::vector<char>(s, 0)), std::move(lv));
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto& [code, lv] : keyed) table.trees[s].push_back(std::move(lv));
    }
    return table;
}

struct TreeChoice {
    int size;
    int index;
    friend auto operator<=>(const TreeChoice&, const TreeChoice&) = default;
};

bool dihedrally_minimal(const std::vector<TreeChoice>& seq) {
    const std::size_t k = seq.size();
    for (std::size_t start = 0; start < k; ++start) {
        for (int dir : {1, -1}) {
            for (std::size_t i = 0; i < k; ++i) {
                const auto& other = seq[dir > 0 ? (start + i) % k : (start + k - i) % k];
                if (other < seq[i]) return false;
                if (seq[i] < other) break;
            }
        }
    }
    return true;
}

Graph assemble(const RootedTreeTable& table, const std::vector<TreeChoice>& seq, int n) {
    const int k = static_cast<int>(seq.size());
    std::vector<Edge> es;
    es.reserve(n);
    for (Vertex v = 0; v < k; ++v) es.emplace_back(v, (v + 1) % k);
    Vertex next = k;
    for (Vertex c = 0; c < k; ++c) {
        const Levels& lv = table.trees[seq[c].size][seq[c].index];
        std::vector<Vertex> last_at_level(lv.size() + 1, -1);
        last_at_level[0] = c;
        for (std::size_t i = 1; i < lv.size(); ++i) {
            es.emplace_back(last_at_level[lv[i] - 1], next);
            last_at_level[lv[i]] = next++;
        }
    }
    return Graph::from_edges(n, es);
}

void place(const RootedTreeTable& table, std::vector<TreeChoice>& seq, std::size_t pos, int remaining, int n,
           const GraphVisitor& visit) {
    const int k = static_cast<int>(seq.size());
    if (static_cast<int>(pos) == k) {
        if (remaining == 0 && dihedrally_minimal(seq)) visit(assemble(table, seq, n));
        return;
    }
    const int slots_after = k - static_cast<int>(pos) - 1;
    for (int s = 1; s <= remaining - slots_after; ++s) {
        if (slots_after == 0 && s != remaining) continue;
        const int count = static_cast<int>(table.trees[s].size());
        for (int idx = 0; idx < count; ++idx) {
            TreeChoice choice{s, idx};
            // A rotation starting elsewhere would be smaller.
            if (pos > 0 && choice < seq[0]) continue;
            seq[pos] = choice;
            place(table, seq, pos + 1, remaining - s, n, visit);
        }
    }
}

}  // namespace

Graph tree_from_levels(const std::vector<int>& levels) {
    std::vector<Edge> es;
    std::vector<Vertex> last_at_level(levels.size() + 1, -1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const int lv = levels[i];
        if (lv < 0 || (i == 0) != (lv == 0) || (i > 0 && last_at_level[lv - 1] < 0))
            throw GraphError("malformed level sequence");
        if (i > 0) es.emplace_back(last_at_level[lv - 1], static_cast<Vertex>(i));
        last_at_level[lv] = static_cast<Vertex>(i);
        std::fill(last_at_level.begin() + lv + 1, last_at_level.end(), -1);
    }
    return Graph::from_edges(static_cast<int>(levels.size()), es);
}

TreeGenerator::TreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw EnumerationLimit("enumerate_trees: need 1 <= n <= " + std::to_string(kMaxTreeOrder));
    Levels start;
    // Path rooted at its center.
    for (int i = 0; i <= n / 2; ++i) start.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
    pending_ = std::move(start);
}

std::optional<Graph> TreeGenerator::next() {
    if (!pending_) return std::nullopt;
    if (n_ == 1) {
        current_ = {0};
        pending_.reset();
        return tree_from_levels(current_);
    }
    current_ = next_free(std::move(*pending_));
    pending_ = next_rooted(current_);
    return tree_from_levels(current_);
}

std::vector<std::vector<int>> rooted_trees(int s) {
    if (s < 1) throw EnumerationLimit("rooted_trees: need s >= 1");
    std::vector<Levels> out;
    Levels path(s);
    for (int i = 0; i < s; ++i) path[i] = i;
    std::optional<Levels> cur = path;
    while (cur) {
        out.push_back(*cur);
        cur = next_rooted(*cur);
    }
    return out;
}

void for_each_tree(int n, const GraphVisitor& visit) {
    TreeGenerator gen(n);
    while (auto t = gen.next()) visit(*t);
}

void for_each_unicyclic(int n, const GraphVisitor& visit, std::optional<int> cycle_length) {
    if (n < 3 || n > kMaxUnicyclicOrder)
        throw EnumerationLimit("enumerate_unicyclic: need 3 <= n <= " + std::to_string(kMaxUnicyclicOrder));
    if (cycle_length && (*cycle_length < 3 || *cycle_length > n))
        throw EnumerationLimit("enumerate_unicyclic: cycle length outside [3, n]");
    const RootedTreeTable table = rooted_table(n - 2);
    const int k_lo = cycle_length.value_or(3);
    const int k_hi = cycle_length.value_or(n);
    for (int k = k_lo; k <= k_hi; ++k) {
        std::vector<TreeChoice> seq(k);
        place(table, seq, 0, n, n, visit);
    }
}

std::vector<Graph> enumerate_trees(int n) {
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_unicyclic(int n) {
    std::vector<Graph> out;
    for_each_unicyclic(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::map<std::size_t, std::vector<Graph>> partition_by_matching(const std::vector<Graph>& graphs) {
    std::map<std::size_t, std::vector<Graph>> out;
    for (const Graph& g : graphs) out[matching_number(g)].push_back(g);
    return out;
}

}  // namespace sombor
