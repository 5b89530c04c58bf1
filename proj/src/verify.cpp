#include "sombor/verify.hpp"

#include "parallel.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/indices.hpp"
#include "sombor/matching.hpp"
#include "sombor/transforms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace sombor {

namespace {

LemmaReport named(std::string lemma) {
    LemmaReport rep;
    rep.lemma = std::move(lemma);
    return rep;
}

// Running exact extremum. Enumerators emit one graph per isomorphism class,
// so the witness list holds one graph per tied class.
struct Extremum {
    explicit Extremum(bool maximize_ = true) : maximize(maximize_) {}

    bool maximize = true;
    RadicalSum best;
    std::vector<Graph> witnesses;
    std::size_t seen = 0;

    void offer(const Graph& g, const RadicalSum& value) {
        ++seen;
        if (witnesses.empty()) {
            best = value;
            witnesses = {g};
            return;
        }
        auto order = compare_exact(value, best);
        if (order == 0) {
            witnesses.push_back(g);
        } else if ((order > 0) == maximize) {
            best = value;
            witnesses = {g};
        }
    }

    void merge(const Extremum& other) {
        if (other.witnesses.empty()) {
            seen += other.seen;
            return;
        }
        const std::size_t total = seen + other.seen;
        if (witnesses.empty()) {
            *this = other;
        } else {
            auto order = compare_exact(other.best, best);
            if (order == 0) {
                witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
            } else if ((order > 0) == maximize) {
                best = other.best;
                witnesses = other.witnesses;
            }
        }
        seen = total;
    }

    // Sorted (code, graph6) pairs of the witnesses.
    std::vector<std::pair<CanonicalCode, std::string>> coded() const {
        std::vector<std::pair<CanonicalCode, std::string>> out;
        for (const Graph& g : witnesses) out.emplace_back(canonical_code(g), write_graph6(g));
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct OrderCells {
    std::map<int, Extremum> by_m;
    std::size_t enumerated = 0;
    std::size_t outside_range = 0;

    void offer(const Graph& g, int n) {
        ++enumerated;
        const int m = static_cast<int>(matching_number(g));
        if (m < 2 || 2 * m > n) {
            ++outside_range;
            return;
        }
        by_m[m].offer(g, sombor_exact(g));
    }

    void merge(const OrderCells& other) {
        enumerated += other.enumerated;
        outside_range += other.outside_range;
        for (const auto& [m, cell] : other.by_m) by_m[m].merge(cell);
    }
};

ExtremalRecord make_record(int n, int m, GraphKind kind, const Extremum& cell) {
    ExtremalRecord rec;
    rec.n = n;
    rec.m = m;
    rec.graph_class = kind;
    rec.class_size = cell.seen;
    rec.max_value = cell.best;
    for (auto& [code, g6] : cell.coded()) {
        rec.argmax_codes.push_back(code);
        rec.argmax_graph6.push_back(g6);
    }
    if (kind == GraphKind::Tree) {
        rec.predicted = tree_upper_bound(n, m);
        rec.predicted_code = canonical_code(build_T(n, m));
    } else {
        rec.predicted = unicyclic_upper_bound(n, m);
        rec.predicted_code = canonical_code(build_U(n, m));
    }
    rec.pass = !cell.witnesses.empty() && rec.max_value == rec.predicted && rec.unique() &&
               rec.argmax_codes.front() == rec.predicted_code;
    return rec;
}

void append_records(TheoremReport& report, int n, GraphKind kind, const OrderCells& cells) {
    for (int m = 2; 2 * m <= n; ++m) {
        auto it = cells.by_m.find(m);
        if (it == cells.by_m.end()) {
            // An empty class means T_{n,m} / U_{n,m} was never produced.
            ExtremalRecord rec = make_record(n, m, kind, Extremum{});
            rec.pass = false;
            report.records.push_back(std::move(rec));
        } else {
            report.records.push_back(make_record(n, m, kind, it->second));
        }
    }
    report.totals.push_back({n, kind, cells.enumerated, cells.outside_range});
}

std::string pairs_text(const RadicalSum& s) { return s.to_string(); }

bool has_pendant_with_degree_two_neighbor(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 2) return true;
    return false;
}

bool some_maximum_matching_misses_a_pendant(const Graph& g) {
    bool found = false;
    for_each_maximum_matching(g, [&](const Matching& mm) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 1 && !mm.is_saturated(v)) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

// For every cycle vertex, the deepest pendants of its hanging tree, when at
// depth >= 2, must hang from a degree-2 vertex. Returns the first offender.
std::optional<Vertex> deepest_pendant_violation(const Graph& g) {
    auto cycle = cycle_order(g);
    std::vector<char> on_cycle(g.order(), 0);
    for (Vertex v : cycle) on_cycle[v] = 1;
    for (Vertex root : cycle) {
        std::vector<int> depth(g.order(), -1);
        std::vector<Vertex> frontier{root}, pendants;
        depth[root] = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            Vertex v = frontier[i];
            if (v != root && g.degree(v) == 1) pendants.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (on_cycle[w] || depth[w] >= 0) continue;
                depth[w] = depth[v] + 1;
                frontier.push_back(w);
            }
        }
        int deepest = 0;
        for (Vertex p : pendants) deepest = std::max(deepest, depth[p]);
        if (deepest < 2) continue;
        for (Vertex p : pendants)
            if (depth[p] == deepest && g.degree(g.neighbors(p)[0]) != 2) return p;
    }
    return std::nullopt;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Graph random_connected_graph(std::mt19937_64& rng, int n) {
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(static_cast<Vertex>(draw(rng, v)), v);
    std::vector<Edge> absent;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::find(es.begin(), es.end(), Edge(u, v)) == es.end()) absent.emplace_back(u, v);
    const auto extra = draw(rng, static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < extra && !absent.empty(); ++i) {
        const auto pick = draw(rng, absent.size());
        es.push_back(absent[pick]);
        absent.erase(absent.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Graph::from_edges(n, es);
}

void check_order_range(const char* what, int value, int lo, int hi) {
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string(what) + ": need " + std::to_string(lo) + " <= value <= " +
                                    std::to_string(hi) + ", got " + std::to_string(value));
}

}  // namespace

bool TheoremReport::pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

TheoremReport verify_tree_theorem(int n_max, int workers) {
    check_order_range("verify_tree_theorem", n_max, 4, 16);
    const int count = n_max - 3;
    std::vector<OrderCells> per_n(count);
    detail::parallel_for(count, workers, [&](std::size_t i) {
        const int n = 4 + static_cast<int>(i);
        for_each_tree(n, [&](const Graph& t) { per_n[i].offer(t, n); });
    });
    TheoremReport report;
    for (int i = 0; i < count; ++i) append_records(report, 4 + i, GraphKind::Tree, per_n[i]);
    return report;
}

TheoremReport verify_unicyclic_theorem(int n_max, int workers) {
    check_order_range("verify_unicyclic_theorem", n_max, 4, 13);
    // Shards are (n, cycle length); merged in shard order.
    std::vector<std::pair<int, int>> shards;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 3; k <= n; ++k) shards.emplace_back(n, k);
    std::vector<OrderCells> per_shard(shards.size());
    detail::parallel_for(shards.size(), workers, [&](std::size_t i) {
        auto [n, k] = shards[i];
        for_each_unicyclic(n, [&](const Graph& u) { per_shard[i].offer(u, n); }, k);
    });
    TheoremReport report;
    std::size_t i = 0;
    for (int n = 4; n <= n_max; ++n) {
        OrderCells cells;
        for (; i < shards.size() && shards[i].first == n; ++i) cells.merge(per_shard[i]);
        append_records(report, n, GraphKind::Unicyclic, cells);
    }
    return report;
}

std::vector<LemmaReport> verify_perfect_matching_bounds(int m_max, int workers) {
    check_order_range("verify_perfect_matching_bounds", m_max, 2, 7);
    struct Cell {
        Extremum low{false};
        Extremum high{true};
    };
    const int count = m_max - 1;
    std::vector<Cell> trees(count), unicyclic(count);
    detail::parallel_for(2 * static_cast<std::size_t>(count), workers, [&](std::size_t task) {
        const bool tree = task < static_cast<std::size_t>(count);
        const std::size_t idx = tree ? task : task - count;
        const int m = 2 + static_cast<int>(idx);
        Cell& cell = tree ? trees[idx] : unicyclic[idx];
        auto visit = [&](const Graph& g) {
            if (matching_number(g) != static_cast<std::size_t>(m)) return;
            auto value = sombor_exact(g);
            cell.low.offer(g, value);
            cell.high.offer(g, value);
        };
        if (tree)
            for_each_tree(2 * m, visit);
        else
            for_each_unicyclic(2 * m, visit);
    });

    auto judge = [](LemmaReport& rep, int m, const Extremum& ext, const RadicalSum& expected, const Graph& expected_graph,
                    const char* side) {
        rep.instances += ext.seen;
        const auto coded = ext.coded();
        const auto want = canonical_code(expected_graph);
        const std::string tag = "m=" + std::to_string(m) + " " + side + ": ";
        if (coded.empty()) {
            rep.counterexamples.push_back({write_graph6(expected_graph), tag + "class is empty"});
            return;
        }
        if (!(ext.best == expected))
            rep.counterexamples.push_back(
                {coded.front().second, tag + "extremum " + pairs_text(ext.best) + " != " + pairs_text(expected)});
        if (coded.size() != 1) {
            for (const auto& [code, g6] : coded)
                rep.counterexamples.push_back({g6, tag + "extremum attained by " + std::to_string(coded.size()) + " classes"});
        } else if (!(coded.front().first == want)) {
            rep.counterexamples.push_back({coded.front().second, tag + "extremal graph is not the predicted one"});
        }
    };

    std::vector<LemmaReport> out{named("lemma3.3-lower"), named("lemma3.3-upper"), named("lemma4.3-lower"),
                                 named("lemma4.3-upper")};
    for (int i = 0; i < count; ++i) {
        const int m = 2 + i;
        judge(out[0], m, trees[i].low, tree_lower_bound_perfect(m), build_path(2 * m), "min");
        judge(out[1], m, trees[i].high, tree_upper_bound(2 * m, m), build_T(2 * m, m), "max");
        judge(out[2], m, unicyclic[i].low, unicyclic_lower_bound_perfect(m), build_cycle(2 * m), "min");
        judge(out[3], m, unicyclic[i].high, unicyclic_upper_bound(2 * m, m), build_U(2 * m, m), "max");
    }
    return out;
}

LemmaReport verify_sun_checkpoint(int m_max) {
    if (m_max < 3) throw std::invalid_argument("verify_sun_checkpoint: need m_max >= 3");
    LemmaReport rep = named("lemma4.3-case1");
    for (int m = 3; m <= m_max; ++m) {
        ++rep.instances;
        const Graph sun = build_sun(m);
        const auto value = sombor_exact(sun);
        const std::string tag = "m=" + std::to_string(m) + ": ";
        if (!value.same_terms(pendant_cycle_value(m)))
            rep.counterexamples.push_back({write_graph6(sun), tag + "value " + pairs_text(value)});
        if (matching_number(sun) != static_cast<std::size_t>(m))
            rep.counterexamples.push_back({write_graph6(sun), tag + "matching number differs from m"});
        if (compare_exact(value, unicyclic_upper_bound(2 * m, m)) != std::strong_ordering::less)
            rep.counterexamples.push_back({write_graph6(sun), tag + "not strictly below U_{2m,m}"});
    }
    return rep;
}

std::vector<LemmaReport> verify_structural_lemmas(int n_max, int workers) {
    check_order_range("verify_structural_lemmas", n_max, 2, 12);
    // Tasks: trees of order 2..n_max, then unicyclic of order 3..n_max.
    std::vector<std::pair<GraphKind, int>> tasks;
    for (int n = 2; n <= n_max; ++n) tasks.emplace_back(GraphKind::Tree, n);
    for (int n = 3; n <= n_max; ++n) tasks.emplace_back(GraphKind::Unicyclic, n);
    std::vector<std::vector<LemmaReport>> partial(tasks.size());

    detail::parallel_for(tasks.size(), workers, [&](std::size_t i) {
        auto [kind, n] = tasks[i];
        auto& reps = partial[i];
        reps = {named("lemma3.1"), named("lemma3.2"), named("lemma4.1"), named("lemma4.2")};
        auto visit = [&](const Graph& g) {
            const int m = static_cast<int>(matching_number(g));
            const bool tree = kind == GraphKind::Tree;
            if (n == 2 * m && (tree ? m >= 2 : m >= 3)) {
                auto& rep = reps[tree ? 0 : 2];
                ++rep.instances;
                if (tree && !has_pendant_with_degree_two_neighbor(g))
                    rep.counterexamples.push_back({write_graph6(g), "no pendant with a degree-2 neighbor"});
                if (!tree) {
                    if (auto bad = deepest_pendant_violation(g))
                        rep.counterexamples.push_back(
                            {write_graph6(g), "deepest pendant " + std::to_string(*bad) + " hangs from degree != 2"});
                }
            }
            const auto degrees = g.degree_sequence();
            const bool is_cycle = !tree && std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 2; });
            if (n > 2 * m && !is_cycle) {
                auto& rep = reps[tree ? 1 : 3];
                ++rep.instances;
                if (!some_maximum_matching_misses_a_pendant(g))
                    rep.counterexamples.push_back({write_graph6(g), "every maximum matching saturates every pendant"});
            }
        };
        if (kind == GraphKind::Tree)
            for_each_tree(n, visit);
        else
            for_each_unicyclic(n, visit);
    });

    std::vector<LemmaReport> out{named("lemma3.1"), named("lemma3.2"), named("lemma4.1"), named("lemma4.2")};
    for (const auto& reps : partial) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j].instances += reps[j].instances;
            out[j].counterexamples.insert(out[j].counterexamples.end(), reps[j].counterexamples.begin(),
                                          reps[j].counterexamples.end());
        }
    }
    return out;
}

LemmaReport verify_lemma21(int a_max, int b_max, int x_max) {
    if (a_max < 1 || b_max < 1 || x_max < 2) throw std::invalid_argument("verify_lemma21: ranges too small");
    using R = RadicalSum::Radicand;
    LemmaReport rep = named("lemma2.1");
    // h1(x) < h1(x+1)  <=>  2 sqrt(x^2+a) < sqrt((x+1)^2+a) + sqrt((x-1)^2+a)
    for (R a = 1; a <= static_cast<R>(a_max); ++a) {
        for (R x = 2; x + 1 <= static_cast<R>(x_max); ++x) {
            ++rep.instances;
            RadicalSum lhs{{x * x + a, 2}};
            RadicalSum rhs{{(x + 1) * (x + 1) + a, 1}};
            rhs.add((x - 1) * (x - 1) + a);
            if (compare_exact(lhs, rhs) != std::strong_ordering::less)
                rep.counterexamples.push_back(
                    {"", "h1 not increasing at a=" + std::to_string(a) + " x=" + std::to_string(x)});
        }
    }
    // h2(x) > h2(x+1)  <=>  sqrt(x^2+b^2) + sqrt((x+1)^2+(b-1)^2) > sqrt((x+1)^2+b^2) + sqrt(x^2+(b-1)^2)
    for (R b = 1; b <= static_cast<R>(b_max); ++b) {
        for (R x = 2; x + 1 <= static_cast<R>(x_max); ++x) {
            ++rep.instances;
            RadicalSum lhs, rhs;
            lhs.add(x * x + b * b);
            lhs.add((x + 1) * (x + 1) + (b - 1) * (b - 1));
            rhs.add((x + 1) * (x + 1) + b * b);
            rhs.add(x * x + (b - 1) * (b - 1));
            if (compare_exact(lhs, rhs) != std::strong_ordering::greater)
                rep.counterexamples.push_back(
                    {"", "h2 not decreasing at b=" + std::to_string(b) + " x=" + std::to_string(x)});
        }
    }
    return rep;
}

LemmaReport verify_neighbor_shift(std::size_t trials, std::uint64_t seed) {
    LemmaReport rep = named("lemma2.3");
    std::mt19937_64 rng(seed);
    while (rep.instances < trials) {
        const int n = 4 + static_cast<int>(draw(rng, 9));
        const Graph g = random_connected_graph(rng, n);
        std::vector<ShiftSpec> valid;
        for (const Edge& e : g.edges()) {
            for (ShiftSpec s : {ShiftSpec{e.u, e.v}, ShiftSpec{e.v, e.u}})
                if (is_valid_shift(g, s)) valid.push_back(s);
        }
        if (valid.empty()) continue;
        const ShiftSpec spec = valid[draw(rng, valid.size())];
        ++rep.instances;

        const int s = g.degree(spec.u0) - 1;
        const int t = g.degree(spec.v0) - 1;
        const Graph after = neighbor_shift(g, spec);
        const std::string tag = "u0=" + std::to_string(spec.u0) + " v0=" + std::to_string(spec.v0) + ": ";
        if (compare_exact(sombor_exact(after), sombor_exact(g)) != std::strong_ordering::greater)
            rep.counterexamples.push_back({write_graph6(g), tag + "Sombor index did not increase"});
        if (after.order() != g.order() || after.size() != g.size() || !is_connected(after))
            rep.counterexamples.push_back({write_graph6(g), tag + "order, size or connectivity changed"});
        if (after.degree(spec.u0) != s + t + 1 || after.degree(spec.v0) != 1)
            rep.counterexamples.push_back({write_graph6(g), tag + "endpoint degrees differ from s+t+1 and 1"});
    }
    return rep;
}

}  // namespace sombor
