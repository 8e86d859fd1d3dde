#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix_spec.hpp"
#include "words.hpp"

namespace ckalg {

enum class Answer { yes, no, unknown };
enum class Reading { literal, edge_departure };

inline const char* to_string(Answer a) { return a == Answer::yes ? "yes" : a == Answer::no ? "no" : "unknown"; }
inline const char* to_string(Reading r) { return r == Reading::literal ? "literal" : "edge_departure"; }

struct Certificate {
    std::string kind;                 // circuit, path, pair, vertex, exhaustive, class-graph, ...
    std::vector<PositiveWord> words;  // circuits or paths
    std::string note;
    bool exact = true;
};

struct Verdict {
    Answer answer = Answer::unknown;
    Certificate cert;
};

struct CircuitReport {
    PositiveWord circuit;
    bool has_exit = false;
    bool transitory_literal = false;
    bool transitory_edge_departure = false;
    bool exact = true;
};

struct CircuitList {
    std::vector<CircuitReport> circuits;
    bool exact = true;   // false: tracked universe or enumeration cap hit
    std::string note;
};

inline bool is_circuit(const MatrixSpec& A, const PositiveWord& g) {
    if (g.empty() || !is_admissible(A, g)) return false;
    return A.entry(g.back(), g.front());
}

inline bool has_exit(const MatrixSpec& A, const PositiveWord& g) {
    for (std::size_t k = 0; k < g.size(); ++k) {
        auto row = A.row_support(g[k]);
        if (!(row == DescribableSet::of(A.shape(), {g[(k + 1) % g.size()]}))) return true;
    }
    return false;
}

// Off-circuit successors; `keep_on_circuit` keeps chords landing back on the circuit.
inline DescribableSet exit_targets(const MatrixSpec& A, const PositiveWord& g, bool keep_on_circuit) {
    auto verts = DescribableSet::of(A.shape(), g);
    auto s = DescribableSet::empty(A.shape());
    for (std::size_t k = 0; k < g.size(); ++k)
        s = s.unite(A.row_support(g[k]).minus(DescribableSet::of(A.shape(), {g[(k + 1) % g.size()]})));
    return keep_on_circuit ? s : s.minus(verts);
}

// Returns {transitory, exact}.
inline std::pair<bool, bool> is_transitory(const ClassGraph& G, const PositiveWord& g, Reading reading) {
    const auto& A = G.spec();
    if (!is_circuit(A, g)) throw DomainError("not a circuit");
    auto verts = DescribableSet::of(A.shape(), g);
    auto from = exit_targets(A, g, reading == Reading::edge_departure);
    if (from.is_empty()) return {true, true};
    auto r = G.reach(from, verts);
    return {!r.yes, r.exact};
}

inline CircuitReport circuit_report(const ClassGraph& G, const PositiveWord& g) {
    CircuitReport c;
    c.circuit = g;
    c.has_exit = has_exit(G.spec(), g);
    auto [tl, el] = is_transitory(G, g, Reading::literal);
    auto [te, ee] = is_transitory(G, g, Reading::edge_departure);
    c.transitory_literal = tl;
    c.transitory_edge_departure = te;
    c.exact = el && ee;
    return c;
}

namespace detail {

// Vertices available for concrete circuit search.
inline std::vector<Index> search_vertices(const ClassGraph& G) {
    const auto& u = G.spec().universe();
    return u.finite() ? u.sample(0) : u.sample(G.concrete_bound());
}

// Simple circuits through distinct vertices; all rotations when `rotations`.
inline bool simple_circuits(const ClassGraph& G, std::size_t max_len, bool rotations, std::size_t cap,
                            const std::function<bool(const PositiveWord&)>& visit) {
    const auto& A = G.spec();
    auto verts = search_vertices(G);
    long cb = G.concrete_bound();
    std::size_t emitted = 0;
    bool complete = true;
    PositiveWord path;
    std::set<Index> on;
    std::function<bool(const Index&)> dfs = [&](const Index& v) -> bool {
        for (auto& w : A.row_support(v).members_upto(cb)) {
            if (w == path.front()) {
                if (++emitted > cap) {
                    complete = false;
                    return false;
                }
                if (!visit(path)) return false;
            }
            if (on.count(w) || path.size() >= max_len) continue;
            if (!rotations && w < path.front()) continue;
            path.push_back(w);
            on.insert(w);
            bool go = dfs(w);
            on.erase(w);
            path.pop_back();
            if (!go) return false;
        }
        return true;
    };
    for (auto& s : verts) {
        path = {s};
        on = {s};
        if (!dfs(s)) break;
    }
    return complete;
}

inline std::vector<std::vector<int>> sccs(int n, const std::function<std::vector<int>(int)>& succ) {
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on(n, 0);
    std::vector<int> st;
    std::vector<std::vector<int>> out;
    int counter = 0;
    std::function<void(int)> strong = [&](int v) {
        idx[v] = low[v] = counter++;
        st.push_back(v);
        on[v] = 1;
        for (int w : succ(v)) {
            if (idx[w] < 0) {
                strong(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], idx[w]);
            }
        }
        if (low[v] == idx[v]) {
            std::vector<int> c;
            int w;
            do {
                w = st.back();
                st.pop_back();
                on[w] = 0;
                c.push_back(w);
            } while (w != v);
            out.push_back(c);
        }
    };
    for (int v = 0; v < n; ++v)
        if (idx[v] < 0) strong(v);
    return out;
}

enum class CycleKind { none, genuine, possible, drifting_up, drifting_down };

// Classifies the closed walks of one SCC of (a subgraph of) the class graph.
// genuine: a zero-shift closed walk exists, so Gr(A) has a circuit there.
// possible: closed walks exist but could not be lifted exactly.
// drifting_*: only pure-shift cycles of one nonzero sign.
inline CycleKind classify_scc(const ClassGraph& G, const std::vector<int>& comp,
                              const std::function<bool(int, const ClassGraph::Edge&)>& keep) {
    std::set<int> in(comp.begin(), comp.end());
    struct E {
        int a, b;
        long w;
    };
    std::vector<E> es;
    bool reset = false;
    for (int v : comp)
        for (auto& e : G.nodes()[v].out) {
            if (!keep(v, e) || !in.count(e.to)) continue;
            if (e.kind != ClassGraph::Kind::shift) reset = true;
            es.push_back({v, e.to, e.shift});
        }
    if (es.empty()) return CycleKind::none;
    if (reset) return G.tracked() ? CycleKind::possible : CycleKind::genuine;
    std::map<int, int> pos;
    for (std::size_t k = 0; k < comp.size(); ++k) pos[comp[k]] = static_cast<int>(k);
    auto negative_cycle = [&](int sign, std::vector<long>& d) {
        d.assign(comp.size(), 0);
        for (std::size_t it = 0; it <= comp.size(); ++it) {
            bool changed = false;
            for (auto& e : es) {
                long w = sign * e.w;
                if (d[pos[e.a]] + w < d[pos[e.b]]) d[pos[e.b]] = d[pos[e.a]] + w, changed = true;
            }
            if (!changed) return false;
        }
        return true;
    };
    std::vector<long> dn, dp;
    bool neg = negative_cycle(1, dn), posc = negative_cycle(-1, dp);
    if (neg && posc) return CycleKind::possible;
    if (!neg && !posc) return CycleKind::genuine;
    // one sign only: zero cycles are exactly cycles of tight edges
    auto& d = neg ? dp : dn;
    int sign = neg ? -1 : 1;
    std::vector<std::vector<int>> tight(comp.size());
    for (auto& e : es)
        if (d[pos[e.a]] + sign * e.w == d[pos[e.b]]) tight[pos[e.a]].push_back(pos[e.b]);
    auto tc = sccs(static_cast<int>(comp.size()), [&](int v) { return tight[v]; });
    for (auto& c : tc) {
        if (c.size() > 1) return CycleKind::genuine;
        if (std::count(tight[c[0]].begin(), tight[c[0]].end(), c[0])) return CycleKind::genuine;
    }
    return neg ? CycleKind::drifting_down : CycleKind::drifting_up;
}

inline bool scc_has_cycle(const ClassGraph& G, const std::vector<int>& comp,
                          const std::function<bool(int, const ClassGraph::Edge&)>& keep) {
    std::set<int> in(comp.begin(), comp.end());
    for (int v : comp)
        for (auto& e : G.nodes()[v].out)
            if (keep(v, e) && in.count(e.to)) return true;
    return false;
}

inline std::vector<int> node_succ(const ClassGraph& G, int v, const std::function<bool(int, const ClassGraph::Edge&)>& keep) {
    std::vector<int> s;
    for (auto& e : G.nodes()[v].out)
        if (keep(v, e)) s.push_back(e.to);
    return s;
}

} // namespace detail

inline CircuitList enumerate_circuits(const ClassGraph& G, std::size_t max_len, std::size_t cap = 20000) {
    CircuitList out;
    bool complete = detail::simple_circuits(G, max_len, true, cap, [&](const PositiveWord& c) {
        out.circuits.push_back(circuit_report(G, c));
        return true;
    });
    out.exact = complete && !G.tracked();
    for (auto& c : out.circuits) out.exact &= c.exact;
    if (!complete) out.note = "enumeration cap reached";
    if (G.tracked()) {
        out.note = "tracked universe: circuits listed among indices <= " + std::to_string(G.concrete_bound());
        auto all = [](int, const ClassGraph::Edge&) { return true; };
        bool any_possible = false;
        for (auto& c : detail::sccs(static_cast<int>(G.nodes().size()),
                                    [&](int v) { return detail::node_succ(G, v, all); })) {
            auto k = detail::classify_scc(G, c, all);
            any_possible |= k == detail::CycleKind::genuine || k == detail::CycleKind::possible;
        }
        // with no liftable closed walk in the class graph the (empty) list is exact
        if (!any_possible && out.circuits.empty()) out.exact = true;
    }
    return out;
}

// Does Gr(A) have any circuit at all? {answer, exact}
inline std::pair<bool, bool> has_circuit(const ClassGraph& G) {
    bool found = false;
    detail::simple_circuits(G, G.tracked() ? 6 : G.spec().universe().width(), false, 1, [&](const PositiveWord&) {
        found = true;
        return false;
    });
    if (found) return {true, true};
    if (!G.tracked()) return {false, true};
    auto all = [](int, const ClassGraph::Edge&) { return true; };
    bool genuine = false, possible = false;
    for (auto& c : detail::sccs(static_cast<int>(G.nodes().size()), [&](int v) { return detail::node_succ(G, v, all); })) {
        auto k = detail::classify_scc(G, c, all);
        genuine |= k == detail::CycleKind::genuine;
        possible |= k == detail::CycleKind::possible;
    }
    if (genuine) return {true, true};
    return {possible, !possible};
}

// A circuit all of whose vertices have out-degree one.
inline Verdict has_terminal_circuit(const ClassGraph& G) {
    const auto& A = G.spec();
    Verdict v;
    auto deg1 = [&](const Index& x) {
        auto r = A.row_support(x);
        return r.is_finite() && r.count() == 1;
    };
    std::set<Index> done;
    for (auto& s : detail::search_vertices(G)) {
        if (done.count(s)) continue;
        std::vector<Index> walk;
        std::map<Index, std::size_t> at;
        Index x = s;
        while (deg1(x) && !at.count(x) && !done.count(x) && walk.size() < 4096) {
            at[x] = walk.size();
            walk.push_back(x);
            x = A.row_support(x).elements().front();
        }
        for (auto& w : walk) done.insert(w);
        if (at.count(x)) {
            PositiveWord cyc(walk.begin() + at[x], walk.end());
            v.answer = Answer::yes;
            v.cert = {"circuit", {cyc}, "every vertex has out-degree 1", true};
            return v;
        }
    }
    v.answer = Answer::no;
    if (!G.tracked()) {
        v.cert = {"exhaustive", {}, "no cycle in the out-degree-1 subgraph", true};
        return v;
    }
    std::vector<char> d1(G.nodes().size());
    for (std::size_t k = 0; k < G.nodes().size(); ++k) d1[k] = deg1(G.nodes()[k].v);
    auto keep = [&](int a, const ClassGraph::Edge& e) { return d1[a] && d1[e.to]; };
    bool possible = false, genuine = false;
    for (auto& c : detail::sccs(static_cast<int>(G.nodes().size()), [&](int x) { return detail::node_succ(G, x, keep); })) {
        auto k = detail::classify_scc(G, c, keep);
        genuine |= k == detail::CycleKind::genuine;
        possible |= k == detail::CycleKind::possible;
    }
    if (genuine) {
        v.answer = Answer::yes;
        v.cert = {"class-graph", {}, "zero-shift closed walk among out-degree-1 classes", true};
    } else if (possible) {
        v.answer = Answer::unknown;
        v.cert = {"class-graph", {}, "out-degree-1 class cycle could not be lifted", false};
    } else {
        v.cert = {"class-graph", {}, "out-degree-1 class cycles all drift (nonzero total shift)", true};
    }
    return v;
}

inline Verdict has_transitory_circuit(const ClassGraph& G, Reading reading) {
    Verdict v;
    bool exact = true;
    std::optional<PositiveWord> hit;
    std::size_t maxl = G.tracked() ? 3 : G.spec().universe().width();
    bool complete = detail::simple_circuits(G, maxl, false, G.tracked() ? 2000 : 100000, [&](const PositiveWord& c) {
        auto [t, e] = is_transitory(G, c, reading);
        if (t && e) {
            hit = c;
            return false;
        }
        exact &= e;
        return true;
    });
    if (hit) {
        v.answer = Answer::yes;
        v.cert = {"circuit", {*hit}, std::string("transitory under the ") + to_string(reading) + " reading", true};
        return v;
    }
    auto [any, any_exact] = has_circuit(G);
    if (!any && any_exact) {
        v.answer = Answer::no;
        v.cert = {"exhaustive", {}, "no circuits", true};
        return v;
    }
    v.answer = Answer::no;
    v.cert = {"exhaustive", {}, "every enumerated circuit has a returning exit", exact && complete && !G.tracked()};
    if (!v.cert.exact) v.cert.note += " (conservative)";
    return v;
}

inline Verdict is_permutation(const ClassGraph& G) {
    const auto& A = G.spec();
    Verdict v;
    std::vector<Index> probe;
    for (auto& n : G.nodes()) probe.push_back(n.v);
    for (auto& x : probe) {
        for (int side = 0; side < 2; ++side) {
            auto s = side ? A.column(x) : A.row_support(x);
            if (!s.is_finite() || s.count() != 1) {
                v.answer = Answer::no;
                v.cert = {"vertex", {{x}}, std::string(side ? "column" : "row") + " does not have exactly one 1", true};
                return v;
            }
        }
    }
    v.answer = Answer::yes;
    v.cert = {"exhaustive", {}, "every row and column has exactly one 1", true};
    return v;
}

namespace detail {

// Certain reachability from the node set of start vertex/class to `to`.
inline Reach reach_from_node(const ClassGraph& G, int k, const DescribableSet& to) {
    const auto& nd = G.nodes()[k];
    const auto& A = G.spec();
    if (!nd.is_class) return G.reach(nd.v, to);
    if (G.target_in_class(to, nd.v.t, nd.residue) == ClassGraph::Tag::all) return Reach{true, true, {}};
    // every member of the class: take its uniform edges, else descend along
    // negative shifts to the landing targets
    bool all_sure = false;
    Reach best;
    best.exact = false;
    for (auto& e : nd.out) {
        const auto& tn = G.nodes()[e.to];
        if (e.kind == ClassGraph::Kind::plain) {
            auto r = G.reach(tn.v, to);
            if (r.yes && r.exact) return r;
        } else if (e.kind == ClassGraph::Kind::cover || e.kind == ClassGraph::Kind::cofinite) {
            auto members = DescribableSet::tail(A.shape(), tn.v.t, tn.v.n, G.modulus());
            auto r = G.reach(members, to);
            if (r.yes && r.exact) return r;
        }
    }
    bool funnel = !nd.out.empty();
    std::vector<int> land;
    for (auto& e : nd.out) {
        if (e.kind == ClassGraph::Kind::landing) land.push_back(e.to);
        else if (!(e.kind == ClassGraph::Kind::shift && e.shift < 0 && e.to == k)) funnel = false;
    }
    if (funnel && !land.empty()) {
        all_sure = true;
        for (int t : land) {
            auto r = G.reach(G.nodes()[t].v, to);
            all_sure &= r.yes && r.exact;
        }
        if (all_sure) {
            best.yes = true;
            best.exact = true;
            return best;
        }
    }
    auto r = G.reach(DescribableSet::of(A.shape(), {nd.v}), to);
    if (!r.yes && r.exact) return r;
    best.yes = r.yes;
    return best;
}

} // namespace detail

// Strong connectivity of Gr(A).
inline Verdict is_transitive(const ClassGraph& G) {
    const auto& A = G.spec();
    Verdict v;
    int n = static_cast<int>(G.nodes().size());
    if (!G.tracked()) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto r = G.path(G.nodes()[a].v, G.nodes()[b].v);
                if (a != b && !r.yes) {
                    v.answer = Answer::no;
                    v.cert = {"pair", {{G.nodes()[a].v, G.nodes()[b].v}}, "no path from the first to the second", true};
                    return v;
                }
            }
        v.answer = Answer::yes;
        v.cert = {"exhaustive", {}, "all ordered pairs connected", true};
        return v;
    }
    // exact refutation through the class graph
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            auto target = G.nodes()[b].is_class
                              ? DescribableSet::tail(A.shape(), G.nodes()[b].v.t, G.nodes()[b].v.n, G.modulus())
                              : DescribableSet::of(A.shape(), {G.nodes()[b].v});
            auto src = G.nodes()[a].is_class
                           ? DescribableSet::tail(A.shape(), G.nodes()[a].v.t, G.bound() + 1, 1)
                           : A.row_support(G.nodes()[a].v);
            if (G.nodes()[a].is_class) src = src.intersect(DescribableSet::tail(A.shape(), G.nodes()[a].v.t, G.nodes()[a].v.n, G.modulus()));
            auto r = G.reach(src, target);
            if (!r.yes && r.exact) {
                v.answer = Answer::no;
                Index y = G.nodes()[b].v;
                v.cert = {"pair", {{G.nodes()[a].v, y}}, "no path from the first to the second", true};
                return v;
            }
        }
    // uniform edges only: plain and cover
    auto keep = [&](int, const ClassGraph::Edge& e) {
        return e.kind == ClassGraph::Kind::plain || e.kind == ClassGraph::Kind::cover;
    };
    auto comps = detail::sccs(n, [&](int x) { return detail::node_succ(G, x, keep); });
    if (comps.size() == 1) {
        v.answer = Answer::yes;
        v.cert = {"class-graph", {}, "class graph strongly connected through uniform edges", true};
    } else {
        v.answer = Answer::unknown;
        v.cert = {"class-graph", {}, "not decided by the class graph", false};
    }
    return v;
}

namespace detail {

struct CyclicPart {
    std::vector<int> nodes;
    CycleKind kind;
};

inline std::vector<CyclicPart> cyclic_parts(const ClassGraph& G) {
    auto all = [](int, const ClassGraph::Edge&) { return true; };
    std::vector<CyclicPart> out;
    for (auto& c : sccs(static_cast<int>(G.nodes().size()), [&](int v) { return node_succ(G, v, all); })) {
        if (!scc_has_cycle(G, c, all)) continue;
        out.push_back({c, classify_scc(G, c, all)});
    }
    return out;
}

} // namespace detail

namespace detail {

inline DescribableSet class_members(const ClassGraph& G, int k) {
    const auto& nd = G.nodes()[k];
    if (!nd.is_class) return DescribableSet::of(G.spec().shape(), {nd.v});
    return DescribableSet::tail(G.spec().shape(), nd.v.t, nd.v.n, G.modulus());
}

// Every member of start node k certainly reaches every infinite path inside `part`.
inline bool covers_part(const ClassGraph& G, int k, const CyclicPart& part) {
    using Tag = ClassGraph::Tag;
    auto covered = [&](const DescribableSet& from) {
        auto cert = G.tags(from).first;
        for (int c : part.nodes) {
            const auto& nd = G.nodes()[c];
            Tag need = !nd.is_class ? Tag::some : part.kind == CycleKind::drifting_up ? Tag::cofinite : Tag::all;
            if (cert[c] < need) return false;
        }
        return true;
    };
    const auto& nd = G.nodes()[k];
    if (!nd.is_class) return covered(class_members(G, k));
    // a lone class climbing by exactly L through itself
    if (part.nodes == std::vector<int>{k})
        for (auto& e : nd.out)
            if (e.kind == ClassGraph::Kind::shift && e.to == k && e.shift == G.modulus()) return true;
    for (auto& e : nd.out) {
        if (e.kind == ClassGraph::Kind::plain || e.kind == ClassGraph::Kind::cover) {
            if (covered(class_members(G, e.to))) return true;
        } else if (e.kind == ClassGraph::Kind::cofinite) {
            const auto& tn = G.nodes()[e.to];
            if (covered(DescribableSet::tail(G.spec().shape(), tn.v.t, tn.v.n + G.modulus(), G.modulus()))) return true;
        }
    }
    // descending funnel: every member eventually takes one of the landing edges
    std::vector<int> land;
    for (auto& e : nd.out) {
        if (e.kind == ClassGraph::Kind::landing) land.push_back(e.to);
        else if (!(e.kind == ClassGraph::Kind::shift && e.shift < 0 && e.to == k)) return false;
    }
    if (land.empty()) return false;
    for (int t : land)
        if (!covered(class_members(G, t))) return false;
    return true;
}

} // namespace detail

// From every vertex, every infinite path can be reached.
inline Verdict is_cofinal(const ClassGraph& G) {
    const auto& A = G.spec();
    Verdict v;
    bool exact = true;
    for (auto& p : detail::cyclic_parts(G)) {
        // drifting-down parts carry no infinite path
        if (p.kind == detail::CycleKind::drifting_down) continue;
        auto target = DescribableSet::empty(A.shape());
        for (int k : p.nodes) target = target.unite(detail::class_members(G, k));
        for (std::size_t k = 0; k < G.nodes().size(); ++k) {
            int kk = static_cast<int>(k);
            if (detail::covers_part(G, kk, p)) continue;
            auto r = G.reach(detail::class_members(G, kk), target);
            if (!r.yes && r.exact) {
                v.answer = Answer::no;
                PositiveWord cyc;
                if (!G.tracked()) {
                    auto idx = G.nodes()[p.nodes.front()].v;
                    auto back = G.concrete_path(A.row_support(idx), DescribableSet::of(A.shape(), {idx}));
                    cyc.push_back(idx);
                    if (back)
                        for (std::size_t q = 0; q + 1 < back->size(); ++q) cyc.push_back((*back)[q]);
                }
                v.cert = {"vertex-circuit", {{G.nodes()[k].v}, cyc}, "vertex cannot reach the infinite path on this circuit", true};
                return v;
            }
            exact = false;
        }
    }
    v.answer = Answer::yes;
    v.cert = {"exhaustive", {}, "every vertex reaches every strongly connected part carrying infinite paths", exact};
    if (!exact) v.cert.note += " (conservative)";
    return v;
}

inline Verdict every_vertex_reaches_circuit(const ClassGraph& G) {
    const auto& A = G.spec();
    Verdict v;
    // concrete circuit vertices
    auto on_circuit = DescribableSet::empty(A.shape());
    for (auto& x : detail::search_vertices(G))
        if (G.concrete_path(A.row_support(x), DescribableSet::of(A.shape(), {x}), 20000)) on_circuit.insert(x);
    auto [any, any_exact] = has_circuit(G);
    if (!any && any_exact) {
        v.answer = Answer::no;
        auto x = G.nodes().front().v;
        v.cert = {"vertex", {{x}}, "Gr(A) has no circuits", true};
        return v;
    }
    bool exact = true;
    for (std::size_t k = 0; k < G.nodes().size(); ++k) {
        auto r = on_circuit.is_empty() ? Reach{false, false, {}} : detail::reach_from_node(G, static_cast<int>(k), on_circuit);
        if (!r.yes && r.exact) {
            v.answer = Answer::no;
            v.cert = {"vertex", {{G.nodes()[k].v}}, "no path into a circuit", true};
            return v;
        }
        exact &= r.yes && r.exact;
    }
    v.answer = Answer::yes;
    v.cert = {"exhaustive", {}, "every vertex has a path into a circuit", exact};
    if (!exact) v.cert.note += " (conservative)";
    return v;
}

} // namespace ckalg
