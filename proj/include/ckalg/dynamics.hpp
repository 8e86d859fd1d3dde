#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_analysis.hpp"
#include "sampling.hpp"
#include "spectrum.hpp"
#include "words.hpp"

namespace ckalg {

struct ActionMove {
    GroupWord t;
    SpectrumPoint source, target;
};

inline bool in_domain(const MatrixSpec& A, const SpectrumPoint& xi, const GroupWord& t) {
    return contains(A, xi, t.inverse());
}

inline SpectrumPoint act(const MatrixSpec& A, const SpectrumPoint& xi, const GroupWord& t) {
    if (!in_domain(A, xi, t)) throw DomainError("act: t^-1 is not in the point");
    // t^-1 = alpha beta^-1, so t = beta alpha^-1 swaps the prefix alpha for beta
    auto [alpha, beta] = *decompose_pos_neg(t.inverse());
    if (xi.bounded()) {
        PositiveWord stem = beta;
        stem.insert(stem.end(), xi.stem().begin() + alpha.size(), xi.stem().end());
        return SpectrumPoint::bounded_point(stem, xi.root());
    }
    return SpectrumPoint::unbounded_point(xi.infinite_stem().drop(alpha.size()).prepend(beta));
}

inline ActionMove move(const MatrixSpec& A, const SpectrumPoint& xi, const GroupWord& t) {
    return {t, xi, act(A, xi, t)};
}

inline std::optional<SpectrumPoint> fixed_point(const MatrixSpec& A, const GroupWord& t) {
    if (t.is_identity()) throw DomainError("fixed_point: t = e");
    auto d = conjugate_circuit_decomposition(t);
    if (!d) return std::nullopt;
    EvPeriodicWord w(d->alpha, d->gamma);
    if (!is_admissible(A, w)) return std::nullopt;
    auto xi = SpectrumPoint::unbounded_point(w);
    if (!in_domain(A, xi, t)) return std::nullopt;
    return xi;
}

// Yes/no with exactness and, when available, the group element found.
struct OrbitAnswer {
    bool yes = false;
    bool exact = true;
    std::optional<GroupWord> t;
};

inline OrbitAnswer e_x_query(const ClassGraph& G, const SpectrumPoint& xi, const Index& x) {
    const auto& A = G.spec();
    A.check_index(x);
    OrbitAnswer out;
    for (std::size_t k = 0; k < xi.horizon(); ++k)
        if (*xi.letter(k) == x) {
            // s = prefix before x: s and s x both in xi
            out.yes = true;
            out.t = GroupWord::positive(xi.prefix(k));
            return out;
        }
    for (std::size_t k = 0; k <= xi.horizon(); ++k) {
        auto alpha = xi.prefix(k);
        auto r = G.reach(x, root_at(A, xi, alpha));
        if (r.yes && r.exact) {
            out.yes = true;
            if (!r.path.empty()) {
                // beta = path x ... b with b in the root; s = alpha beta^-1
                out.t = GroupWord::positive(alpha) * GroupWord::positive(r.path).inverse();
            }
            return out;
        }
        out.exact &= r.exact;
        out.yes |= r.yes;
    }
    if (out.yes) out.exact = false;
    return out;
}

inline bool e_x_contains(const ClassGraph& G, const SpectrumPoint& xi, const Index& x) { return e_x_query(G, xi, x).yes; }

inline bool e_x_contains(const MatrixSpec& A, const SpectrumPoint& xi, const Index& x) {
    ClassGraph G(A);
    return e_x_contains(G, xi, x);
}

// Moves the base into X: W^a_{X,Y,Z} = W^a_{X u {last a},Y,Z}, whose orbit equals that of W^e.
inline Pattern normalize_pattern(const MatrixSpec& A, const Pattern& p) {
    if (!is_admissible(A, p.base)) throw DomainError("pattern base is not admissible");
    if (p.base.empty()) return p;
    Pattern q = p;
    q.base.clear();
    if (std::find(q.X.begin(), q.X.end(), p.base.back()) == q.X.end()) q.X.push_back(p.base.back());
    return q;
}

// Some t in xi with t x^-1 in xi (X), t y^-1 notin xi (Y), t z notin xi (Z).
inline OrbitAnswer pattern_query(const ClassGraph& G, const Pattern& p, const SpectrumPoint& xi) {
    const auto& A = G.spec();
    if (!p.base.empty()) throw DomainError("pattern_contains: normalize the pattern first (base must be e)");
    for (auto* v : {&p.X, &p.Y, &p.Z})
        for (auto& i : *v) A.check_index(i);
    auto Zset = DescribableSet::of(A.shape(), p.Z);
    auto S = A.axyj_support(p.X, p.Y).set.minus(Zset);
    OrbitAnswer out;
    bool possible = false;
    for (std::size_t k = 0; k <= xi.horizon(); ++k) {
        auto alpha = xi.prefix(k);
        auto R = root_at(A, xi, alpha);
        auto next = xi.letter(k);
        // beta = e
        bool ok = true;
        for (auto& x : p.X) ok &= R.contains(x);
        for (auto& y : p.Y) ok &= !R.contains(y);
        for (auto& z : p.Z) ok &= !(next && *next == z);
        if (ok) {
            out.yes = true;
            out.t = GroupWord::positive(alpha);
            return out;
        }
        // beta nonempty: first letter in S, last letter in R minus last(alpha)
        auto T = alpha.empty() ? R : R.minus(DescribableSet::of(A.shape(), {alpha.back()}));
        if (S.is_empty() || T.is_empty()) continue;
        auto r = G.reach(S, T);
        if (r.yes && r.exact) {
            out.yes = true;
            if (!r.path.empty()) out.t = GroupWord::positive(alpha) * GroupWord::positive(r.path).inverse();
            return out;
        }
        possible |= r.yes;
        out.exact &= r.exact;
    }
    if (possible) out.yes = true, out.exact = false;
    return out;
}

inline bool pattern_contains(const ClassGraph& G, const Pattern& p, const SpectrumPoint& xi) {
    return pattern_query(G, p, xi).yes;
}

struct InclusionEdge {
    Index big, small;     // E_small is contained in E_big
    PositiveWord path;
    bool exact = true;
};

// Sub-relation of E-inclusion: a path x -> y gives E_y within E_x.
inline std::vector<InclusionEdge> e_inclusion_order(const ClassGraph& G, const std::vector<Index>& probe) {
    std::vector<InclusionEdge> out;
    for (auto& x : probe)
        for (auto& y : probe) {
            if (x == y) continue;
            auto r = G.path(x, y);
            if (r.yes) out.push_back({x, y, r.path, r.exact});
        }
    return out;
}

// A point of E_x outside every E_y, y in row(x).
inline std::optional<SpectrumPoint> garfo_counterexample_search(const ClassGraph& G, const Index& x, std::size_t samples,
                                                                std::uint64_t seed = 7) {
    const auto& A = G.spec();
    A.check_index(x);
    auto row = A.row_support(x);
    if (!row.is_finite()) {
        auto empty = PositiveWord{};
        for (auto& c : A.column_cluster_points()) {
            if (!c.column.contains(x)) continue;
            auto r = G.reach(row, c.column);
            if (!r.yes && r.exact) return SpectrumPoint::bounded_point(empty, c.column);
        }
        return std::nullopt;
    }
    Sampler smp(G, seed);
    auto ys = row.elements();
    for (std::size_t k = 0; k < samples; ++k) {
        auto xi = smp.point(Ambient::tilde);
        if (!xi || !in_tilde_omega(A, *xi)) continue;
        bool ex = e_x_contains(G, *xi, x);
        bool any = false;
        for (auto& y : ys) any |= e_x_contains(G, *xi, y);
        if (ex != any) return xi;
    }
    return std::nullopt;
}

// Is the fixed point of t isolated in its orbit? Delegates to the transitory test on gamma.
inline std::pair<bool, bool> isolated_in_orbit(const ClassGraph& G, const GroupWord& t, Reading reading = Reading::literal) {
    if (t.is_identity() || !fixed_point(G.spec(), t)) throw DomainError("isolated_in_orbit: t has no fixed point");
    auto d = *conjugate_circuit_decomposition(t);
    return is_transitory(G, d.gamma, reading);
}

} // namespace ckalg
