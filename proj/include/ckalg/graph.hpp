#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "describable_set.hpp"
#include "matrix_spec.hpp"
#include "words.hpp"

namespace ckalg {

struct Reach {
    bool yes = false;
    bool exact = true;
    std::vector<Index> path;  // concrete path when one was found
};

// Finite quotient of Gr(A). Finite universes: one node per generator.
// Tracked universes: explicit nodes T[n] for n <= B, plus one class node per
// (track, residue mod L) standing for all T[n] with n > B.
class ClassGraph {
public:
    enum class Kind { plain, cover, cofinite, some, shift, landing };
    struct Edge {
        int to;
        Kind kind;
        long shift = 0;
    };
    struct Node {
        bool is_class = false;
        Index v;            // explicit vertex, or (track, representative)
        long residue = 0;   // class nodes only
        std::vector<Edge> out;
    };

    explicit ClassGraph(const MatrixSpec& A) : A_(&A), B_(A.bound()), L_(A.modulus()) {
        const auto& u = A.universe();
        if (u.finite()) {
            for (int t = 0; t < u.width(); ++t) nodes_.push_back({false, {t, 0}, 0, {}});
            for (int t = 0; t < u.width(); ++t)
                for (auto& j : A.row_support({t, 0}).members_upto(0)) nodes_[t].out.push_back({j.t, Kind::plain});
            return;
        }
        for (auto& r : A.rules())
            if (auto* d = std::get_if<DiagRule>(&r)) maxshift_ = std::max(maxshift_, std::abs(d->q - d->p));
        for (int t = 0; t < u.width(); ++t)
            for (long n = 1; n <= B_; ++n) nodes_.push_back({false, {t, n}, 0, {}});
        for (int t = 0; t < u.width(); ++t)
            for (long r = 0; r < L_; ++r) nodes_.push_back({true, {t, rep(r)}, r, {}});
        for (std::size_t k = 0; k < nodes_.size(); ++k) build_edges(static_cast<int>(k));
    }

    const MatrixSpec& spec() const { return *A_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    long bound() const { return B_; }
    long modulus() const { return L_; }
    bool tracked() const { return A_->universe().tracked(); }

    int node_of(const Index& v) const {
        if (!tracked()) return v.t;
        if (v.n <= B_) return v.t * static_cast<int>(B_) + static_cast<int>(v.n - 1);
        return class_id(v.t, v.n % L_);
    }
    int class_id(int track, long residue) const {
        return static_cast<int>(A_->universe().width() * B_ + track * L_ + residue);
    }

    // Concrete vertices with index <= bound (all of them when finite).
    long concrete_bound() const { return tracked() ? B_ + 2 * L_ + 2 * maxshift_ + 24 : 0; }

    // Concrete BFS; returns a path start..target.
    std::optional<std::vector<Index>> concrete_path(const DescribableSet& from, const DescribableSet& to,
                                                    std::size_t cap = 200000) const {
        long cb = concrete_bound();
        std::map<Index, Index> parent;
        std::deque<Index> q;
        for (auto& s : from.members_upto(cb)) {
            parent.emplace(s, s);
            q.push_back(s);
        }
        while (!q.empty() && parent.size() < cap) {
            Index v = q.front();
            q.pop_front();
            if (to.contains(v)) {
                std::vector<Index> path{v};
                while (!(parent[path.back()] == path.back())) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (auto& w : A_->row_support(v).members_upto(cb))
                if (parent.emplace(w, v).second) q.push_back(w);
        }
        return std::nullopt;
    }

    // Paths of length >= 0 from a member of `from` to a member of `to`.
    Reach reach(const DescribableSet& from, const DescribableSet& to) const {
        Reach r;
        if (auto p = concrete_path(from, to)) {
            r.yes = true;
            r.path = *p;
            return r;
        }
        if (!tracked()) return r;  // BFS was exhaustive
        auto [certain, possible] = propagate(from);
        bool sure = false, maybe = false;
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const auto& nd = nodes_[k];
            if (!nd.is_class) {
                if (!to.contains(nd.v)) continue;
                sure |= certain[k] != Tag::none;
                maybe |= possible[k];
                continue;
            }
            auto hit = target_in_class(to, nd.v.t, nd.residue);
            if (hit == Tag::none) continue;
            maybe |= possible[k];
            if (certain[k] == Tag::all) sure = true;
            else if (certain[k] == Tag::cofinite && hit >= Tag::cofinite) sure = true;
        }
        r.yes = sure || maybe;
        r.exact = sure || !maybe;
        return r;
    }

    Reach reach(const Index& x, const DescribableSet& to) const {
        return reach(DescribableSet::of(A_->shape(), {x}), to);
    }

    // Path of length >= 1 from x to y.
    Reach path(const Index& x, const Index& y) const {
        auto r = reach(A_->row_support(x), DescribableSet::of(A_->shape(), {y}));
        if (r.yes && !r.path.empty()) r.path.insert(r.path.begin(), x);
        return r;
    }

    // An eventually periodic admissible word starting at y, if a circuit is reachable concretely.
    std::optional<EvPeriodicWord> periodic_path_from(const Index& y) const {
        long cb = concrete_bound();
        std::map<Index, Index> parent{{y, y}};
        std::deque<Index> q{y};
        while (!q.empty() && parent.size() < 20000) {
            Index v = q.front();
            q.pop_front();
            auto back = concrete_path(A_->row_support(v), DescribableSet::of(A_->shape(), {v}), 20000);
            if (back) {
                PositiveWord pre{v};
                while (!(parent[pre.back()] == pre.back())) pre.push_back(parent[pre.back()]);
                std::reverse(pre.begin(), pre.end());
                pre.pop_back();
                PositiveWord cyc{v};
                for (std::size_t k = 0; k + 1 < back->size(); ++k) cyc.push_back((*back)[k]);
                return EvPeriodicWord(pre, cyc);
            }
            for (auto& w : A_->row_support(v).members_upto(cb))
                if (parent.emplace(w, v).second) q.push_back(w);
        }
        return std::nullopt;
    }

    enum class Tag { none = 0, some = 1, cofinite = 2, all = 3 };

    // How much of class (t, residue) beyond B lies in s.
    Tag target_in_class(const DescribableSet& s, int t, long residue) const {
        long hi = std::max(s.threshold(), B_ + 1) + 2 * L_;
        bool any = false, every = true;
        for (long n = B_ + 1; n <= hi; ++n) {
            if (((n % L_) + L_) % L_ != residue) continue;
            bool in = s.contains({t, n});
            any |= in;
            every &= in;
        }
        long big = hi + L_ + ((residue - hi - L_) % L_ + L_) % L_;
        if (!s.contains({t, big})) return any ? Tag::some : Tag::none;
        return every ? Tag::all : Tag::cofinite;
    }

    // Certain tags and possible flags for everything reachable from `from`.
    std::pair<std::vector<Tag>, std::vector<char>> tags(const DescribableSet& from) const { return propagate(from); }

private:
    long rep(long r) const {
        long base = B_ + maxshift_ + 2 * L_ + 1;
        return base + ((r - base) % L_ + L_) % L_;
    }

    void build_edges(int k) {
        auto& nd = nodes_[k];
        auto succ = A_->row_support(nd.v);
        const auto& u = A_->universe();
        std::set<std::pair<int, int>> seen;
        auto add = [&](int to, Kind kind, long sh = 0) {
            if (kind != Kind::shift && !seen.emplace(to, static_cast<int>(kind)).second) return;
            nd.out.push_back({to, kind, sh});
        };
        for (auto& j : succ.members_upto(B_)) add(node_of(j), Kind::plain);
        for (int t = 0; t < u.width(); ++t)
            for (long r = 0; r < L_; ++r) {
                auto tag = target_in_class(succ, t, r);
                if (tag == Tag::all) add(class_id(t, r), Kind::cover);
                else if (tag == Tag::cofinite) add(class_id(t, r), Kind::cofinite);
                else if (tag == Tag::some) {
                    if (!nd.is_class) add(class_id(t, r), Kind::some);
                    else
                        for (auto& j : succ.members_upto(succ.threshold() + 2 * L_))
                            if (j.t == t && j.n > B_ && j.n % L_ == r) add(class_id(t, r), Kind::shift, j.n - nd.v.n);
                }
            }
        if (!nd.is_class) return;
        // members just above B whose diagonal successor falls to n <= B
        for (auto& rule : A_->rules()) {
            auto* d = std::get_if<DiagRule>(&rule);
            if (!d || d->row_track != nd.v.t || d->q >= d->p) continue;
            for (long n = B_ + 1; n <= B_ + (d->p - d->q); ++n) {
                if (n % L_ != nd.residue) continue;
                auto c = d->col_of({nd.v.t, n});
                if (c && c->n <= B_ && A_->entry({nd.v.t, n}, *c)) add(node_of(*c), Kind::landing);
            }
        }
    }

    std::pair<std::vector<Tag>, std::vector<char>> propagate(const DescribableSet& from) const {
        std::vector<Tag> cert(nodes_.size(), Tag::none);
        std::vector<char> poss(nodes_.size(), 0);
        std::deque<int> q;
        auto raise = [&](int k, Tag t, bool certain) {
            bool changed = false;
            if (!poss[k]) poss[k] = 1, changed = true;
            if (certain && t > cert[k]) cert[k] = t, changed = true;
            if (changed) q.push_back(k);
        };
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const auto& nd = nodes_[k];
            if (!nd.is_class) {
                if (from.contains(nd.v)) raise(static_cast<int>(k), Tag::all, true);
            } else {
                auto t = target_in_class(from, nd.v.t, nd.residue);
                if (t != Tag::none) raise(static_cast<int>(k), t, true);
            }
        }
        while (!q.empty()) {
            int k = q.front();
            q.pop_front();
            const auto& nd = nodes_[k];
            Tag ct = cert[k];
            bool live = ct != Tag::none;
            for (auto& e : nd.out) {
                switch (e.kind) {
                case Kind::plain: raise(e.to, Tag::all, live); break;
                case Kind::cover: raise(e.to, Tag::all, live); break;
                case Kind::cofinite: raise(e.to, Tag::cofinite, live); break;
                case Kind::some: raise(e.to, Tag::some, live); break;
                case Kind::landing: raise(e.to, Tag::all, ct == Tag::all); break;
                case Kind::shift: {
                    Tag t = Tag::none;
                    if (ct == Tag::all) t = e.shift < 0 ? Tag::all : (e.shift == 0 ? Tag::all : Tag::cofinite);
                    else if (ct == Tag::cofinite) t = Tag::cofinite;
                    else if (ct == Tag::some && e.shift >= 0) t = Tag::some;
                    if (ct == Tag::some && e.to == k && e.shift == L_) t = Tag::cofinite;
                    raise(e.to, t == Tag::none ? Tag::some : t, t != Tag::none);
                    break;
                }
                }
            }
        }
        return {cert, poss};
    }

    const MatrixSpec* A_;
    long B_, L_;
    long maxshift_ = 0;
    std::vector<Node> nodes_;
};

} // namespace ckalg
