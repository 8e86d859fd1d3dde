#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "universe.hpp"

namespace ckalg {

// Eventually periodic 0/1 sequence indexed by n >= 1.
struct TrackSeq {
    long start = 1;                // periodic regime begins here
    std::vector<char> head;        // n in [1, start)
    std::vector<char> cycle{0};    // n >= start, position (n - start) % size

    bool at(long n) const {
        if (n < 1) return false;
        if (n < start) return head[n - 1];
        return cycle[(n - start) % static_cast<long>(cycle.size())];
    }
    long period() const { return static_cast<long>(cycle.size()); }
    bool finite() const { return std::none_of(cycle.begin(), cycle.end(), [](char c) { return c; }); }
    bool cofinite() const { return std::all_of(cycle.begin(), cycle.end(), [](char c) { return c; }); }

    void normalize() {
        long P = period();
        for (long p = 1; p < P; ++p) {
            if (P % p) continue;
            bool ok = true;
            for (long k = p; k < P && ok; ++k) ok = cycle[k] == cycle[k - p];
            if (ok) {
                cycle.resize(p);
                break;
            }
        }
        while (!head.empty() && head.back() == cycle.back()) {
            head.pop_back();
            std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
            --start;
        }
    }

    template <class F>
    static TrackSeq combine(const TrackSeq& a, const TrackSeq& b, F f) {
        TrackSeq r;
        r.start = std::max(a.start, b.start);
        long P = std::lcm(a.period(), b.period());
        if (P > (1L << 20)) throw DomainError("period of combined set too large");
        r.head.resize(r.start - 1);
        for (long n = 1; n < r.start; ++n) r.head[n - 1] = f(a.at(n), b.at(n));
        r.cycle.resize(P);
        for (long k = 0; k < P; ++k) r.cycle[k] = f(a.at(r.start + k), b.at(r.start + k));
        r.normalize();
        return r;
    }

    bool operator==(const TrackSeq&) const = default;
};

// Subset of a universe: a bitset for finite universes, one eventually
// periodic sequence per track otherwise. Always kept in normal form.
class DescribableSet {
public:
    DescribableSet() = default;
    explicit DescribableSet(Shape s) : shape_(s) {
        if (s.tracked) tracks_.resize(s.width);
        else bits_.assign(s.width, 0);
    }

    static DescribableSet empty(Shape s) { return DescribableSet(s); }
    static DescribableSet all(Shape s) { return DescribableSet(s).complement(); }

    static DescribableSet of(Shape s, const std::vector<Index>& xs) {
        DescribableSet r(s);
        for (auto& x : xs) r.insert(x);
        return r;
    }

    // {T[n] : n >= n0, n = n0 mod step}
    static DescribableSet tail(Shape s, int track, long n0, long step = 1) {
        if (!s.tracked) throw DomainError("track tails need a tracked universe");
        if (n0 < 1 || step < 1) throw DomainError("bad track tail");
        DescribableSet r(s);
        auto& q = r.tracks_.at(track);
        q.start = n0;
        q.head.assign(n0 - 1, 0);
        q.cycle.assign(step, 0);
        q.cycle[0] = 1;
        q.normalize();
        return r;
    }

    const Shape& shape() const { return shape_; }

    bool contains(const Index& i) const {
        if (shape_.tracked) return i.t >= 0 && i.t < shape_.width && tracks_[i.t].at(i.n);
        return i.t >= 0 && i.t < shape_.width && i.n == 0 && bits_[i.t];
    }

    bool is_finite() const {
        if (!shape_.tracked) return true;
        return std::all_of(tracks_.begin(), tracks_.end(), [](const TrackSeq& q) { return q.finite(); });
    }
    bool is_empty() const {
        if (!shape_.tracked) return std::none_of(bits_.begin(), bits_.end(), [](char c) { return c; });
        for (auto& q : tracks_)
            if (!q.finite() || std::any_of(q.head.begin(), q.head.end(), [](char c) { return c; }))
                return false;
        return true;
    }

    // Exhaustive list; only meaningful when is_finite().
    std::vector<Index> elements() const {
        if (!is_finite()) throw DomainError("elements() on an infinite set");
        return members_upto(0);
    }

    // Members with n <= bound (all members for finite universes; for a
    // finite tracked set pass 0 to get the exhaustive list).
    std::vector<Index> members_upto(long bound) const {
        std::vector<Index> out;
        if (!shape_.tracked) {
            for (int k = 0; k < shape_.width; ++k)
                if (bits_[k]) out.push_back({k, 0});
            return out;
        }
        for (int k = 0; k < shape_.width; ++k) {
            const auto& q = tracks_[k];
            long lim = bound > 0 ? bound : q.start - 1;
            for (long n = 1; n <= lim; ++n)
                if (q.at(n)) out.push_back({k, n});
        }
        return out;
    }

    std::optional<Index> first() const {
        if (!shape_.tracked) {
            auto m = members_upto(0);
            if (m.empty()) return std::nullopt;
            return m.front();
        }
        std::optional<Index> best;
        for (int k = 0; k < shape_.width; ++k) {
            const auto& q = tracks_[k];
            for (long n = 1; n < q.start + q.period(); ++n)
                if (q.at(n)) {
                    if (!best || n < best->n) best = Index{k, n};
                    break;
                }
        }
        return best;
    }

    std::size_t count() const { return elements().size(); }

    void insert(const Index& i) {
        if (shape_.tracked) {
            if (i.t < 0 || i.t >= shape_.width || i.n < 1) throw DomainError("index outside universe");
            auto& q = tracks_[i.t];
            if (q.at(i.n)) return;
            DescribableSet one(shape_);
            auto& o = one.tracks_[i.t];
            o.start = i.n + 1;
            o.head.assign(i.n, 0);
            o.head[i.n - 1] = 1;
            *this = unite(one);
        } else {
            if (i.t < 0 || i.t >= shape_.width || i.n != 0) throw DomainError("index outside universe");
            bits_[i.t] = 1;
        }
    }

    DescribableSet complement() const {
        DescribableSet r = *this;
        for (auto& b : r.bits_) b = !b;
        for (auto& q : r.tracks_) {
            for (auto& b : q.head) b = !b;
            for (auto& b : q.cycle) b = !b;
        }
        return r;
    }
    DescribableSet unite(const DescribableSet& o) const {
        return zip(o, [](bool a, bool b) { return a || b; });
    }
    DescribableSet intersect(const DescribableSet& o) const {
        return zip(o, [](bool a, bool b) { return a && b; });
    }
    DescribableSet minus(const DescribableSet& o) const {
        return zip(o, [](bool a, bool b) { return a && !b; });
    }
    bool subset_of(const DescribableSet& o) const { return minus(o).is_empty(); }
    bool intersects(const DescribableSet& o) const { return !intersect(o).is_empty(); }

    bool operator==(const DescribableSet& o) const {
        return shape_ == o.shape_ && bits_ == o.bits_ && tracks_ == o.tracks_;
    }

    const TrackSeq& track(int k) const { return tracks_.at(k); }

    // Largest threshold / lcm of periods over all tracks.
    long threshold() const {
        long m = 1;
        for (auto& q : tracks_) m = std::max(m, q.start);
        return m;
    }
    long period() const {
        long p = 1;
        for (auto& q : tracks_) p = std::lcm(p, q.period());
        return p;
    }

    // Canonical text, in the DSL set syntax.
    std::string to_string(const IndexUniverse& u) const {
        std::vector<std::string> parts;
        if (!shape_.tracked) {
            for (auto& i : members_upto(0)) parts.push_back(u.name(i));
            return "{" + join(parts) + "}";
        }
        std::vector<std::string> tails;
        for (int k = 0; k < shape_.width; ++k) {
            const auto& q = tracks_[k];
            const auto& nm = u.names()[k];
            for (long n = 1; n < q.start; ++n)
                if (q.head[n - 1]) parts.push_back(nm + "[" + std::to_string(n) + "]");
            if (q.finite()) continue;
            if (q.cofinite()) {
                tails.push_back(q.start == 1 ? nm + "[*]" : nm + "[" + std::to_string(q.start) + "..]");
                continue;
            }
            for (long r = 0; r < q.period(); ++r)
                if (q.cycle[r])
                    tails.push_back(nm + "[" + std::to_string(q.start + r) + ".. step " +
                                    std::to_string(q.period()) + "]");
        }
        std::string s = "{" + join(parts) + "}";
        if (tails.empty()) return s;
        std::string t = join(tails);
        return parts.empty() ? t : s + "," + t;
    }

private:
    template <class F>
    DescribableSet zip(const DescribableSet& o, F f) const {
        if (!(shape_ == o.shape_)) throw DomainError("set operation across universes");
        DescribableSet r(shape_);
        for (std::size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = f(bits_[k], o.bits_[k]);
        for (std::size_t k = 0; k < tracks_.size(); ++k) r.tracks_[k] = TrackSeq::combine(tracks_[k], o.tracks_[k], f);
        return r;
    }

    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k];
        return s;
    }

    Shape shape_;
    std::vector<char> bits_;
    std::vector<TrackSeq> tracks_;
};

} // namespace ckalg
