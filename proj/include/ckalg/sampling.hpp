#pragma once

#include <random>
#include <vector>

#include "graph.hpp"
#include "spectrum.hpp"
#include "words.hpp"

namespace ckalg {

enum class Ambient { tau, tilde };

inline const char* to_string(Ambient a) { return a == Ambient::tau ? "tau" : "tilde"; }

// Seeded generators for spectrum points and group words.
class Sampler {
public:
    Sampler(const ClassGraph& G, std::uint64_t seed, long per_track = 6)
        : G_(&G), rng_(seed), verts_(G.spec().universe().sample(per_track)) {}

    std::mt19937_64& rng() { return rng_; }
    const std::vector<Index>& vertices() const { return verts_; }

    Index vertex() { return verts_[pick(verts_.size())]; }

    // Admissible walk with up to max_len letters.
    PositiveWord walk(std::size_t max_len) {
        std::size_t len = pick(max_len + 1);
        PositiveWord w;
        if (len == 0) return w;
        w.push_back(vertex());
        while (w.size() < len) {
            auto next = successors(w.back());
            if (next.empty()) break;
            w.push_back(next[pick(next.size())]);
        }
        return w;
    }

    GroupWord word(std::size_t max_len) {
        std::size_t len = pick(max_len + 1);
        GroupWord t;
        while (t.length() < len) t = t * GroupWord::letter(vertex(), coin() ? 1 : -1);
        return t;
    }

    // Unbounded point: random walk continued into a reachable circuit.
    std::optional<SpectrumPoint> unbounded(std::size_t max_pre = 4) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            auto w = walk(max_pre + 1);
            if (w.empty()) w.push_back(vertex());
            auto tail = G_->periodic_path_from(w.back());
            if (!tail) continue;
            w.pop_back();
            return SpectrumPoint::unbounded_point(tail->prepend(w));
        }
        return std::nullopt;
    }

    // Bounded point; tilde roots are column cluster points.
    std::optional<SpectrumPoint> bounded(Ambient amb, std::size_t max_stem = 4) {
        const auto& A = G_->spec();
        auto clusters = A.column_cluster_points();
        for (int attempt = 0; attempt < 32; ++attempt) {
            auto w = walk(max_stem);
            DescribableSet R(A.shape());
            if (amb == Ambient::tilde) {
                std::vector<DescribableSet> ok;
                for (auto& c : clusters)
                    if (w.empty() || c.column.contains(w.back())) ok.push_back(c.column);
                if (ok.empty()) continue;
                R = ok[pick(ok.size())];
            } else {
                for (auto& v : verts_)
                    if (coin()) R.insert(v);
                if (!w.empty()) R.insert(w.back());
            }
            return SpectrumPoint::bounded_point(w, R);
        }
        return std::nullopt;
    }

    std::optional<SpectrumPoint> point(Ambient amb) {
        if (coin()) {
            if (auto p = unbounded()) return p;
        }
        if (auto p = bounded(amb)) return p;
        return unbounded();
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

private:
    std::vector<Index> successors(const Index& v) {
        std::vector<Index> out;
        for (auto& w : G_->spec().row_support(v).members_upto(G_->spec().universe().finite() ? 0 : verts_.back().n))
            out.push_back(w);
        return out;
    }

    const ClassGraph* G_;
    std::mt19937_64 rng_;
    std::vector<Index> verts_;
};

} // namespace ckalg
