#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "describable_set.hpp"
#include "error.hpp"
#include "matrix_spec.hpp"
#include "text.hpp"
#include "words.hpp"

namespace ckalg {

// A point of the spectrum: finite stem plus tip root, or an infinite stem.
class SpectrumPoint {
public:
    static SpectrumPoint bounded_point(PositiveWord stem, DescribableSet root) {
        SpectrumPoint p;
        p.bounded_ = true;
        p.stem_ = std::move(stem);
        p.root_ = std::move(root);
        return p;
    }
    static SpectrumPoint unbounded_point(EvPeriodicWord w) {
        SpectrumPoint p;
        p.bounded_ = false;
        p.inf_ = std::move(w);
        return p;
    }

    bool bounded() const { return bounded_; }
    const PositiveWord& stem() const {
        if (!bounded_) throw DomainError("stem() on an unbounded point");
        return stem_;
    }
    const EvPeriodicWord& infinite_stem() const {
        if (bounded_) throw DomainError("infinite_stem() on a bounded point");
        return inf_;
    }
    const DescribableSet& root() const {
        if (!bounded_) throw DomainError("unbounded points carry no tip root");
        return root_;
    }

    // k-th stem letter (0-based), absent past the end of a finite stem.
    std::optional<Index> letter(std::size_t k) const {
        if (bounded_) return k < stem_.size() ? std::optional<Index>(stem_[k]) : std::nullopt;
        return inf_.at(k);
    }
    bool has_prefix(const PositiveWord& a) const { return bounded_ ? is_prefix(a, stem_) : inf_.has_prefix(a); }
    PositiveWord prefix(std::size_t n) const {
        return bounded_ ? PositiveWord(stem_.begin(), stem_.begin() + std::min(n, stem_.size())) : inf_.prefix(n);
    }
    // Stem prefixes of length <= horizon() cover every distinct root_at value.
    std::size_t horizon() const { return bounded_ ? stem_.size() : inf_.horizon(); }

    bool operator==(const SpectrumPoint& o) const {
        if (bounded_ != o.bounded_) return false;
        return bounded_ ? stem_ == o.stem_ && root_ == o.root_ : inf_ == o.inf_;
    }

private:
    bool bounded_ = true;
    PositiveWord stem_;
    EvPeriodicWord inf_;
    DescribableSet root_;
};

inline SpectrumPoint make_bounded(const MatrixSpec& A, const PositiveWord& w, const DescribableSet& R) {
    if (!(R.shape() == A.shape())) throw DomainError("root set from another universe");
    if (!is_admissible(A, w)) throw DomainError("stem is not admissible");
    if (!w.empty() && !R.contains(w.back())) throw DomainError("last letter of the stem is not in the root");
    return SpectrumPoint::bounded_point(w, R);
}

inline SpectrumPoint make_unbounded(const MatrixSpec& A, const EvPeriodicWord& w) {
    if (!is_admissible(A, w)) throw DomainError("infinite stem is not admissible");
    return SpectrumPoint::unbounded_point(w);
}

inline SpectrumPoint phi(const MatrixSpec& A) { return SpectrumPoint::bounded_point({}, DescribableSet::empty(A.shape())); }

// R_alpha(xi) = {x : alpha x^-1 in xi}, for alpha a stem prefix.
inline DescribableSet root_at(const MatrixSpec& A, const SpectrumPoint& xi, const PositiveWord& alpha) {
    if (!xi.has_prefix(alpha)) throw DomainError("root_at: word is not a stem prefix");
    auto next = xi.letter(alpha.size());
    if (!next) return xi.root();
    return A.column(*next);
}

inline bool contains(const MatrixSpec& A, const SpectrumPoint& xi, const GroupWord& t) {
    auto d = decompose_pos_neg(t);
    if (!d) return false;
    auto& [alpha, beta] = *d;
    if (!xi.has_prefix(alpha)) return false;
    if (beta.empty()) return true;
    return is_admissible(A, beta) && root_at(A, xi, alpha).contains(beta.back());
}

inline bool in_tilde_omega(const MatrixSpec& A, const SpectrumPoint& xi) {
    if (!xi.bounded()) return true;
    return A.is_cluster_point(xi.root());
}

inline bool is_phi(const SpectrumPoint& xi) { return xi.bounded() && xi.stem().empty() && xi.root().is_empty(); }

inline bool in_omega_A(const MatrixSpec& A, const SpectrumPoint& xi) { return in_tilde_omega(A, xi) && !is_phi(xi); }

inline bool equal(const SpectrumPoint& a, const SpectrumPoint& b) { return a == b; }

// Basic neighbourhood data: {eta : base in eta, base x^-1 in eta (x in X),
// base y^-1 notin eta (y in Y), base z notin eta (z in Z)}.
struct Pattern {
    PositiveWord base;
    std::vector<Index> X, Y, Z;
};

inline bool pattern_holds_at(const MatrixSpec& A, const Pattern& p, const SpectrumPoint& xi) {
    auto b = GroupWord::positive(p.base);
    if (!contains(A, xi, b)) return false;
    for (auto& x : p.X)
        if (!contains(A, xi, b * GroupWord::letter(x, -1))) return false;
    for (auto& y : p.Y)
        if (contains(A, xi, b * GroupWord::letter(y, -1))) return false;
    for (auto& z : p.Z)
        if (contains(A, xi, b * GroupWord::letter(z))) return false;
    return true;
}

// V_n for an unbounded point.
inline Pattern neighborhood(const MatrixSpec& A, const SpectrumPoint& xi, std::size_t n) {
    (void)A;
    if (xi.bounded()) throw DomainError("depth neighbourhoods are for unbounded points; pass X, Y, Z");
    Pattern p;
    p.base = xi.prefix(n);
    if (!p.base.empty()) p.X.push_back(p.base.back());
    return p;
}

// W_{X,Y,Z} around a bounded point.
inline Pattern neighborhood(const MatrixSpec& A, const SpectrumPoint& xi, const std::vector<Index>& X,
                            const std::vector<Index>& Y, const std::vector<Index>& Z) {
    if (!xi.bounded()) throw DomainError("(X,Y,Z) neighbourhoods are for bounded points; pass a depth");
    for (auto& x : X) {
        A.check_index(x);
        if (!xi.root().contains(x)) throw DomainError("X is not contained in the root");
    }
    for (auto& y : Y) {
        A.check_index(y);
        if (xi.root().contains(y)) throw DomainError("Y meets the root");
    }
    for (auto& z : Z) A.check_index(z);
    return Pattern{xi.stem(), X, Y, Z};
}

inline std::string to_string(const SpectrumPoint& xi, const IndexUniverse& u) {
    if (!xi.bounded()) return "stem=" + to_string(xi.infinite_stem(), u);
    return "stem=" + to_string(xi.stem(), u) + ";root=" + xi.root().to_string(u);
}

// "stem=<word>;root={...}" or "stem=<pre>(<per>)^inf"
inline SpectrumPoint parse_point(const std::string& text, const MatrixSpec& A) {
    const auto& u = A.universe();
    std::string stem_txt, root_txt;
    bool have_root = false, have_stem = false;
    std::size_t b = 0;
    while (b <= text.size()) {
        auto e = text.find(';', b);
        if (e == std::string::npos) e = text.size();
        std::string part = text.substr(b, e - b);
        auto first = part.find_first_not_of(" \t");
        if (first != std::string::npos) {
            part = part.substr(first);
            if (part.rfind("stem=", 0) == 0) stem_txt = part.substr(5), have_stem = true;
            else if (part.rfind("root=", 0) == 0) root_txt = part.substr(5), have_root = true;
            else throw InputError("point syntax: expected 'stem=' or 'root=', got '" + part + "'");
        }
        b = e + 1;
    }
    if (!have_stem) throw InputError("point syntax: missing 'stem='");
    if (looks_periodic(stem_txt)) {
        if (have_root) throw InputError("unbounded points take no root");
        return make_unbounded(A, parse_periodic(stem_txt, u));
    }
    if (!have_root) throw InputError("bounded points need 'root={...}'");
    return make_bounded(A, parse_positive(stem_txt, u), parse_set(root_txt, u));
}

} // namespace ckalg
