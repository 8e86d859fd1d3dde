#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "matrix_spec.hpp"
#include "sampling.hpp"
#include "spectrum.hpp"
#include "words.hpp"

namespace ckalg {

// One generator S_g or its adjoint.
struct Gen {
    Index g;
    bool star = false;
    bool operator==(const Gen&) const = default;
};
using OpWord = std::vector<Gen>;

// coef * S_alpha * prod_{x in middle} Q_x * S_beta^*
struct Monomial {
    bool coef = true;
    PositiveWord alpha;
    std::set<Index> middle;
    PositiveWord beta;

    static Monomial one() { return {}; }
    static Monomial zero() { return {false, {}, {}, {}}; }
    bool is_zero() const { return !coef; }
    bool is_one() const { return coef && alpha.empty() && middle.empty() && beta.empty(); }
    bool operator==(const Monomial&) const = default;

    OpWord letters() const {
        OpWord w;
        if (!coef) return w;
        for (auto& a : alpha) w.push_back({a, false});
        for (auto& q : middle) {
            w.push_back({q, true});
            w.push_back({q, false});
        }
        for (auto it = beta.rbegin(); it != beta.rend(); ++it) w.push_back({*it, true});
        return w;
    }
};

// Right multiplication by one generator.
inline Monomial times(const MatrixSpec& A, Monomial m, const Gen& s) {
    if (m.is_zero()) return m;
    const Index& j = s.g;
    if (!s.star) {
        if (!m.beta.empty()) {
            Index b1 = m.beta.front();
            if (!(b1 == j)) return Monomial::zero();  // S_i^* S_j = 0
            m.beta.erase(m.beta.begin());
            if (!m.beta.empty()) {
                if (!A.entry(b1, m.beta.front())) return Monomial::zero();
            } else if (m.alpha.empty() || !(m.alpha.back() == b1)) {
                m.middle.insert(b1);
            }
            return m;
        }
        for (auto& q : m.middle)
            if (!A.entry(q, j)) return Monomial::zero();  // Q_i S_j = A(i,j) S_j
        m.middle.clear();
        if (!m.alpha.empty() && !A.entry(m.alpha.back(), j)) return Monomial::zero();
        m.alpha.push_back(j);
        return m;
    }
    if (!m.beta.empty()) {
        if (!A.entry(j, m.beta.front())) return Monomial::zero();
    } else {
        m.middle.erase(j);  // Q_j S_j^* = S_j^*
    }
    m.beta.insert(m.beta.begin(), j);
    return m;
}

inline Monomial rewrite(const MatrixSpec& A, const OpWord& w) {
    Monomial m = Monomial::one();
    for (auto& s : w) {
        A.check_index(s.g);
        m = times(A, m, s);
    }
    return m;
}

inline Monomial mul(const MatrixSpec& A, const Monomial& a, const Monomial& b) {
    if (a.is_zero() || b.is_zero()) return Monomial::zero();
    Monomial m = a;
    for (auto& s : b.letters()) m = times(A, m, s);
    return m;
}

inline Monomial adjoint(const MatrixSpec& A, const Monomial& m) {
    OpWord w = m.letters();
    std::reverse(w.begin(), w.end());
    for (auto& s : w) s.star = !s.star;
    return m.is_zero() ? m : rewrite(A, w);
}

inline OpWord u_word(const GroupWord& t) {
    OpWord w;
    for (auto& l : t.letters()) w.push_back({l.g, l.sign < 0});
    return w;
}

inline OpWord adjoint_word(OpWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& s : w) s.star = !s.star;
    return w;
}

inline Monomial u_monomial(const MatrixSpec& A, const GroupWord& t) { return rewrite(A, u_word(t)); }

// e(t) = u(t) u(t)^*
inline Monomial e_monomial(const MatrixSpec& A, const GroupWord& t) {
    auto w = u_word(t);
    auto adj = adjoint_word(w);
    w.insert(w.end(), adj.begin(), adj.end());
    return rewrite(A, w);
}

inline std::string render(const Monomial& m, const IndexUniverse& u) {
    if (m.is_zero()) return "0";
    if (m.is_one()) return "1";
    std::vector<std::string> parts;
    std::string s;
    for (auto& a : m.alpha) s += "S[" + u.name(a) + "]";
    if (!s.empty()) parts.push_back(s);
    s.clear();
    for (auto& q : m.middle) s += "Q[" + u.name(q) + "]";
    if (!s.empty()) parts.push_back(s);
    s.clear();
    for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) s += "S[" + u.name(*it) + "]*";
    if (!s.empty()) parts.push_back(s);
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " · " : "") + parts[k];
    return out;
}

inline std::string to_string(const OpWord& w, const IndexUniverse& u) {
    if (w.empty()) return "1";
    std::string s;
    for (auto& g : w) s += "S[" + u.name(g.g) + "]" + (g.star ? "*" : "");
    return s;
}

// Tokens S1, S[x[2]]*, Q2, P[1]; "1" is the unit, "0" the zero word.
// Returns nullopt for the zero word.
inline std::optional<OpWord> parse_opword(const std::string& text, const IndexUniverse& u) {
    OpWord w;
    bool zero = false;
    std::size_t k = 0;
    auto fail = [&](const std::string& msg) { throw InputError(msg + " at column " + std::to_string(k + 1)); };
    while (k < text.size()) {
        char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '*') {
            if (c == '*') fail("stray '*'");
            ++k;
            continue;
        }
        if (c == '1' || c == '0') {
            std::size_t e = k + 1;
            if (e < text.size() && !std::isspace(static_cast<unsigned char>(text[e]))) fail("unexpected character");
            zero |= c == '0';
            k = e;
            continue;
        }
        if (c != 'S' && c != 'Q' && c != 'P') fail(std::string("expected S, Q or P, got '") + c + "'");
        ++k;
        std::string name;
        if (k < text.size() && text[k] == '[') {
            int depth = 0;
            std::size_t b = k;
            for (; k < text.size(); ++k) {
                if (text[k] == '[') ++depth;
                if (text[k] == ']' && --depth == 0) break;
            }
            if (k == text.size()) fail("unbalanced '['");
            name = text.substr(b + 1, k - b - 1);
            ++k;
        } else {
            std::size_t b = k;
            while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
            name = text.substr(b, k - b);
        }
        auto g = u.lookup(name);
        if (!g) fail("unknown generator '" + name + "'");
        bool star = k < text.size() && text[k] == '*';
        if (star) ++k;
        if (c == 'S') {
            w.push_back({*g, star});
        } else {
            if (star) fail("projections are self-adjoint; drop the '*'");
            if (c == 'Q') w.insert(w.end(), {{*g, true}, {*g, false}});
            else w.insert(w.end(), {{*g, false}, {*g, true}});
        }
    }
    if (zero) return std::nullopt;
    return w;
}

// ---- clopen constraints ----

struct ClopenConstraint {
    std::vector<GroupWord> positives;  // t in xi
    std::vector<GroupWord> negatives;  // s notin xi
    Ambient ambient = Ambient::tau;
};

inline ClopenConstraint monomial_to_constraint(const MatrixSpec& A, const Monomial& m, Ambient amb) {
    (void)A;
    if (m.is_zero()) throw DomainError("monomial_to_constraint: zero monomial");
    ClopenConstraint c;
    c.ambient = amb;
    auto a = GroupWord::positive(m.alpha);
    if (!m.alpha.empty()) c.positives.push_back(a);
    if (!m.beta.empty()) c.positives.push_back(a * GroupWord::positive(m.beta).inverse());
    for (auto& x : m.middle) c.positives.push_back(a * GroupWord::letter(x, -1));
    // points are convex, so e and geodesic prefixes of other positives add nothing
    auto prefix_of = [](const GroupWord& p, const GroupWord& t) {
        if (p.length() >= t.length()) return false;
        for (std::size_t k = 0; k < p.length(); ++k)
            if (!(p[k].g == t[k].g && p[k].sign == t[k].sign)) return false;
        return true;
    };
    std::vector<GroupWord> kept;
    for (auto& p : c.positives) {
        if (p.is_identity() || std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
        if (std::any_of(c.positives.begin(), c.positives.end(), [&](const GroupWord& t) { return prefix_of(p, t); })) continue;
        kept.push_back(p);
    }
    c.positives = std::move(kept);
    return c;
}

struct EmptinessResult {
    bool empty = true;
    std::optional<SpectrumPoint> witness;
    std::string witness_note;           // when the witness is only described
    std::vector<std::string> derivation;
};

namespace detail {

struct Split {
    PositiveWord a, b;  // t = a b^-1
    GroupWord t;
};

class Solver {
public:
    Solver(const ClassGraph& G, const ClopenConstraint& c) : G_(G), A_(G.spec()), u_(A_.universe()), c_(c) {}

    EmptinessResult run() {
        EmptinessResult r;
        if (!prepare()) {
            r.derivation = log_;
            return r;
        }
        if (search(alpha_max_, r)) {
            r.empty = false;
            r.derivation.clear();
            return r;
        }
        r.derivation = log_;
        return r;
    }

private:
    std::string w(const GroupWord& t) const { return to_string(t, u_); }
    std::string w(const PositiveWord& t) const { return to_string(t, u_); }

    bool dead(const std::string& why) {
        log_.push_back(why);
        return false;
    }

    bool prepare() {
        for (auto& t : c_.positives) {
            auto d = decompose_pos_neg(t);
            if (!d) return dead(w(t) + " is not of the form a b^-1, so it lies in no point");
            if (!is_admissible(A_, d->first)) return dead("stem part " + w(d->first) + " of " + w(t) + " is not admissible");
            if (!is_admissible(A_, d->second))
                return dead("root path " + w(d->second) + " of " + w(t) + " is not admissible");
            pos_.push_back({d->first, d->second, t});
        }
        for (auto& p : pos_) {
            if (p.a.size() > alpha_max_.size()) alpha_max_ = p.a;
        }
        for (auto& p : pos_)
            if (!is_prefix(p.a, alpha_max_))
                return dead("stems " + w(p.a) + " and " + w(alpha_max_) + " are not prefix-comparable");
        for (auto& s : c_.negatives) {
            auto d = decompose_pos_neg(s);
            if (!d || !is_admissible(A_, d->first)) continue;          // never in a point
            if (!d->second.empty() && !is_admissible(A_, d->second)) continue;
            neg_.push_back({d->first, d->second, s});
        }
        // positives strictly inside alpha_max: roots are columns of the next letter
        for (auto& p : pos_) {
            if (p.b.empty() || p.a.size() >= alpha_max_.size()) continue;
            if (!A_.entry(p.b.back(), alpha_max_[p.a.size()]))
                return dead(w(p.t) + " needs A(" + u_.name(p.b.back()) + "," + u_.name(alpha_max_[p.a.size()]) + ") = 1");
        }
        for (auto& n : neg_) {
            if (!is_prefix(n.a, alpha_max_) || n.a.size() >= alpha_max_.size()) continue;
            if (n.b.empty()) return dead(w(n.t) + " is a prefix of the forced stem " + w(alpha_max_));
            if (A_.entry(n.b.back(), alpha_max_[n.a.size()]))
                return dead(w(n.t) + " is forced in by A(" + u_.name(n.b.back()) + "," + u_.name(alpha_max_[n.a.size()]) + ") = 1");
        }
        return true;
    }

    // tau is the stem built so far; every positive stem is a prefix of tau.
    bool search(const PositiveWord& tau, EmptinessResult& r) {
        std::vector<Index> must, must_not;
        for (auto& p : pos_)
            if (p.a == tau && !p.b.empty()) must.push_back(p.b.back());
        for (auto& n : neg_) {
            if (!(n.a == tau)) continue;
            if (n.b.empty()) return dead(w(n.t) + " equals the stem prefix " + w(tau));
            must_not.push_back(n.b.back());
        }
        // 1. stop: bounded point with stem tau
        {
            auto P = DescribableSet::of(A_.shape(), must);
            if (!tau.empty()) P.insert(tau.back());
            auto N = DescribableSet::of(A_.shape(), must_not);
            if (c_.ambient == Ambient::tau) {
                if (!P.intersects(N)) {
                    r.witness = SpectrumPoint::bounded_point(tau, P);
                    return true;
                }
                log_.push_back("stem " + w(tau) + ": root would need " + P.to_string(u_) + " and avoid " + N.to_string(u_));
            } else {
                for (auto& cp : A_.column_cluster_points())
                    if (P.subset_of(cp.column) && !cp.column.intersects(N)) {
                        r.witness = SpectrumPoint::bounded_point(tau, cp.column);
                        return true;
                    }
                log_.push_back("stem " + w(tau) + ": no column cluster point contains " + P.to_string(u_) + " and avoids " +
                               N.to_string(u_));
            }
        }
        // 2. the next letter is one a negative constraint mentions
        std::set<Index> mentioned;
        for (auto& n : neg_)
            if (n.a.size() > tau.size() && is_prefix(tau, n.a)) mentioned.insert(n.a[tau.size()]);
        auto X = must;
        if (!tau.empty()) X.push_back(tau.back());
        for (auto& y : mentioned) {
            bool ok = tau.empty() || A_.entry(tau.back(), y);
            for (auto& x : must) ok &= A_.entry(x, y);
            for (auto& z : must_not) ok &= !A_.entry(z, y);
            if (!ok) {
                log_.push_back("stem " + w(tau) + " cannot continue with " + u_.name(y));
                continue;
            }
            auto next = tau;
            next.push_back(y);
            if (search(next, r)) return true;
        }
        // 3. a fresh letter: every remaining constraint is then settled
        auto fresh = A_.axyj_support(X, must_not).set.minus(DescribableSet::of(A_.shape(), {mentioned.begin(), mentioned.end()}));
        if (fresh.is_empty()) {
            log_.push_back("stem " + w(tau) + ": no admissible fresh continuation");
            return false;
        }
        Index y = *fresh.first();
        auto next = tau;
        next.push_back(y);
        if (c_.ambient == Ambient::tau) {
            r.witness = SpectrumPoint::bounded_point(next, DescribableSet::of(A_.shape(), {y}));
            return true;
        }
        // no row is zero, so an infinite path leaves y
        if (auto inf = G_.periodic_path_from(y)) {
            r.witness = SpectrumPoint::unbounded_point(inf->prepend(tau));
        } else {
            r.witness_note = "unbounded point with stem prefix " + w(next) + " continued along any infinite path";
        }
        return true;
    }

    const ClassGraph& G_;
    const MatrixSpec& A_;
    const IndexUniverse& u_;
    const ClopenConstraint& c_;
    std::vector<Split> pos_, neg_;
    PositiveWord alpha_max_;
    std::vector<std::string> log_;
};

} // namespace detail

inline EmptinessResult solve(const ClassGraph& G, const ClopenConstraint& c) { return detail::Solver(G, c).run(); }

inline bool is_empty(const ClassGraph& G, const ClopenConstraint& c) { return solve(G, c).empty; }

inline bool is_zero_u(const ClassGraph& G, const GroupWord& t, Ambient amb) {
    if (!decompose_pos_neg(t)) return true;
    return is_empty(G, ClopenConstraint{{t}, {}, amb});
}

inline bool leq_projection(const ClassGraph& G, const ClopenConstraint& p, const ClopenConstraint& q) {
    if (p.ambient != q.ambient) throw DomainError("leq_projection: ambient mismatch");
    for (auto& t : q.positives) {
        auto c = p;
        c.negatives.push_back(t);
        if (!is_empty(G, c)) return false;
    }
    for (auto& s : q.negatives) {
        auto c = p;
        c.positives.push_back(s);
        if (!is_empty(G, c)) return false;
    }
    return true;
}

} // namespace ckalg
