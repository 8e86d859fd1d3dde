#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagonal_algebra.hpp"
#include "error.hpp"
#include "matrix_spec.hpp"
#include "words.hpp"

namespace ckalg {

// Admissible words over G0 of lengths 1..N in length-lex order.
struct PathBasis {
    std::vector<Index> gens;
    std::size_t depth = 0;
    std::vector<PositiveWord> words;
    std::map<PositiveWord, int> pos;

    int index_of(const PositiveWord& w) const {
        auto it = pos.find(w);
        return it == pos.end() ? -1 : it->second;
    }
    std::size_t size() const { return words.size(); }
};

// 0/1 matrix with at most one 1 per column: image[c] = row or -1.
struct PartialMatrix {
    std::vector<int> image;

    bool is_zero() const {
        return std::all_of(image.begin(), image.end(), [](int r) { return r < 0; });
    }
    bool is_diagonal() const {
        for (std::size_t c = 0; c < image.size(); ++c)
            if (image[c] >= 0 && image[c] != static_cast<int>(c)) return false;
        return true;
    }
    long entry(int r, int c) const { return image[c] == r ? 1 : 0; }
    bool operator==(const PartialMatrix&) const = default;
};

struct Term {
    long coef = 1;
    OpWord word;  // empty word = identity
};

struct Relation {
    std::string id;
    std::vector<Term> lhs, rhs;
};

struct WindowReport {
    std::string relation;
    std::size_t lo = 1, hi = 0;  // verified basis lengths
    bool pass = true;
    std::optional<PositiveWord> witness;
    std::string detail;
};

class TruncatedRep {
public:
    TruncatedRep(const MatrixSpec& A, std::vector<Index> gens, std::size_t N) : A_(&A) {
        if (gens.empty()) throw DomainError("build_rep: empty generator set");
        if (N < 2) throw DomainError("build_rep: depth must be at least 2");
        for (auto& g : gens) A.check_index(g);
        basis_.gens = std::move(gens);
        basis_.depth = N;
        std::vector<PositiveWord> layer;
        for (auto& g : basis_.gens) layer.push_back({g});
        for (std::size_t len = 1; len <= N && !layer.empty(); ++len) {
            for (auto& w : layer) basis_.words.push_back(w);
            std::vector<PositiveWord> next;
            for (auto& w : layer)
                for (auto& g : basis_.gens)
                    if (A.entry(w.back(), g)) next.push_back(concat(w, {g}));
            layer = std::move(next);
        }
        for (std::size_t k = 0; k < basis_.words.size(); ++k) basis_.pos[basis_.words[k]] = static_cast<int>(k);
        for (auto& g : basis_.gens) {
            bool cont = false;
            for (auto& h : basis_.gens) cont |= A.entry(g, h);
            if (!cont) warnings_.push_back(A.universe().name(g) + " has no continuation inside the generator set");
        }
    }

    const MatrixSpec& spec() const { return *A_; }
    const PathBasis& basis() const { return basis_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t depth() const { return basis_.depth; }

    bool in_gens(const Index& g) const { return std::find(basis_.gens.begin(), basis_.gens.end(), g) != basis_.gens.end(); }

    // One generator applied to a basis word; nullopt is the zero vector.
    std::optional<PositiveWord> apply(const Gen& s, const PositiveWord& w) const {
        if (!in_gens(s.g)) throw DomainError("generator " + A_->universe().name(s.g) + " is outside the representation");
        if (!s.star) {
            if (w.size() + 1 > basis_.depth || !A_->entry(s.g, w.front())) return std::nullopt;
            PositiveWord r{s.g};
            r.insert(r.end(), w.begin(), w.end());
            return r;
        }
        if (w.size() < 2 || !(w.front() == s.g)) return std::nullopt;
        return PositiveWord(w.begin() + 1, w.end());
    }

    // Operator word (rightmost letter acts first).
    std::optional<PositiveWord> apply(const OpWord& op, PositiveWord w) const {
        for (auto it = op.rbegin(); it != op.rend(); ++it) {
            auto r = apply(*it, w);
            if (!r) return std::nullopt;
            w = std::move(*r);
        }
        return w;
    }

    PartialMatrix matrix(const OpWord& op) const {
        PartialMatrix m;
        m.image.assign(basis_.size(), -1);
        for (std::size_t c = 0; c < basis_.size(); ++c)
            if (auto r = apply(op, basis_.words[c])) m.image[c] = basis_.index_of(*r);
        return m;
    }

    PartialMatrix matrix(const Monomial& m) const {
        if (m.is_zero()) return PartialMatrix{std::vector<int>(basis_.size(), -1)};
        return matrix(m.letters());
    }

    // Basis lengths on which the words act as on infinite paths.
    std::pair<std::size_t, std::size_t> window(const std::vector<OpWord>& ops) const {
        long lo = 0, hi = 0;
        for (auto& op : ops) {
            long off = 0;
            for (auto it = op.rbegin(); it != op.rend(); ++it) {
                off += it->star ? -1 : 1;
                lo = std::min(lo, off);
                hi = std::max(hi, off);
            }
        }
        long a = 1 - lo, b = static_cast<long>(basis_.depth) - hi;
        return {static_cast<std::size_t>(a), static_cast<std::size_t>(std::max(b, 0L))};
    }

    WindowReport verify(const Relation& rel) const {
        std::vector<OpWord> ops;
        for (auto* side : {&rel.lhs, &rel.rhs})
            for (auto& t : *side) ops.push_back(t.word);
        auto [lo, hi] = window(ops);
        WindowReport rep{rel.id, lo, hi, true, std::nullopt, ""};
        if (lo > hi)
            throw DomainError("verify " + rel.id + ": window empty at depth " + std::to_string(basis_.depth) +
                              " (needs lengths " + std::to_string(lo) + ".." + std::to_string(hi) + ")");
        auto eval = [&](const std::vector<Term>& side, const PositiveWord& w) {
            std::map<PositiveWord, long> v;
            for (auto& t : side)
                if (auto r = apply(t.word, w)) v[*r] += t.coef;
            std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
            return v;
        };
        for (auto& w : basis_.words) {
            if (w.size() < lo || w.size() > hi) continue;
            if (eval(rel.lhs, w) != eval(rel.rhs, w)) {
                rep.pass = false;
                rep.witness = w;
                rep.detail = "sides differ on basis vector " + to_string(w, A_->universe());
                return rep;
            }
        }
        return rep;
    }

    bool check_nonzero(const PositiveWord& alpha) const {
        if (alpha.empty()) throw DomainError("check_nonzero: empty word");
        if (alpha.size() + 1 > basis_.depth)
            throw DomainError("check_nonzero: inconclusive, needs |alpha| + 1 <= N");
        OpWord op;
        for (auto& a : alpha) op.push_back({a, false});
        return !matrix(op).is_zero();
    }

private:
    const MatrixSpec* A_;
    PathBasis basis_;
    std::vector<std::string> warnings_;
};

inline TruncatedRep build_rep(const MatrixSpec& A, const std::vector<Index>& gens, std::size_t N) {
    return TruncatedRep(A, gens, N);
}

// ---- relation families ----

namespace rel {

inline OpWord S(const Index& i) { return {{i, false}}; }
inline OpWord Sx(const Index& i) { return {{i, true}}; }
inline OpWord Q(const Index& i) { return {{i, true}, {i, false}}; }
inline OpWord P(const Index& i) { return {{i, false}, {i, true}}; }
inline OpWord cat(OpWord a, const OpWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
inline OpWord pos(const PositiveWord& a) {
    OpWord w;
    for (auto& x : a) w.push_back({x, false});
    return w;
}
inline OpWord adj(const OpWord& w) { return adjoint_word(w); }
inline OpWord e(const GroupWord& t) { return cat(u_word(t), adj(u_word(t))); }

} // namespace rel

inline std::vector<Relation> tck_relations(const MatrixSpec& A, const std::vector<Index>& G0) {
    using namespace rel;
    const auto& u = A.universe();
    std::vector<Relation> out;
    for (auto& i : G0)
        for (auto& j : G0) {
            std::string ij = u.name(i) + "," + u.name(j);
            if (i < j) out.push_back({"TCK1[" + ij + "]", {{1, cat(Q(i), Q(j))}}, {{1, cat(Q(j), Q(i))}}});
            if (!(i == j)) {
                out.push_back({"TCK2[" + ij + "]", {{1, cat(P(i), P(j))}}, {}});
                out.push_back({"TCK2'[" + ij + "]", {{1, cat(Sx(i), S(j))}}, {}});
            }
            std::vector<Term> rhs, rhs3;
            if (A.entry(i, j)) rhs = {{1, P(j)}}, rhs3 = {{1, S(j)}};
            out.push_back({"TCK3[" + ij + "]", {{1, cat(Q(i), P(j))}}, rhs});
            out.push_back({"TCK3'[" + ij + "]", {{1, cat(Q(i), S(j))}}, rhs3});
        }
    return out;
}

// CK2 rows that leave G0 are skipped and reported through `skipped`.
inline std::vector<Relation> ck_relations(const MatrixSpec& A, const std::vector<Index>& G0,
                                          std::vector<std::string>* skipped = nullptr) {
    using namespace rel;
    const auto& u = A.universe();
    std::vector<Relation> out;
    Relation ck1{"CK1", {}, {{1, {}}}};
    for (auto& i : G0) ck1.lhs.push_back({1, P(i)});
    out.push_back(ck1);
    auto g0 = DescribableSet::of(A.shape(), G0);
    for (auto& i : G0) {
        auto row = A.row_support(i);
        if (!row.is_finite() || !row.subset_of(g0)) {
            if (skipped) skipped->push_back("CK2[" + u.name(i) + "]: row not finite inside the generator set");
            continue;
        }
        Relation r{"CK2[" + u.name(i) + "]", {{1, Q(i)}}, {}};
        for (auto& j : row.elements()) r.rhs.push_back({1, P(j)});
        out.push_back(r);
    }
    return out;
}

// prod Q_x prod (1 - Q_y) = sum over the support of P_j
inline Relation elcond_relation(const MatrixSpec& A, const std::vector<Index>& X, const std::vector<Index>& Y,
                                const std::vector<Index>& G0) {
    using namespace rel;
    const auto& u = A.universe();
    auto sup = A.axyj_support(X, Y);
    if (!sup.finite) throw DomainError("ELCOND: support of A(X,Y,.) is infinite");
    auto g0 = DescribableSet::of(A.shape(), G0);
    if (!sup.set.subset_of(g0)) throw DomainError("ELCOND: support leaves the generator set");
    std::string id = "ELCOND[X={";
    for (std::size_t k = 0; k < X.size(); ++k) id += (k ? "," : "") + u.name(X[k]);
    id += "},Y={";
    for (std::size_t k = 0; k < Y.size(); ++k) id += (k ? "," : "") + u.name(Y[k]);
    id += "}]";
    Relation r{id, {}, {}};
    OpWord qx;
    for (auto& x : X) qx = cat(qx, Q(x));
    for (std::size_t mask = 0; mask < (std::size_t{1} << Y.size()); ++mask) {
        OpWord w = qx;
        long sign = 1;
        for (std::size_t k = 0; k < Y.size(); ++k)
            if (mask >> k & 1) w = cat(w, Q(Y[k])), sign = -sign;
        r.lhs.push_back({sign, w});
    }
    for (auto& j : sup.elements) r.rhs.push_back({1, P(j)});
    return r;
}

inline std::vector<PositiveWord> all_positive_words(const std::vector<Index>& G0, std::size_t max_len, bool include_empty) {
    std::vector<PositiveWord> out, layer{{}};
    if (include_empty) out.push_back({});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<PositiveWord> next;
        for (auto& w : layer)
            for (auto& g : G0) next.push_back(concat(w, {g}));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

inline std::vector<GroupWord> all_reduced_words(const std::vector<Index>& G0, std::size_t max_len) {
    std::vector<GroupWord> out{GroupWord{}}, layer{GroupWord{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<GroupWord> next;
        for (auto& w : layer)
            for (auto& g : G0)
                for (int s : {1, -1}) {
                    auto v = w * GroupWord::letter(g, s);
                    if (v.length() == len) next.push_back(v);
                }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Identities on positive words, plus one on group words.
inline std::vector<Relation> claim_relations(const MatrixSpec& A, const std::vector<Index>& G0, std::size_t max_len) {
    using namespace rel;
    const auto& u = A.universe();
    std::vector<Relation> out;
    auto words = all_positive_words(G0, max_len, false);
    auto name = [&](const PositiveWord& w) { return to_string(w, u); };
    for (auto& a : words) {
        bool delta = is_admissible(A, a);
        std::vector<Term> rhs;
        if (delta) rhs.push_back({1, Q(a.back())});
        out.push_back({"isometry[" + name(a) + "]", {{1, cat(adj(pos(a)), pos(a))}}, rhs});
    }
    for (auto& a : words)
        for (auto& b : words) {
            std::string ab = name(a) + ";" + name(b);
            if (a.size() == b.size() && !(a == b)) out.push_back({"orth_same_length[" + ab + "]", {{1, cat(adj(pos(a)), pos(b))}}, {}});
            if (!is_prefix(a, b) && !is_prefix(b, a)) out.push_back({"orth_incomparable[" + ab + "]", {{1, cat(adj(pos(a)), pos(b))}}, {}});
            auto ea = cat(pos(a), adj(pos(a))), eb = cat(pos(b), adj(pos(b)));
            if (a < b) out.push_back({"range_commute[" + ab + "]", {{1, cat(ea, eb)}}, {{1, cat(eb, ea)}}});
        }
    auto with_empty = all_positive_words(G0, max_len, true);
    for (auto& x : G0)
        for (auto& a : with_empty) {
            std::vector<OpWord> mids{{}};
            for (auto& y : G0) mids.push_back(Q(y));
            for (std::size_t k = 0; k < mids.size(); ++k) {
                auto m = cat(cat(pos(a), mids[k]), adj(pos(a)));
                std::string id = "q_commutes[" + u.name(x) + ";" + name(a) + ";" + (k ? "Q" + u.name(G0[k - 1]) : "I") + "]";
                out.push_back({id, {{1, cat(Q(x), m)}}, {{1, cat(m, Q(x))}}});
            }
        }
    auto gw = all_reduced_words(G0, max_len);
    for (std::size_t i = 0; i < gw.size(); ++i)
        for (std::size_t j = i + 1; j < gw.size(); ++j)
            out.push_back({"e_commute[" + to_string(gw[i], u) + ";" + to_string(gw[j], u) + "]",
                           {{1, cat(e(gw[i]), e(gw[j]))}},
                           {{1, cat(e(gw[j]), e(gw[i]))}}});
    return out;
}

// u(t)u(s) = u(ts) and e(t)e(ts) = e(ts) whenever |ts| = |t| + |s|.
inline std::vector<Relation> semi_saturation_relations(const MatrixSpec& A, const std::vector<Index>& G0, std::size_t max_len) {
    using namespace rel;
    const auto& u = A.universe();
    std::vector<Relation> out;
    auto gw = all_reduced_words(G0, max_len);
    for (auto& t : gw)
        for (auto& s : gw) {
            auto ts = t * s;
            if (ts.length() != t.length() + s.length()) continue;
            std::string id = to_string(t, u) + ";" + to_string(s, u);
            out.push_back({"semisat-u[" + id + "]", {{1, cat(u_word(t), u_word(s))}}, {{1, u_word(ts)}}});
            out.push_back({"semisat-e[" + id + "]", {{1, cat(e(t), e(ts))}}, {{1, e(ts)}}});
        }
    return out;
}

// ---- projections ----

enum class Order { equal, less, greater, incomparable };

inline const char* to_string(Order o) {
    switch (o) {
    case Order::equal: return "equal";
    case Order::less: return "less";
    case Order::greater: return "greater";
    default: return "incomparable";
    }
}

struct ProjectionComparison {
    Order order = Order::equal;
    std::size_t lo = 1, hi = 0;
    std::optional<PositiveWord> only_p, only_q;  // separating basis vectors
};

inline ProjectionComparison projection_compare(const TruncatedRep& rep, const OpWord& p, const OpWord& q) {
    auto [lo, hi] = rep.window({p, q});
    if (lo > hi) throw DomainError("projection_compare: window empty");
    auto mp = rep.matrix(p), mq = rep.matrix(q);
    ProjectionComparison out;
    out.lo = lo;
    out.hi = hi;
    const auto& B = rep.basis();
    for (std::size_t c = 0; c < B.size(); ++c) {
        auto len = B.words[c].size();
        if (len < lo || len > hi) continue;
        for (auto* m : {&mp, &mq})
            if (m->image[c] >= 0 && m->image[c] != static_cast<int>(c))
                throw DomainError("projection_compare: operator is not diagonal on the window");
        bool a = mp.image[c] >= 0, b = mq.image[c] >= 0;
        if (a && !b && !out.only_p) out.only_p = B.words[c];
        if (b && !a && !out.only_q) out.only_q = B.words[c];
    }
    if (!out.only_p && !out.only_q) out.order = Order::equal;
    else if (!out.only_p) out.order = Order::less;
    else if (!out.only_q) out.order = Order::greater;
    else out.order = Order::incomparable;
    return out;
}

struct InfiniteProjectionReport {
    bool leq = false;      // vv* <= v*v on the window
    bool strict = false;
    std::optional<PositiveWord> separating;  // basis vector in v*v but not vv*
    std::optional<PositiveWord> exit_mu;
    std::size_t lo = 1, hi = 0;
};

inline InfiniteProjectionReport infinite_projection_witness(const TruncatedRep& rep, const PositiveWord& alpha,
                                                            const PositiveWord& gamma) {
    const auto& A = rep.spec();
    if (alpha.empty() || gamma.empty()) throw DomainError("infinite_projection_witness: alpha and gamma must be nonempty");
    if (!(alpha.back() == gamma.back())) throw DomainError("infinite_projection_witness: last(alpha) != last(gamma)");
    if (!is_admissible(A, gamma) || !A.entry(gamma.back(), gamma.front()))
        throw DomainError("infinite_projection_witness: gamma is not a circuit");
    if (!is_admissible(A, concat(alpha, gamma))) throw DomainError("infinite_projection_witness: alpha gamma is not admissible");
    using namespace rel;
    auto v = cat(pos(concat(alpha, gamma)), adj(pos(alpha)));
    auto vvs = cat(v, adj(v)), vsv = cat(adj(v), v);
    auto cmp = projection_compare(rep, vvs, vsv);
    InfiniteProjectionReport out;
    out.lo = cmp.lo;
    out.hi = cmp.hi;
    out.leq = cmp.order == Order::equal || cmp.order == Order::less;
    out.strict = cmp.order == Order::less;
    // exits mu = x1..xj y, y != x_{j+1}; j = 0 leaves from last(alpha) = x_n
    std::vector<PositiveWord> exits;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        const Index& from = j == 0 ? gamma.back() : gamma[j - 1];
        for (auto& y : rep.basis().gens)
            if (A.entry(from, y) && !(y == gamma[j])) {
                PositiveWord mu(gamma.begin(), gamma.begin() + j);
                mu.push_back(y);
                exits.push_back(mu);
            }
    }
    if (out.strict) {
        auto mvs = rep.matrix(vsv), mvv = rep.matrix(vvs);
        const auto& B = rep.basis();
        for (auto& mu : exits) {
            auto am = concat(alpha, mu);
            for (std::size_t c = 0; c < B.size() && !out.separating; ++c) {
                auto len = B.words[c].size();
                if (len < cmp.lo || len > cmp.hi || !is_prefix(am, B.words[c])) continue;
                if (mvs.image[c] >= 0 && mvv.image[c] < 0) {
                    out.separating = B.words[c];
                    out.exit_mu = mu;
                }
            }
            if (out.separating) break;
        }
        if (!out.separating) out.separating = cmp.only_q;
    }
    return out;
}

} // namespace ckalg
