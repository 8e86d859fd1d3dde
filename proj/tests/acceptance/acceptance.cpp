// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ckalg/ckalg.hpp"

using namespace ckalg;

namespace {

MatrixSpec fixture(const std::string& name) {
    std::ifstream in(std::string(CKALG_FIXTURES) + "/" + name + ".ckm");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

struct Check {
    std::string detail;
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) c.require(false, "runtime " + std::to_string(s) + " s over limit");
    std::printf("%s %2d %-58s %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), s, c.ok ? "" : "  ",
                c.detail.c_str());
    if (!c.ok) ++failures;
}

bool exact(const Verdict& v, Answer a) { return v.answer == a && v.cert.exact; }

std::vector<Index> all(const MatrixSpec& A) { return A.universe().sample(1); }

std::vector<PositiveWord> positive_words(const std::vector<Index>& g, std::size_t min_len, std::size_t max_len) {
    std::vector<PositiveWord> out, layer{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
        std::vector<PositiveWord> next;
        for (auto& w : layer)
            for (auto& x : g) {
                auto v = w;
                v.push_back(x);
                next.push_back(v);
            }
        layer = next;
    }
    return out;
}

} // namespace

int main() {
    run(1, "O2: unital, free, transitive, simple, purely infinite", 1.0, [](Check& c) {
        auto A = fixture("o2");
        auto r = analyze(A);
        const auto& v = r.verdicts;
        c.require(r.unital.unital, "unital");
        c.require(exact(v.terminal_circuit, Answer::no), "terminal circuits");
        c.require(exact(v.transitive, Answer::yes), "transitive");
        c.require(exact(v.permutation, Answer::no), "permutation");
        c.require(v.simple_sufficient.answer == Answer::yes, "simple_sufficient");
        c.require(v.purely_infinite_sufficient.answer == Answer::yes, "purely_infinite_sufficient");
    });

    run(2, "permutation 2x2: terminal circuit (1,2), not free", 0, [](Check& c) {
        auto A = fixture("permutation");
        ClassGraph G(A);
        auto v = has_terminal_circuit(G);
        c.require(exact(v, Answer::yes), "terminal circuit found");
        c.require(v.cert.words.size() == 1 && v.cert.words[0].size() == 2 && is_circuit(A, v.cert.words[0]) &&
                      !has_exit(A, v.cert.words[0]),
                  "certificate is an exit-free 2-circuit");
        c.require(analyze(A).verdicts.topologically_free.answer == Answer::no, "topologically_free = no");
    });

    run(3, "cofinal counterexample: cofinal, no terminal, not simple", 5.0, [](Check& c) {
        auto A = fixture("cofinal_not_simple");
        const auto& u = A.universe();
        ClassGraph G(A);
        auto r = analyze(A);
        c.require(exact(r.verdicts.cofinal, Answer::yes), "cofinal = yes");
        c.require(exact(r.verdicts.terminal_circuit, Answer::no), "terminal circuits = no");
        c.require(!r.unital.unital && r.unital.zero_cluster && r.unital.zero_cluster->column.is_empty(),
                  "non-unital via zero cluster point");
        auto xi = parse_point("stem=e;root={x[1]}", A);
        c.require(in_tilde_omega(A, xi), "xi in tilde omega");
        c.require(e_x_contains(G, xi, u.require("x[1]")), "xi in E_x1");
        for (int n = 1; n <= 10; ++n)
            c.require(!e_x_contains(G, xi, u.require("y[" + std::to_string(n) + "]")), "xi outside E_y" + std::to_string(n));
        c.require(r.invariant_set && r.invariant_set->point == xi, "report carries the invariant-set witness");
    });

    run(4, "window N=8: TCK, CK, semi-saturation, word identities", 30.0, [](Check& c) {
        for (auto name : {"o2", "golden_mean"}) {
            auto A = fixture(name);
            auto g = all(A);
            TruncatedRep R(A, g, 8);
            std::vector<Relation> rels = tck_relations(A, g);
            for (auto&& more : {ck_relations(A, g), claim_relations(A, g, 3), semi_saturation_relations(A, g, 3)})
                rels.insert(rels.end(), more.begin(), more.end());
            for (auto& rel : rels) {
                auto w = R.verify(rel);
                c.require(w.pass, std::string(name) + " " + rel.id + ": " + w.detail);
            }
        }
    });

    run(5, "ELCOND on golden mean with computed supports", 0, [](Check& c) {
        auto A = fixture("golden_mean");
        const auto& u = A.universe();
        auto g = all(A);
        TruncatedRep R(A, g, 8);
        auto one = u.require("1"), two = u.require("2");
        auto s1 = A.axyj_support({two}, {});
        c.require(s1.finite && s1.elements == std::vector<Index>{one}, "support of X={2} is {1}");
        auto s2 = A.axyj_support({one}, {two});
        c.require(s2.finite && s2.elements == std::vector<Index>{two}, "support of X={1},Y={2} is {2}");
        c.require(R.verify(elcond_relation(A, {two}, {}, g)).pass, "X={2}");
        c.require(R.verify(elcond_relation(A, {one}, {two}, g)).pass, "X={1},Y={2}");
    });

    run(6, "oracle: symbolic zero test vs matrices, |t|<=4, N=8", 0, [](Check& c) {
        for (auto name : {"o2", "golden_mean"}) {
            auto A = fixture(name);
            ClassGraph G(A);
            auto g = all(A);
            TruncatedRep R(A, g, 8);
            for (auto& t : all_reduced_words(g, 4)) {
                bool sym = is_zero_u(G, t, Ambient::tau), mat = R.matrix(u_word(t)).is_zero();
                c.require(sym == mat, std::string(name) + " mismatch at " + to_string(t, A.universe()));
            }
        }
    });

    run(7, "ambient separation on golden mean", 0, [](Check& c) {
        auto A = fixture("golden_mean");
        const auto& u = A.universe();
        ClassGraph G(A);
        ClopenConstraint k{{parse_word("~2", u)}, {parse_word("~1", u)}, Ambient::tau};
        auto tau = solve(G, k);
        c.require(!tau.empty && tau.witness && contains(A, *tau.witness, k.positives[0]) &&
                      !contains(A, *tau.witness, k.negatives[0]),
                  "nonempty in tau with a checked witness");
        k.ambient = Ambient::tilde;
        c.require(solve(G, k).empty, "empty in tilde");
    });

    run(8, "fixed points of a g a^-1 over O2, |a|,|g|<=2", 0, [](Check& c) {
        auto A = fixture("o2");
        auto g = all(A);
        std::mt19937 rng(8);
        auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
        int count = 0;
        for (auto& alpha : positive_words(g, 0, 2))
            for (auto& gamma : positive_words(g, 1, 2)) {
                auto a = GroupWord::positive(alpha);
                auto t = a * GroupWord::positive(gamma) * a.inverse();
                if (t.length() != 2 * alpha.size() + gamma.size()) continue;
                ++count;
                auto f = fixed_point(A, t);
                auto tag = to_string(t, A.universe());
                c.require(f.has_value(), "no fixed point for " + tag);
                if (!f) continue;
                c.require(act(A, *f, t) == *f, "not fixed: " + tag);
                int moved = 0;
                for (int tries = 0; moved < 50 && tries < 20000; ++tries) {
                    // random point whose stem starts with alpha: bounded or periodic tail
                    PositiveWord stem = alpha;
                    std::size_t extra = pick(4);
                    for (std::size_t k = 0; k < extra; ++k) stem.push_back(g[pick(g.size())]);
                    SpectrumPoint eta = SpectrumPoint::bounded_point({}, DescribableSet::empty(A.shape()));
                    if (pick(2)) {
                        PositiveWord per;
                        std::size_t n = 1 + pick(3);
                        for (std::size_t k = 0; k < n; ++k) per.push_back(g[pick(g.size())]);
                        eta = make_unbounded(A, EvPeriodicWord(stem, per));
                    } else {
                        auto root = DescribableSet::empty(A.shape());
                        for (auto& x : g)
                            if (pick(2)) root.insert(x);
                        if (!stem.empty()) root.insert(stem.back());
                        eta = make_bounded(A, stem, root);
                    }
                    if (eta == *f || !in_domain(A, eta, t)) continue;
                    ++moved;
                    c.require(!(act(A, eta, t) == eta), "second fixed point for " + tag);
                }
                c.require(moved == 50, "could not sample 50 domain points for " + tag);
            }
        c.require(count > 0, "no words enumerated");
    });

    run(9, "projection order and infinite projection", 0, [](Check& c) {
        auto G = fixture("golden_mean");
        const auto& u = G.universe();
        TruncatedRep H(G, all(G), 8);
        auto gamma = parse_word("1 2", u);
        auto cmp = projection_compare(H, rel::e(gamma), rel::e(gamma.inverse()));
        c.require(cmp.order == Order::less, std::string("golden mean e(12) vs e(12^-1): ") + to_string(cmp.order));
        auto P = fixture("permutation");
        TruncatedRep F(P, all(P), 8);
        auto g2 = parse_word("1 2", P.universe());
        c.require(projection_compare(F, rel::e(g2), rel::e(g2.inverse())).order == Order::equal, "permutation equality");
        auto ip = infinite_projection_witness(H, parse_positive("1", u), parse_positive("2 1", u));
        c.require(ip.leq && ip.strict && ip.separating, "strict vv* < v*v with separating vector");
    });

    run(10, "unitality: finite, all-ones infinite, counterexample", 0, [](Check& c) {
        for (auto name : {"o2", "golden_mean", "permutation"}) c.require(fixture(name).is_unital().unital, name);
        auto U = fixture("all_ones_infinite");
        auto ru = U.is_unital();
        c.require(ru.unital && ru.witness_y && ru.witness_y->size() == 1, "all-ones: unital with |Y| = 1");
        if (ru.witness_y) c.require(U.axyj_support({}, *ru.witness_y).finite, "witness Y has finite support");
        auto B = fixture("cofinal_not_simple");
        auto rb = B.is_unital();
        c.require(!rb.unital && rb.zero_cluster.has_value(), "counterexample: non-unital with cluster point");
    });

    run(11, "partial action: identity, composition, inverse, edge", 0, [](Check& c) {
        for (auto name : {"o2", "golden_mean"}) {
            auto A = fixture(name);
            ClassGraph G(A);
            Sampler smp(G, 11);
            auto g = all(A);
            int comp = 0;
            for (int k = 0; comp < 200 && k < 50000; ++k) {
                auto p = smp.point(Ambient::tau);
                if (!p) continue;
                c.require(act(A, *p, GroupWord()) == *p, "identity");
                auto s = smp.word(4), t = smp.word(4);
                if (!in_domain(A, *p, s)) continue;
                auto mid = act(A, *p, s);
                c.require(act(A, mid, s.inverse()) == *p, "invertibility");
                if (!in_domain(A, mid, t)) continue;
                ++comp;
                c.require(in_domain(A, *p, t * s) && act(A, mid, t) == act(A, *p, t * s), "composition");
            }
            c.require(comp == 200, std::string(name) + ": only " + std::to_string(comp) + " composable samples");

            // edge property: two points sharing t and tx agree on the t side, to depth 5
            std::vector<SpectrumPoint> pts;
            for (int k = 0; pts.size() < 40 && k < 1000; ++k)
                if (auto p = smp.point(Ambient::tau)) pts.push_back(*p);
            auto near = all_reduced_words(g, 2), far = all_reduced_words(g, 5);
            for (auto& t : near)
                for (auto& x : g) {
                    auto tx = t * GroupWord::letter(x);
                    if (tx.length() <= t.length()) continue;
                    const SpectrumPoint* first = nullptr;
                    for (auto& p : pts) {
                        if (!contains(A, p, t) || !contains(A, p, tx)) continue;
                        if (!first) {
                            first = &p;
                            continue;
                        }
                        for (auto& r : far)
                            if (in_subtree(t, tx, r))
                                c.require(contains(A, p, r) == contains(A, *first, r), "edge property");
                    }
                }
        }
    });

    std::printf("%d failure(s)\n", failures);
    return failures;
}
