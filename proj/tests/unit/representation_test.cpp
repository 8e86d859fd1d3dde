#include <gtest/gtest.h>

#include "../common.hpp"

using namespace testkit;

namespace {
std::vector<Index> gens(const MatrixSpec& A) { return A.universe().sample(1); }

std::size_t admissible_count(const MatrixSpec& A, std::size_t N) {
    std::size_t n = 0;
    std::vector<PositiveWord> layer{{}};
    for (std::size_t k = 0; k < N; ++k) {
        std::vector<PositiveWord> next;
        for (auto& w : layer)
            for (auto& g : gens(A)) {
                auto v = w;
                v.push_back(g);
                if (admissible(A, v)) next.push_back(v);
            }
        n += next.size();
        layer = next;
    }
    return n;
}
}

TEST(Representation, BasisSizes) {
    auto A = o2();
    EXPECT_EQ(TruncatedRep(A, gens(A), 3).basis().size(), 14u);
    auto G = golden();
    TruncatedRep R(G, gens(G), 3);
    EXPECT_EQ(R.basis().size(), 10u);
    std::set<std::string> words;
    for (auto& w : R.basis().words) words.insert(str(G, w));
    EXPECT_EQ(words, (std::set<std::string>{"1", "2", "1 1", "1 2", "2 1", "1 1 1", "1 1 2", "1 2 1", "2 1 1", "2 1 2"}));
    EXPECT_THROW(TruncatedRep(G, gens(G), 1), DomainError);
    for (std::size_t N = 2; N <= 8; ++N) EXPECT_EQ(TruncatedRep(G, gens(G), N).basis().size(), admissible_count(G, N));
}

TEST(Representation, WarnsOnDeadEnds) {
    auto B = tenth();
    std::vector<Index> xs;
    for (int n = 1; n <= 4; ++n) xs.push_back(ix(B, "x[" + std::to_string(n) + "]"));
    TruncatedRep R(B, xs, 4);
    EXPECT_FALSE(R.warnings().empty());
}

TEST(Representation, Matrices) {
    auto A = o2();
    TruncatedRep R(A, gens(A), 4);
    auto one = ix(A, "1"), two = ix(A, "2");
    auto q = R.matrix(rel::Q(one));
    EXPECT_TRUE(q.is_diagonal());
    EXPECT_TRUE(R.matrix(rel::cat(rel::Sx(one), rel::S(two))).is_zero());
    auto G = golden();
    TruncatedRep H(G, gens(G), 4);
    EXPECT_TRUE(H.matrix(rel::cat(rel::S(ix(G, "2")), rel::S(ix(G, "2")))).is_zero());
    EXPECT_THROW(R.matrix(rel::S(Index{0, 9})), DomainError);
}

TEST(Representation, WindowChecks) {
    auto A = o2();
    TruncatedRep R(A, gens(A), 8);
    auto ck = ck_relations(A, gens(A));
    ASSERT_FALSE(ck.empty());
    for (auto& r : ck) {
        auto w = R.verify(r);
        EXPECT_TRUE(w.pass) << r.id << " " << w.detail;
    }
    auto G = golden();
    TruncatedRep H(G, gens(G), 8);
    for (auto& r : tck_relations(G, gens(G))) EXPECT_TRUE(H.verify(r).pass) << r.id;

    TruncatedRep small(A, gens(A), 2);
    bool threw = false;
    for (auto& r : claim_relations(A, gens(A), 3)) {
        try {
            small.verify(r);
        } catch (const DomainError&) {
            threw = true;
        }
    }
    EXPECT_TRUE(threw);
}

TEST(Representation, BrokenRelationIsCaught) {
    auto A = o2();
    TruncatedRep R(A, gens(A), 6);
    Relation wrong{"wrong", {{1, rel::Q(ix(A, "1"))}}, {{1, rel::P(ix(A, "1"))}}};
    auto w = R.verify(wrong);
    EXPECT_FALSE(w.pass);
    ASSERT_TRUE(w.witness);
}

TEST(Representation, NonzeroChecks) {
    auto A = o2();
    TruncatedRep R(A, gens(A), 8);
    EXPECT_TRUE(R.check_nonzero(pw(A, "1 2 1")));
    auto G = golden();
    TruncatedRep H(G, gens(G), 8);
    EXPECT_FALSE(H.check_nonzero(pw(G, "2 2")));
    EXPECT_TRUE(H.check_nonzero(pw(G, "2 1 1")));
    EXPECT_THROW(H.check_nonzero({}), DomainError);
}

TEST(Representation, ProjectionComparisons) {
    auto G = golden();
    TruncatedRep H(G, gens(G), 8);
    auto gamma = gw(G, "1 2");
    auto c = projection_compare(H, rel::e(gamma), rel::e(gamma.inverse()));
    EXPECT_EQ(c.order, Order::less);
    ASSERT_TRUE(c.only_q);

    auto P = flip();
    TruncatedRep F(P, gens(P), 8);
    auto g = gw(P, "1 2");
    EXPECT_EQ(projection_compare(F, rel::e(g), rel::e(g.inverse())).order, Order::equal);

    auto ip = infinite_projection_witness(H, pw(G, "1"), pw(G, "2 1"));
    EXPECT_TRUE(ip.leq);
    EXPECT_TRUE(ip.strict);
    ASSERT_TRUE(ip.separating);

    auto A = o2();
    TruncatedRep R(A, gens(A), 8);
    auto io = infinite_projection_witness(R, pw(A, "1"), pw(A, "1"));
    EXPECT_TRUE(io.strict);
}

TEST(Representation, ElcondSupportsFromOracle) {
    auto G = golden();
    TruncatedRep H(G, gens(G), 8);
    for (auto [X, Y] : std::vector<std::pair<std::vector<Index>, std::vector<Index>>>{{{ix(G, "2")}, {}},
                                                                                      {{ix(G, "1")}, {ix(G, "2")}}}) {
        ASSERT_TRUE(G.axyj_support(X, Y).finite);
        auto r = elcond_relation(G, X, Y, gens(G));
        EXPECT_TRUE(H.verify(r).pass) << r.id;
    }
}
