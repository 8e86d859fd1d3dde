#include <gtest/gtest.h>

#include "../common.hpp"

using namespace testkit;

namespace {
// free group on a, b: any finite universe will do
MatrixSpec ab() { return parse_spec("universe finite a b\ndefault 1\n"); }
}

TEST(Words, Reduction) {
    auto A = ab();
    EXPECT_EQ(reduce_concat(gw(A, "a b"), gw(A, "~b")), gw(A, "a"));
    EXPECT_EQ(invert(gw(A, "a ~b")), gw(A, "b ~a"));
    EXPECT_EQ(length(gw(A, "e")), 0u);
    EXPECT_EQ(gw(A, "a ~a b"), gw(A, "b"));
    EXPECT_THROW(gw(A, "c"), InputError);
}

TEST(Words, PosNeg) {
    auto A = ab();
    auto d = decompose_pos_neg(gw(A, "a ~b"));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->first, pw(A, "a"));
    EXPECT_EQ(d->second, pw(A, "b"));
    EXPECT_FALSE(decompose_pos_neg(gw(A, "~a b")));
    auto e = decompose_pos_neg(gw(A, "e"));
    ASSERT_TRUE(e);
    EXPECT_TRUE(e->first.empty() && e->second.empty());
}

TEST(Words, Admissibility) {
    auto G = golden();
    EXPECT_FALSE(is_admissible(G, pw(G, "2 2")));
    EXPECT_TRUE(is_admissible(G, pw(G, "2 1 1 2")));
    auto A = o2();
    EXPECT_TRUE(is_admissible(A, pw(A, "1 2 2 1 1")));
    auto B = tenth();
    EXPECT_TRUE(is_admissible(B, pw(B, "x[3] x[2] x[1] y[5]")));
    EXPECT_FALSE(is_admissible(B, pw(B, "x[1] x[2]")));
    EXPECT_FALSE(is_admissible(B, parse_periodic("x[2] x[1] y[3] z[1] (z[2])^inf", B.universe())));
}

TEST(Words, ConjugateCircuit) {
    auto A = ab();
    auto d = conjugate_circuit_decomposition(gw(A, "a b ~a"));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->alpha, pw(A, "a"));
    EXPECT_EQ(d->gamma, pw(A, "b"));
    EXPECT_EQ(d->sign, 1);
    auto s = conjugate_circuit_decomposition(gw(A, "a"));
    ASSERT_TRUE(s);
    EXPECT_TRUE(s->alpha.empty());
    EXPECT_EQ(s->gamma, pw(A, "a"));
    EXPECT_FALSE(conjugate_circuit_decomposition(gw(A, "a ~b")));
    auto n = conjugate_circuit_decomposition(gw(A, "a ~b ~a"));
    ASSERT_TRUE(n);
    EXPECT_EQ(n->sign, -1);
    EXPECT_THROW(conjugate_circuit_decomposition(gw(A, "e")), DomainError);
}

TEST(Words, Subtree) {
    auto A = ab();
    EXPECT_TRUE(in_subtree(gw(A, "e"), gw(A, "a"), gw(A, "e")));
    EXPECT_FALSE(in_subtree(gw(A, "e"), gw(A, "a"), gw(A, "a b")));
    EXPECT_TRUE(in_subtree(gw(A, "e"), gw(A, "a"), gw(A, "b")));
}

TEST(Words, EventuallyPeriodicNormalForm) {
    auto A = o2();
    const auto& u = A.universe();
    EXPECT_EQ(parse_periodic("(1)^inf", u), parse_periodic("1 (1)^inf", u));
    EXPECT_EQ(parse_periodic("(1 2)^inf", u), parse_periodic("1 (2 1)^inf", u));
    EXPECT_NE(parse_periodic("(1 2)^inf", u), parse_periodic("(2 1)^inf", u));
    EXPECT_EQ(parse_periodic("(1 1)^inf", u), parse_periodic("(1)^inf", u));
    EXPECT_EQ(to_string(parse_periodic("2 (1 1)^inf", u), u), "2 (1)^inf");
}

TEST(Words, TextRoundTrip) {
    auto B = tenth();
    for (auto s : {"x[3] ~y[2] z[1]", "e", "~x[1]"}) EXPECT_EQ(gw(B, str(B, gw(B, s))), gw(B, s));
}
