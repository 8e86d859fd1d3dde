#include <gtest/gtest.h>

#include "../common.hpp"

using namespace testkit;

TEST(MatrixSpec, ParsesBundledFixtures) {
    for (auto name : {"o2", "golden_mean", "permutation", "all_ones_infinite", "cofinal_not_simple"})
        EXPECT_NO_THROW(fixture(name).validate()) << name;
    auto A = tenth();
    EXPECT_TRUE(A.universe().tracked());
    EXPECT_EQ(A.universe().width(), 3);
}

TEST(MatrixSpec, ZeroRowIsRejected) {
    EXPECT_THROW(parse_spec("universe finite a b\ndefault 0\nrect rows {a} cols {b} value 1\n").validate(), InputError);
    EXPECT_THROW(from_matrix({{1, 0}, {0, 0}}).validate(), InputError);
}

TEST(MatrixSpec, SyntaxErrorsCarryPosition) {
    try {
        parse_spec("universe finite 1 2\ndefualt 1\n");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_spec("universe finite 1 1\ndefault 1\n"), InputError);
    EXPECT_THROW(parse_spec("universe finite 1 2\ndefault 1\nexcept 1 3 value 0\n"), InputError);
}

TEST(MatrixSpec, Entries) {
    auto A = o2();
    EXPECT_TRUE(A.entry(ix(A, "1"), ix(A, "2")));
    auto B = tenth();
    EXPECT_TRUE(B.entry(ix(B, "x[2]"), ix(B, "x[1]")));
    EXPECT_FALSE(B.entry(ix(B, "x[1]"), ix(B, "z[1]")));
    EXPECT_TRUE(B.entry(ix(B, "x[1]"), ix(B, "y[40]")));
    EXPECT_TRUE(B.entry(ix(B, "y[9]"), ix(B, "z[1]")));
    EXPECT_TRUE(B.entry(ix(B, "z[3]"), ix(B, "z[4]")));
    EXPECT_FALSE(B.entry(ix(B, "z[4]"), ix(B, "z[3]")));
    auto G = golden();
    EXPECT_FALSE(G.entry(ix(G, "2"), ix(G, "2")));
    EXPECT_THROW(B.entry(ix(B, "x[1]"), Index{7, 1}), DomainError);
}

TEST(MatrixSpec, RowSupports) {
    auto B = tenth();
    auto r = B.row_support(ix(B, "x[1]"));
    EXPECT_FALSE(r.is_finite());
    EXPECT_EQ(r.to_string(B.universe()), set(B, "y[*]").to_string(B.universe()));
    auto z3 = B.row_support(ix(B, "z[3]"));
    EXPECT_TRUE(z3.is_finite());
    EXPECT_EQ(z3.elements(), std::vector<Index>{ix(B, "z[4]")});
    auto A = o2();
    EXPECT_EQ(A.row_support(ix(A, "1")).count(), 2u);
}

TEST(MatrixSpec, AxyjSupport) {
    auto A = o2();
    auto s = A.axyj_support({ix(A, "1")}, {});
    EXPECT_TRUE(s.finite);
    EXPECT_EQ(s.elements.size(), 2u);

    auto U = ones();
    auto e = U.axyj_support({}, {ix(U, "g[5]")});
    EXPECT_TRUE(e.finite);
    EXPECT_TRUE(e.elements.empty());

    auto B = tenth();
    auto x1 = B.axyj_support({ix(B, "x[1]")}, {});
    EXPECT_FALSE(x1.finite);
    EXPECT_TRUE(x1.set.contains(ix(B, "y[1000]")));

    auto G = golden();
    auto g = G.axyj_support({ix(G, "2")}, {});
    ASSERT_TRUE(g.finite);
    EXPECT_EQ(g.elements, std::vector<Index>{ix(G, "1")});
    auto h = G.axyj_support({ix(G, "1")}, {ix(G, "2")});
    ASSERT_TRUE(h.finite);
    EXPECT_EQ(h.elements, std::vector<Index>{ix(G, "2")});
}

TEST(MatrixSpec, Columns) {
    auto B = tenth();
    EXPECT_EQ(B.column(ix(B, "y[7]")).elements(), std::vector<Index>{ix(B, "x[1]")});
    EXPECT_EQ(B.column(ix(B, "x[3]")).elements(), std::vector<Index>{ix(B, "x[4]")});
    auto A = o2();
    EXPECT_EQ(A.column(ix(A, "1")).count(), 2u);
}

TEST(MatrixSpec, ClusterPoints) {
    for (auto A : {o2(), golden(), flip()}) EXPECT_TRUE(A.column_cluster_points().empty());
    auto B = tenth();
    std::set<std::string> got;
    for (auto& c : B.column_cluster_points()) got.insert(c.column.to_string(B.universe()));
    EXPECT_EQ(got, (std::set<std::string>{"{}", "{x[1]}"}));
    auto U = ones();
    auto cu = U.column_cluster_points();
    ASSERT_EQ(cu.size(), 1u);
    EXPECT_EQ(cu[0].column, DescribableSet::all(U.shape()));
}

TEST(MatrixSpec, Unitality) {
    for (auto A : {o2(), golden(), flip()}) EXPECT_TRUE(A.is_unital().unital);
    auto U = ones();
    auto u = U.is_unital();
    EXPECT_TRUE(u.unital);
    ASSERT_TRUE(u.witness_y);
    EXPECT_EQ(u.witness_y->size(), 1u);
    EXPECT_TRUE(U.axyj_support({}, *u.witness_y).finite);
    auto B = tenth();
    auto b = B.is_unital();
    EXPECT_FALSE(b.unital);
    ASSERT_TRUE(b.zero_cluster);
    EXPECT_TRUE(b.zero_cluster->column.is_empty());
}

TEST(MatrixSpec, EmptyProductIsEverything) {
    for (auto A : {o2(), tenth(), ones()}) {
        auto s = A.axyj_support({}, {});
        EXPECT_EQ(s.finite, A.universe().finite());
        EXPECT_EQ(s.set, DescribableSet::all(A.shape()));
    }
}
