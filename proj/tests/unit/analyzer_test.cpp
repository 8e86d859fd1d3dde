#include <gtest/gtest.h>

#include "../common.hpp"
#include "ckalg/report.hpp"

using namespace testkit;

TEST(Analyzer, O2) {
    auto r = analyze(o2());
    const auto& v = r.verdicts;
    EXPECT_TRUE(r.unital.unital);
    EXPECT_EQ(v.topologically_free.answer, Answer::yes);
    EXPECT_EQ(v.simple_sufficient.answer, Answer::yes);
    EXPECT_EQ(v.purely_infinite_sufficient.answer, Answer::yes);
    EXPECT_EQ(v.uniqueness_applies.answer, Answer::yes);
}

TEST(Analyzer, Permutation) {
    auto r = analyze(flip());
    EXPECT_EQ(r.verdicts.topologically_free.answer, Answer::no);
    EXPECT_EQ(r.verdicts.simple_sufficient.answer, Answer::unknown);
}

TEST(Analyzer, CofinalButNotSimple) {
    auto A = tenth();
    auto r = analyze(A);
    EXPECT_EQ(r.verdicts.topologically_free.answer, Answer::yes);
    EXPECT_EQ(r.verdicts.cofinal.answer, Answer::yes);
    EXPECT_EQ(r.verdicts.simple_sufficient.answer, Answer::unknown);
    ASSERT_TRUE(r.invariant_set);
    EXPECT_EQ(r.invariant_set->point, pt(A, "stem=e;root={x[1]}"));
    EXPECT_EQ(r.verdicts.simple_sufficient.cert.kind, "invariant-set");
    EXPECT_FALSE(r.unital.unital);
}

TEST(Analyzer, ReadingSelectsIdealVerdict) {
    auto A = o2();
    auto lit = analyze(A, Reading::literal);
    auto edge = analyze(A, Reading::edge_departure);
    EXPECT_EQ(lit.verdicts.ideal_classification_applies.answer, Answer::no);
    EXPECT_EQ(edge.verdicts.ideal_classification_applies.answer, Answer::yes);
}

TEST(Analyzer, CertificatesRevalidate) {
    for (auto name : {"o2", "golden_mean", "permutation", "all_ones_infinite", "cofinal_not_simple"}) {
        auto A = fixture(name);
        auto r = analyze(A);
        for (auto* v : {&r.verdicts.terminal_circuit, &r.verdicts.transitory_literal, &r.verdicts.transitory_edge_departure}) {
            if (v->answer != Answer::yes) continue;
            for (auto& c : v->cert.words) EXPECT_TRUE(is_circuit(A, c)) << name;
        }
        for (auto& p : r.samples) EXPECT_TRUE(in_tilde_omega(A, p)) << name;
    }
}

TEST(Analyzer, JsonIsDeterministic) {
    for (auto name : {"o2", "cofinal_not_simple", "all_ones_infinite"}) {
        auto A = fixture(name);
        auto a = to_json(analyze(A), A.universe()).dump();
        auto b = to_json(analyze(A), A.universe()).dump();
        EXPECT_EQ(a, b);
        auto j = Json::parse(a);
        EXPECT_EQ(j["schema"], "ck-report/1");
        for (auto& s : j["spectrum_samples"]) EXPECT_NO_THROW(parse_point(s["text"].get<std::string>(), A));
    }
}
