#include "parcert/parabolic.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace parcert;
using namespace parcert::testutil;

TEST_CASE("compatibility on sl(4,H)") {
    RealModel m = build_model(parse_form("sl(4,H)", {}));
    auto I_hat = compatible(m.satake, {2, 6});
    REQUIRE(I_hat);
    CHECK(*I_hat == std::set<int>{1, 3});
    CHECK(!compatible(m.satake, {1}));    // painted node
    CHECK(!compatible(m.satake, {2, 5})); // 5 painted
    CHECK_THROWS_AS(compatible(m.satake, {9}), input_error);
}

TEST_CASE("compatibility with arrows on su(3,l-2)") {
    // su(3,6): complex A_8, arrows k <-> 9-k
    RealModel m = build_model(parse_form("su", {3, 6}));
    auto I_hat = compatible(m.satake, {1, 2, 7, 8});
    REQUIRE(I_hat);
    CHECK(*I_hat == std::set<int>{1, 2});
    CHECK(!compatible(m.satake, {1, 2})); // not closed under arrows
}

TEST_CASE("Borel partition of split A3") {
    RealModel m = split_model({'A', 3});
    ParabolicDatum pd = build_parabolic(m, {1, 2, 3});
    CHECK(pd.pos_p_plus.size() == 6);
    CHECK(pd.levi_pos.empty());
    CHECK(pd.uncrossed.empty());
    CHECK_THROWS_AS(build_parabolic(m, {}), input_error);
}

TEST_CASE("uncrossed sets from the case analysis") {
    RealModel sl4h = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(sl4h, {2, 6});
    CHECK(pd.uncrossed == std::set<int>{2});

    // so(3, 2l-2) for l = 5 carries P_{2,3} with uncrossed {b_1}
    RealModel so38 = build_model(parse_form("so", {3, 8}));
    ParabolicDatum pd2 = build_parabolic(so38, {2, 3});
    CHECK(pd2.uncrossed == std::set<int>{1});
    CHECK(pd2.I_hat == std::set<int>{2, 3});
}

TEST_CASE("partition is exact") {
    RealModel m = build_model(parse_form("su(3,4)", {}));
    ParabolicDatum pd = build_parabolic(m, {1, 6});
    CHECK(pd.pos_p_plus.size() + pd.levi_pos.size() == m.restricted.positives.size());
    for (const auto& v : pd.pos_p_plus) CHECK(pd.height(v) > 0);
    for (const auto& v : pd.levi_pos) CHECK(pd.height(v) == 0);
    // the restricted highest root always has positive height
    CHECK(pd.height(m.restricted.mu_restricted) > 0);
}

TEST_CASE("grading evaluation") {
    RealModel sl4h = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(sl4h, {2, 6});
    CHECK(grading_eval(pd, V({2, 0, -1})) == 1); // tau = 2b1 - b3
    CHECK(grading_eval(pd, V({0, 1, 0})) == 0);  // uncrossed simple root

    RealModel b3 = split_model({'B', 3});
    ParabolicDatum borel = build_parabolic(b3, {1, 2, 3});
    CHECK(grading_eval(borel, V({1, 2, 2})) == 5);
}

TEST_CASE("grading covector is scaling") {
    for (const char* name : {"sl(4,H)", "su(3,3)", "so(3,7)", "splitB3"}) {
        RealModel m = name == std::string("splitB3") ? split_model({'B', 3})
                                                     : build_model(parse_form(name, {}));
        // all compatible singletons and the full white set
        for (int k = 1; k <= m.satake.complex_type.rank; ++k) {
            std::set<int> I = {k};
            if (auto arrow = m.satake.arrow_pairs.find(k); arrow != m.satake.arrow_pairs.end())
                I.insert(arrow->second);
            if (!compatible(m.satake, I)) continue;
            ParabolicDatum pd = build_parabolic(m, I);
            Vec e_flat = grading_covector(pd);
            for (const auto& v : m.restricted.positives)
                CHECK(m.restricted.inner(v, e_flat) == pd.height(v));
            auto sc = is_scaling(pd, e_flat);
            CHECK(sc.scaling);
        }
    }
}

TEST_CASE("non-scaling witnesses") {
    RealModel sl4h = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(sl4h, {2, 6});
    auto sc = is_scaling(pd, V({2, 0, -1}));
    CHECK(!sc.scaling);
    REQUIRE(sc.witness);
    CHECK(*sc.witness == V({0, 1, 0})); // b_2 in the Levi with nonzero pairing
    CHECK(pd.restricted.inner(*sc.witness, V({2, 0, -1})) == -1);

    // Borel of split A3 with tau = a1 + 2a2 - a3: a1 pairs to zero
    RealModel a3 = split_model({'A', 3});
    ParabolicDatum borel = build_parabolic(a3, {1, 2, 3});
    auto sc2 = is_scaling(borel, V({1, 2, -1}));
    CHECK(!sc2.scaling);
    REQUIRE(sc2.witness);
    CHECK(*sc2.witness == V({1, 0, 0}));
}

TEST_CASE("Levi-center membership is monotone under adding crossed nodes") {
    for (const char* name : {"su(3,4)", "so(3,9)", "sp(3,3)"}) {
        RealModel m = build_model(parse_form(name, {}));
        int rank = m.restricted.rank;
        std::vector<Vec> taus;
        for (int k = 1; k <= rank; ++k) {
            Vec b = zero_vec(rank);
            b[k - 1] = 1;
            taus.push_back(b);
        }
        taus.push_back(m.restricted.mu_restricted);

        // crossings grow one white orbit at a time
        std::vector<std::set<int>> chain;
        std::set<int> acc;
        for (int k = 1; k <= m.satake.complex_type.rank; ++k) {
            if (m.satake.compact_nodes.count(k)) continue;
            acc.insert(k);
            auto arrow = m.satake.arrow_pairs.find(k);
            if (arrow != m.satake.arrow_pairs.end()) acc.insert(arrow->second);
            chain.push_back(acc);
        }
        for (const auto& tau : taus) {
            bool prev = false;
            for (const auto& I : chain) {
                REQUIRE(compatible(m.satake, I));
                ParabolicDatum pd = build_parabolic(m, I);
                bool now = in_levi_center(pd, tau);
                if (prev) CHECK(now);
                prev = now;
            }
        }
    }
}
