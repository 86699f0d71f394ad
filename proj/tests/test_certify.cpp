#include "parcert/certify.hpp"
#include "test_util.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

using namespace parcert;
using namespace parcert::testutil;

TEST_CASE("a0 search: split A3 / P_{1,3}") {
    RealModel m = split_model({'A', 3});
    ParabolicDatum pd = build_parabolic(m, {1, 3});
    Vec tau = V({2, 0, -1}); // -(12).mu = 2a1 - a3
    auto w = find_a0(pd, tau);
    REQUIRE(w);
    CHECK(w->a0_flat == V({1, 2, 1})); // a1 + 2a2 + a3
    CHECK(pd.restricted.inner(w->a0_flat, tau) == 0);
    CHECK(pd.restricted.inner(w->a0_flat, w->nu0) == 0);
    // the hand-picked pairing: <a0, a1> = 0 as well
    CHECK(pd.restricted.inner(w->a0_flat, V({1, 0, 0})) == 0);
}

TEST_CASE("a0 search: sl(4,H) / P_{2,4}") {
    RealModel m = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(m, {2, 4});
    Vec tau = V({2, -1, -1});
    auto w = find_a0(pd, tau);
    REQUIRE(w);
    CHECK(w->a0_flat == V({1, 1, 2})); // b1 + b2 + 2b3
    CHECK(w->nu0 == V({1, 1, 0}));     // b1 + b2
}

TEST_CASE("a0 search fails for every lowest weight of sl(4,H) / P_{2,6}") {
    RealModel m = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(m, {2, 6});
    auto plus = wp2_plus(*m.complex_system, {2, 6});
    REQUIRE(plus.size() == 2);
    for (const auto& h : plus) {
        RestrictedTriple t = restricted_triple(m, h);
        auto sc = is_scaling(pd, t.tau);
        CHECK(!sc.scaling);
        CHECK(!find_a0(pd, t.tau));
    }
}

TEST_CASE("c0 construction") {
    RealModel sl4h = build_model(parse_form("sl(4,H)", {}));
    ParabolicDatum pd = build_parabolic(sl4h, {2, 6});
    auto c = find_c0(pd, V({2, 0, -1}));
    REQUIRE(c);
    CHECK(c->k == 3);
    CHECK(c->t == 1);

    // split B3 Borel with tau = -(32).mu = 3a3 - a1: feasible with k = 1
    RealModel b3 = split_model({'B', 3});
    ParabolicDatum borel = build_parabolic(b3, {1, 2, 3});
    auto c2 = find_c0(borel, V({-1, 0, 3}));
    REQUIRE(c2);
    CHECK(c2->k == 1);
    for (const auto& nu : borel.pos_p_plus) {
        Rat val = borel.height(nu) +
                  c2->t * nu[0] * borel.restricted.gram[0][0] / 2;
        CHECK(val > 0);
    }

    // no negative coefficient: no witness
    CHECK(!find_c0(borel, V({1, 1, 0})));
}

TEST_CASE("certify split C4 / P_{1,2}") {
    RealModel m = split_model({'C', 4});
    Certificate cert = certify_model(m, {1, 2});
    CHECK(!cert.special);
    CHECK(((cert.seed_i == 1 && cert.seed_j == 2) || (cert.seed_i == 2 && cert.seed_j == 1)));
    CHECK(cert.kt_ok);
}

TEST_CASE("certify so(3,7) / P_{1,2}") {
    RealModel m = build_model(parse_form("so", {3, 7}));
    Certificate cert = certify_model(m, {1, 2});
    CHECK(cert.tau == V({2, 0, -2}));
    // the paper's witness pair is also in the kernel
    const auto& r = m.restricted;
    Vec lam2 = r.from_fundamental(V({0, 1, 0}));
    CHECK(lam2 == r.mu_restricted);
    CHECK(r.inner(lam2, V({1, 0, 0})) == 0);
    CHECK(r.inner(cert.a0.a0_flat, cert.tau) == 0);
    CHECK(r.inner(cert.a0.a0_flat, cert.a0.nu0) == 0);
}

TEST_CASE("special certificate for sl(4,H) / P_{2,6}") {
    Certificate cert = sl4h_special();
    CHECK(cert.special);
    CHECK(cert.tau == V({2, 0, -1}));
    CHECK(cert.nonscaling_witness == V({0, 1, 0}));
    CHECK(cert.a0.a0_flat == V({1, 2, 1}));
    CHECK(cert.a0.nu0 == V({1, 0, 0}));
    CHECK(cert.c0.k == 3);
    CHECK(cert.c0.t == 1);

    // certify_model must route to the special path
    RealModel m = build_model(parse_form("sl(4,H)", {}));
    Certificate via_model = certify_model(m, {2, 6});
    CHECK(via_model.special);
    CHECK(certificate_to_json(via_model) == certificate_to_json(cert));
}

TEST_CASE("complex forms reuse split data with the Killing factor noted") {
    RealModel m = build_model(parse_form("complex(A3)", {}));
    Certificate cert = certify_model(m, {1, 2, 3});
    REQUIRE(cert.complex_killing_factor);
    CHECK(*cert.complex_killing_factor == 2);

    RealModel split_a3 = split_model({'A', 3});
    Certificate split_cert = certify_model(split_a3, {1, 2, 3});
    CHECK(cert.tau == split_cert.tau);
    CHECK(cert.a0.a0_flat == split_cert.a0.a0_flat);
    CHECK(!split_cert.complex_killing_factor);
}

TEST_CASE("enumerate_models membership") {
    auto models = enumerate_models(9);
    bool has_sl4h_p26 = false, has_g2 = false, has_su22 = false, has_so35_aut = false;
    for (const auto& [datum, I] : models) {
        if (datum.name == "sl(4,H)" && I == std::set<int>{2, 6}) has_sl4h_p26 = true;
        if (datum.complex_type.family == 'G') has_g2 = true;
        if (datum.name == "su(2,2)") has_su22 = true;
        if (datum.name == "so(3,5)" && I == std::set<int>{2, 3, 4}) has_so35_aut = true;
        CHECK(datum.real_rank() >= 3);
    }
    CHECK(has_sl4h_p26);
    CHECK(!has_g2);   // real rank 2
    CHECK(!has_su22); // real rank 2
    CHECK(has_so35_aut); // automorphism image of the tabled {1,2,4}
}

TEST_CASE("certificate JSON round-trips through the re-verifier") {
    RealModel m = build_model(parse_form("su(3,3)", {}));
    Certificate cert = certify_model(m, {1, 2, 4, 5});
    nlohmann::json j = certificate_to_json(cert);
    std::string why;
    CHECK(reverify_certificate(j, &why));
    CHECK(why.empty());

    // tampering must be caught
    nlohmann::json bad = j;
    bad["tau"][0] = "3";
    CHECK(!reverify_certificate(bad, &why));
    CHECK(!why.empty());

    nlohmann::json bad2 = j;
    bad2["c0"]["t"] = "1/7";
    CHECK(!reverify_certificate(bad2, &why));
}
