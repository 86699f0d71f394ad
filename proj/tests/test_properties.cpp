#include "property_suites.hpp"

#include <doctest.h>

using namespace parcert;
using namespace parcert::suites;

namespace {

void require_clean(const SweepResult& res, long min_cases) {
    CHECK(res.cases >= min_cases);
    for (const auto& f : res.failures) {
        CAPTURE(f);
        CHECK(false);
    }
}

} // namespace

TEST_CASE("reflection involutivity, 1000 generated cases") {
    require_clean(reflection_involution(1000), 1000);
}

TEST_CASE("positive-root counts match the closed forms") {
    require_clean(positive_counts(), 30);
}

TEST_CASE("simple reflections permute the other positives") {
    require_clean(simple_reflection_permutes_positives(), 1000);
}

TEST_CASE("phi sum identity over all length-2 pairs up to rank 9") {
    require_clean(phi_sum_identity(), 1000);
}

TEST_CASE("wp2 equals the minimal-coset oracle, rank <= 6, all nonempty I") {
    // exhaustive over every type of rank <= 6 and every nonempty crossed set
    require_clean(wp2_oracle_equivalence(6), 500);
}

TEST_CASE("restriction linearity, 1000 generated cases") {
    require_clean(restriction_linearity(1000), 1000);
}

TEST_CASE("restricted pairing integrality over the catalog, rank <= 9") {
    require_clean(restricted_integrality(9), 50);
}

TEST_CASE("second-order and negative-coefficient sweeps") {
    require_clean(second_order_sweep(9), 100);
}

TEST_CASE("the grading covector is scaling on every enumerated model") {
    require_clean(grading_element_scaling(7), 100);
}

TEST_CASE("the a0 existence branches are honored by the uniform search") {
    require_clean(a0_branch_oracles(9), 300);
}
