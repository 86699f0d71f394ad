#pragma once

#include "parcert/realform.hpp"

#include <utility>

namespace parcert {

struct ReportItem {
    std::string where;
    std::string detail;
};

struct VerificationReport {
    int rows_checked = 0;
    std::vector<ReportItem> mismatches;
    std::vector<ReportItem> flags;
    bool verified() const { return mismatches.empty(); }
};

// One instantiated table row: concrete rank, crossed set, expected pairs.
struct YamaguchiInstance {
    std::string case_id;
    DynkinType type;
    std::set<int> I;
    std::set<std::pair<int, int>> expected;
    bool ambiguous = false; // differences reported as flags, not mismatches
    bool corrected = false; // stored cell deviates from the printed one
    std::string quote;
};

std::vector<YamaguchiInstance> yamaguchi_instances(int max_rank);

// All catalog rows instantiated with parameters keeping the complex rank
// within max_rank. Split and complex-as-real forms are not part of the
// catalog file; see enumerate_models.
std::vector<SatakeDatum> instantiate_catalog(int max_rank);

// Recompute every instantiated table row and diff against the stored table;
// also sweeps untabled singleton and pair subsets, requiring their
// positive-homogeneity set to be empty unless the subset matches a tabled one
// up to a diagram automorphism.
VerificationReport verify_yamaguchi(int max_rank);

// Recompute real rank, restricted Cartan data and the restricted highest
// root for every catalog row; diff against the stored table. Rows marked
// mu_flag report the computed value instead of asserting the tabled one.
VerificationReport verify_satake(int max_rank);

} // namespace parcert
