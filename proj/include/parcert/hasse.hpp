#pragma once

#include "parcert/parabolic.hpp"

#include <utility>

namespace parcert {

// A length-two minimal coset representative w = s_i s_j, identified by the
// ordered pair (i j). When a_i and a_j commute and both lie in I, only the
// representative with i < j is kept (s_i s_j = s_j s_i).
struct HasseElement {
    int i = 0, j = 0;
    Vec phi_first;  // a_i
    Vec phi_second; // s_i(a_j)
    Vec w_dot_mu;   // affine action on the highest root, simple-root coords
    Rat homogeneity; // I-coefficient sum of -w.mu
};

// w.gamma = gamma - (1+gamma^i) a_i - (1+gamma^j) s_i(a_j), gamma^k the
// fundamental coordinates. Throws input_error when i == j.
Vec affine_act2(const RootSystem& sys, int i, int j, const Vec& gamma);

std::vector<HasseElement> wp2(const RootSystem& sys, const std::set<int>& I);
std::vector<HasseElement> wp2_plus(const RootSystem& sys, const std::set<int>& I);

// Brute-force oracle: all (i j), i != j, with both of {a_i, s_i(a_j)} of
// positive I-height, deduplicated exactly like wp2. Kept independent of the
// generator-based enumeration so the two can be diffed.
std::vector<std::pair<int, int>> wp2_oracle(const RootSystem& sys, const std::set<int>& I);

struct RestrictedTriple {
    Vec beta;  // a_i restricted
    Vec gamma; // s_i(a_j) restricted
    Vec zeta;  // -s_i s_j (mu) restricted
    Vec tau;   // beta + gamma + zeta = -(w.mu) restricted
};

RestrictedTriple restricted_triple(const RealModel& model, const HasseElement& h);

// zeta lies in the negative restricted positives and differs from -beta and
// -gamma.
bool kruglikov_the_check(const ParabolicDatum& pd, const RestrictedTriple& t);

} // namespace parcert
