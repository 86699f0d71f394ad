#pragma once

#include "parcert/realform.hpp"

namespace parcert {

// Partition of the restricted roots induced by a crossed-node subset.
struct ParabolicDatum {
    SatakeDatum satake;
    RestrictedRootSystem restricted;
    std::set<int> I;          // complex crossed nodes
    std::set<int> I_hat;      // restricted crossed indices
    std::set<int> uncrossed;  // restricted indices with height zero
    std::vector<Vec> pos_p_plus; // restricted positives of positive height, (height, lex)
    std::vector<Vec> levi_pos;   // restricted positives of height zero, (height, lex)

    // I_hat-coefficient sum of v: the value v(E) on the grading element.
    Rat height(const Vec& v) const;
};

// true iff I avoids painted nodes and is closed under the arrow pairing;
// the restricted index set comes along when compatible.
std::optional<std::set<int>> compatible(const SatakeDatum& datum, const std::set<int>& I);

ParabolicDatum build_parabolic(const RealModel& model, const std::set<int>& I);

inline Rat grading_eval(const ParabolicDatum& pd, const Vec& v) { return pd.height(v); }

struct ScalingResult {
    bool scaling = false;
    std::optional<Vec> witness; // restricted root violating the kernel condition
};

// tau's dual is a scaling element iff the restricted roots pairing to zero
// with tau are exactly the Levi roots. The witness is the first Levi root
// with nonzero pairing, else the first positive-height root with zero pairing.
ScalingResult is_scaling(const ParabolicDatum& pd, const Vec& tau);

// Covector representing the grading element: <theta, .> = height(theta).
Vec grading_covector(const ParabolicDatum& pd);

// tau's dual lies in the split part of the Levi center iff tau pairs to zero
// with every uncrossed simple restricted root.
bool in_levi_center(const ParabolicDatum& pd, const Vec& tau);

} // namespace parcert
