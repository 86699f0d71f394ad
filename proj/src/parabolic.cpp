#include "parcert/parabolic.hpp"

#include <algorithm>

namespace parcert {

std::optional<std::set<int>> compatible(const SatakeDatum& datum, const std::set<int>& I) {
    std::set<int> I_hat;
    for (int k : I) {
        if (k < 1 || k > datum.complex_type.rank)
            throw input_error("crossed node out of range: " + std::to_string(k));
        if (datum.compact_nodes.count(k)) return std::nullopt;
        auto arrow = datum.arrow_pairs.find(k);
        if (arrow != datum.arrow_pairs.end() && !I.count(arrow->second)) return std::nullopt;
        I_hat.insert(datum.restriction_class[k - 1]);
    }
    return I_hat;
}

Rat ParabolicDatum::height(const Vec& v) const {
    Rat h(0);
    for (int k : I_hat) h += v[k - 1];
    return h;
}

ParabolicDatum build_parabolic(const RealModel& model, const std::set<int>& I) {
    if (I.empty()) throw input_error("crossed node set must be nonempty");
    auto I_hat = compatible(model.satake, I);
    if (!I_hat)
        throw input_error("crossed set not compatible with " + model.satake.name);

    ParabolicDatum pd;
    pd.satake = model.satake;
    pd.restricted = model.restricted;
    pd.I = I;
    pd.I_hat = *I_hat;
    for (int k = 1; k <= pd.restricted.rank; ++k)
        if (!pd.I_hat.count(k)) pd.uncrossed.insert(k);
    for (const auto& v : pd.restricted.positives) {
        Rat h = pd.height(v);
        if (h > 0)
            pd.pos_p_plus.push_back(v);
        else if (h == 0)
            pd.levi_pos.push_back(v);
        else
            throw std::logic_error("positive restricted root of negative height");
    }
    return pd;
}

ScalingResult is_scaling(const ParabolicDatum& pd, const Vec& tau) {
    // kernel symmetric under negation, so comparing positive halves suffices
    for (const auto& v : pd.levi_pos)
        if (pd.restricted.inner(v, tau) != 0) return {false, v};
    for (const auto& v : pd.pos_p_plus)
        if (pd.restricted.inner(v, tau) == 0) return {false, v};
    return {true, std::nullopt};
}

Vec grading_covector(const ParabolicDatum& pd) {
    Vec f(pd.restricted.rank, Rat(0));
    for (int k : pd.I_hat) f[k - 1] = 1;
    // f holds the desired pairings <b_k, .>; convert to fundamental coords
    Vec fund(pd.restricted.rank);
    for (int k = 0; k < pd.restricted.rank; ++k)
        fund[k] = 2 * f[k] / pd.restricted.gram[k][k];
    return pd.restricted.from_fundamental(fund);
}

bool in_levi_center(const ParabolicDatum& pd, const Vec& tau) {
    for (int k : pd.uncrossed) {
        Vec bk = zero_vec(pd.restricted.rank);
        bk[k - 1] = 1;
        if (pd.restricted.inner(tau, bk) != 0) return false;
    }
    return true;
}

} // namespace parcert
