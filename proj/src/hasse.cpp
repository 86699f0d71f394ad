#include "parcert/hasse.hpp"

#include <algorithm>

namespace parcert {

Vec affine_act2(const RootSystem& sys, int i, int j, const Vec& gamma) {
    if (i == j) throw input_error("affine_act2 needs i != j");
    if (i < 1 || i > sys.rank || j < 1 || j > sys.rank)
        throw input_error("node index out of range");
    Vec fund = sys.to_fundamental(gamma);
    Vec si_aj = sys.reflect(i, sys.simple_root(j));
    Vec out = sub(gamma, scale(1 + fund[i - 1], sys.simple_root(i)));
    return sub(out, scale(1 + fund[j - 1], si_aj));
}

namespace {

HasseElement make_element(const RootSystem& sys, const std::set<int>& I, int i, int j) {
    HasseElement h;
    h.i = i;
    h.j = j;
    h.phi_first = sys.simple_root(i);
    h.phi_second = sys.reflect(i, sys.simple_root(j));
    h.w_dot_mu = affine_act2(sys, i, j, sys.mu);
    Rat hom(0);
    for (int k : I) hom += -h.w_dot_mu[k - 1];
    h.homogeneity = hom;
    return h;
}

// s_i s_j = s_j s_i when a_i, a_j commute; both orders are generated exactly
// when j also lies in I, so keep the representative with i < j.
bool duplicate_of_commuting_pair(const RootSystem& sys, const std::set<int>& I, int i, int j) {
    return sys.cartan[i - 1][j - 1] == 0 && I.count(j) && j < i;
}

} // namespace

std::vector<HasseElement> wp2(const RootSystem& sys, const std::set<int>& I) {
    if (I.empty()) throw input_error("crossed node set must be nonempty");
    std::vector<HasseElement> out;
    for (int i : I) {
        if (i < 1 || i > sys.rank) throw input_error("crossed node out of range");
        std::set<int> js(I.begin(), I.end());
        for (int n : sys.neighbors(i)) js.insert(n);
        js.erase(i);
        for (int j : js) {
            if (duplicate_of_commuting_pair(sys, I, i, j)) continue;
            out.push_back(make_element(sys, I, i, j));
        }
    }
    std::sort(out.begin(), out.end(), [](const HasseElement& a, const HasseElement& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return out;
}

std::vector<HasseElement> wp2_plus(const RootSystem& sys, const std::set<int>& I) {
    std::vector<HasseElement> out;
    for (auto& h : wp2(sys, I))
        if (h.homogeneity > 0) out.push_back(h);
    return out;
}

std::vector<std::pair<int, int>> wp2_oracle(const RootSystem& sys, const std::set<int>& I) {
    auto i_height = [&](const Vec& v) {
        Rat h(0);
        for (int k : I) h += v[k - 1];
        return h;
    };
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= sys.rank; ++i)
        for (int j = 1; j <= sys.rank; ++j) {
            if (i == j) continue;
            if (duplicate_of_commuting_pair(sys, I, i, j)) continue;
            Vec a = sys.simple_root(i);
            Vec b = sys.reflect(i, sys.simple_root(j));
            if (i_height(a) > 0 && i_height(b) > 0) out.push_back({i, j});
        }
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedTriple restricted_triple(const RealModel& model, const HasseElement& h) {
    const RootSystem& sys = *model.complex_system;
    RestrictedTriple t;
    t.beta = restrict_vec(model.satake, sys.simple_root(h.i));
    t.gamma = restrict_vec(model.satake, sys.reflect(h.i, sys.simple_root(h.j)));
    Vec sij_mu = sys.reflect(h.i, sys.reflect(h.j, sys.mu));
    t.zeta = restrict_vec(model.satake, neg(sij_mu));
    t.tau = add(add(t.beta, t.gamma), t.zeta);
    return t;
}

bool kruglikov_the_check(const ParabolicDatum& pd, const RestrictedTriple& t) {
    if (!pd.restricted.is_positive(neg(t.zeta))) return false;
    if (t.zeta == neg(t.beta)) return false;
    if (t.zeta == neg(t.gamma)) return false;
    return true;
}

} // namespace parcert
