#pragma once

#include "parcert/dynkin.hpp"

#include <set>

namespace parcert {

// A complex simple root system. Roots and weights live in simple-root
// coordinates (index k of a Vec is the coefficient of a_k); fundamental-weight
// coordinates are a derived view through to_fundamental/from_fundamental.
struct RootSystem {
    DynkinType type;
    int rank = 0;
    Mat cartan; // c[i-1][j-1] = 2<a_j,a_i>/|a_i|^2
    Mat gram;   // <a_i,a_j>, long roots squared length 2
    std::vector<Vec> positives; // full positive system, (height, lex) order
    std::set<Vec> all_roots;    // positives and their negatives
    Vec mu;  // highest root
    Vec rho; // Weyl vector: fundamental coordinates all 1

    Rat inner(const Vec& u, const Vec& v) const { return dot(gram, u, v); }
    Rat norm2(const Vec& u) const { return dot(gram, u, u); }

    // gamma^i = 2<v, a_i>/|a_i|^2
    Vec to_fundamental(const Vec& v) const;
    Vec from_fundamental(const Vec& f) const;

    // s_i(v) = v - (2<v,a_i>/|a_i|^2) a_i
    Vec reflect(int i, const Vec& v) const;

    Vec simple_root(int i) const; // a_i as a coordinate vector

    bool is_root(const Vec& v) const { return all_roots.count(v) != 0; }
    bool is_positive_root(const Vec& v) const;

    std::vector<int> neighbors(int i) const { return dynkin_neighbors(type, i); }
};

RootSystem build_root_system(const DynkinType& t);

// Cached per type; root systems are immutable so sharing is safe.
const RootSystem& root_system(const DynkinType& t);

// Expected positive-root counts: A_l l(l+1)/2, B_l/C_l l^2, D_l l(l-1),
// G2 6, F4 24, E6 36, E7 63, E8 120.
std::size_t expected_positive_count(const DynkinType& t);

} // namespace parcert
