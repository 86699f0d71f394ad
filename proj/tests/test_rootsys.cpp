#include "parcert/rootsys.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace parcert;
using namespace parcert::testutil;

TEST_CASE("rank constraints per family") {
    CHECK(dynkin_valid({'A', 1}));
    CHECK(!dynkin_valid({'B', 1}));
    CHECK(!dynkin_valid({'D', 3}));
    CHECK(dynkin_valid({'D', 4}));
    CHECK(!dynkin_valid({'E', 5}));
    CHECK(dynkin_valid({'E', 8}));
    CHECK(!dynkin_valid({'F', 3}));
    CHECK(!dynkin_valid({'G', 3}));
    CHECK_THROWS_AS(make_dynkin('D', 2), input_error);
    CHECK_THROWS_AS(build_root_system(DynkinType{'E', 9}), input_error);
}

TEST_CASE("A2 has exactly the three forced positive roots") {
    const auto& sys = root_system({'A', 2});
    REQUIRE(sys.positives.size() == 3);
    CHECK(sys.positives[0] == V({0, 1}));
    CHECK(sys.positives[1] == V({1, 0}));
    CHECK(sys.positives[2] == V({1, 1}));
    CHECK(sys.mu == V({1, 1}));
}

TEST_CASE("B3 highest root") {
    const auto& sys = root_system({'B', 3});
    CHECK(sys.mu == V({1, 2, 2}));
    CHECK(sys.positives.size() == 9);
    // mu = lambda_2
    CHECK(sys.to_fundamental(sys.mu) == V({0, 1, 0}));
}

TEST_CASE("E8 positive count, against an independent reflection-orbit enumeration") {
    const auto& sys = root_system({'E', 8});
    CHECK(sys.positives.size() == 120);

    // orbit of the simple roots under simple reflections
    std::set<Vec> orbit;
    std::vector<Vec> frontier;
    for (int i = 1; i <= 8; ++i) {
        orbit.insert(sys.simple_root(i));
        frontier.push_back(sys.simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (int i = 1; i <= 8; ++i) {
                Vec w = sys.reflect(i, v);
                if (orbit.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    CHECK(orbit.size() == 240);
    for (const auto& v : orbit) CHECK(sys.is_root(v));
}

TEST_CASE("inner product examples") {
    const auto& a3 = root_system({'A', 3});
    CHECK(a3.inner(V({1, 0, 0}), V({-1, -2, 1})) == 0);

    const auto& b3 = root_system({'B', 3});
    Vec lambda2 = b3.from_fundamental(V({0, 1, 0}));
    CHECK(b3.inner(lambda2, V({1, 0, -3})) == 0);

    // bilinearity against the zero vector
    CHECK(a3.inner(a3.rho, zero_vec(3)) == 0);
}

TEST_CASE("fundamental coordinate conversions") {
    const auto& a3 = root_system({'A', 3});
    Vec f = a3.to_fundamental(V({-1, -2, 1}));
    CHECK(f[0] == 0); // cross-check of the zero pairing with a_1
    CHECK(f == V({0, -4, 4}));

    // a_i maps to the i-th row of the Cartan matrix
    for (int i = 1; i <= 3; ++i) {
        Vec row = a3.to_fundamental(a3.simple_root(i));
        for (int j = 1; j <= 3; ++j) CHECK(row[j - 1] == a3.cartan[i - 1][j - 1]);
    }
    Vec g = V({1, -2, -1});
    CHECK(a3.from_fundamental(a3.to_fundamental(g)) == g);
}

TEST_CASE("reflections") {
    const auto& b3 = root_system({'B', 3});
    CHECK(b3.reflect(3, V({0, 1, 0})) == V({0, 1, 2})); // s_3(a_2) = a_2 + 2a_3

    const auto& a5 = root_system({'A', 5});
    CHECK(a5.reflect(2, a5.simple_root(1)) == V({1, 1, 0, 0, 0}));
    CHECK_THROWS_AS(b3.reflect(4, V({0, 1, 0})), input_error);
}

TEST_CASE("rho has fundamental coordinates all one") {
    for (DynkinType t : {DynkinType{'A', 3}, DynkinType{'B', 4}, DynkinType{'G', 2}}) {
        const auto& sys = root_system(t);
        CHECK(sys.to_fundamental(sys.rho) == Vec(t.rank, Rat(1)));
    }
}

TEST_CASE("diagram automorphisms") {
    // D4 swap of nodes 1 and 3 moves the parabolic {1,2,4} to {2,3,4}
    std::vector<int> swap13 = {3, 2, 1, 4};
    CHECK(diagram_automorphism({'D', 4}, swap13, {1, 2, 4}) == std::set<int>{2, 3, 4});

    std::vector<int> ident = {1, 2, 3, 4};
    CHECK(diagram_automorphism({'D', 4}, ident, {1, 2, 4}) == std::set<int>{1, 2, 4});

    std::vector<int> rev3 = {3, 2, 1};
    CHECK(diagram_automorphism({'A', 3}, rev3, {1}) == std::set<int>{3});

    std::vector<int> bad = {2, 1, 3};
    CHECK_THROWS_AS(diagram_automorphism({'A', 3}, bad, {1}), input_error);

    CHECK(diagram_automorphisms({'A', 4}).size() == 2);
    CHECK(diagram_automorphisms({'D', 4}).size() == 6); // full triality
    CHECK(diagram_automorphisms({'D', 5}).size() == 2);
    CHECK(diagram_automorphisms({'E', 6}).size() == 2);
    CHECK(diagram_automorphisms({'E', 7}).size() == 1);
    CHECK(diagram_automorphisms({'B', 5}).size() == 1);
}

TEST_CASE("gram matrices are symmetric positive definite") {
    for (DynkinType t : {DynkinType{'A', 5}, DynkinType{'B', 4}, DynkinType{'C', 6},
                         DynkinType{'D', 7}, DynkinType{'E', 8}, DynkinType{'F', 4},
                         DynkinType{'G', 2}}) {
        Mat g = gram_matrix(t);
        for (int a = 0; a < t.rank; ++a)
            for (int b = 0; b < t.rank; ++b) CHECK(g[a][b] == g[b][a]);
        // leading principal minors all positive
        for (int k = 1; k <= t.rank; ++k) {
            Mat sub(k, Vec(k));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub[a][b] = g[a][b];
            // determinant via fraction-free elimination
            Rat det(1);
            for (int col = 0; col < k; ++col) {
                int piv = col;
                while (piv < k && sub[piv][col] == 0) ++piv;
                REQUIRE(piv < k);
                if (piv != col) {
                    std::swap(sub[piv], sub[col]);
                    det = -det;
                }
                det *= sub[col][col];
                for (int row = col + 1; row < k; ++row) {
                    Rat f = sub[row][col] / sub[col][col];
                    for (int cc = col; cc < k; ++cc) sub[row][cc] -= f * sub[col][cc];
                }
            }
            CHECK(det > 0);
        }
    }
}

TEST_CASE("pairs of roots have integral Cartan pairings") {
    for (DynkinType t : {DynkinType{'A', 4}, DynkinType{'B', 3}, DynkinType{'C', 4},
                         DynkinType{'D', 5}, DynkinType{'F', 4}, DynkinType{'G', 2}}) {
        const auto& sys = root_system(t);
        for (const auto& x : sys.positives)
            for (const auto& y : sys.positives) {
                CHECK(rat_is_integer(2 * sys.inner(x, y) / sys.norm2(y)));
                CHECK(rat_is_integer(2 * sys.inner(x, neg(y)) / sys.norm2(y)));
            }
    }
}

TEST_CASE("G2 conventions: node 1 short, highest root 3a1+2a2") {
    const auto& g2 = root_system({'G', 2});
    CHECK(g2.mu == V({3, 2}));
    CHECK(g2.norm2(g2.simple_root(2)) == 2);
    CHECK(g2.norm2(g2.simple_root(1)) == Rat(2, 3));
}
