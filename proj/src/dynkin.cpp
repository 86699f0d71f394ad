#include "parcert/dynkin.hpp"

#include <algorithm>

namespace parcert {

bool dynkin_valid(const DynkinType& t) {
    switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
    }
}

DynkinType make_dynkin(char family, int rank) {
    DynkinType t{family, rank};
    if (!dynkin_valid(t))
        throw input_error("invalid Dynkin type " + std::string(1, family) +
                          std::to_string(rank));
    return t;
}

std::string dynkin_name(const DynkinType& t) {
    return std::string(1, t.family) + std::to_string(t.rank);
}

DynkinType parse_dynkin(const std::string& s) {
    if (s.size() < 2) throw input_error("cannot parse Dynkin type '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw input_error("cannot parse Dynkin type '" + s + "'");
    }
    return make_dynkin(fam, rank);
}

namespace {

// Undirected edges of the diagram, 1-based.
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
    std::vector<std::pair<int, int>> e;
    const int l = t.rank;
    switch (t.family) {
    case 'A':
    case 'B':
    case 'C':
    case 'F':
    case 'G':
        for (int k = 1; k < l; ++k) e.push_back({k, k + 1});
        break;
    case 'D':
        for (int k = 1; k < l - 1; ++k) e.push_back({k, k + 1});
        e.push_back({l - 2, l});
        break;
    case 'E':
        for (int k = 1; k < l - 1; ++k) e.push_back({k, k + 1});
        e.push_back({3, l});
        break;
    }
    return e;
}

// d_i = |a_i|^2 / 2, long roots normalized to squared length 2.
std::vector<Rat> half_lengths(const DynkinType& t) {
    const int l = t.rank;
    std::vector<Rat> d(l, Rat(1));
    switch (t.family) {
    case 'B':
        d[l - 1] = Rat(1, 2);
        break;
    case 'C':
        for (int k = 0; k < l - 1; ++k) d[k] = Rat(1, 2);
        break;
    case 'F':
        // nodes 1,2 short and 3,4 long: pinned against the degree-two table,
        // whose F4/P4 row forces this orientation
        d[0] = Rat(1, 2);
        d[1] = Rat(1, 2);
        break;
    case 'G':
        d[0] = Rat(1, 3);
        break;
    default:
        break;
    }
    return d;
}

} // namespace

Mat gram_matrix(const DynkinType& t) {
    if (!dynkin_valid(t)) throw input_error("invalid Dynkin type");
    const int l = t.rank;
    auto d = half_lengths(t);
    Mat g(l, Vec(l, Rat(0)));
    for (int k = 0; k < l; ++k) g[k][k] = 2 * d[k];
    for (auto [a, b] : diagram_edges(t)) {
        // adjacent simple roots: <a_a, a_b> = -max(d_a, d_b)
        Rat v = -std::max(d[a - 1], d[b - 1]);
        g[a - 1][b - 1] = v;
        g[b - 1][a - 1] = v;
    }
    return g;
}

Mat cartan_matrix(const DynkinType& t) {
    Mat g = gram_matrix(t);
    const int l = t.rank;
    Mat c(l, Vec(l, Rat(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c[i][j] = 2 * g[j][i] / g[i][i];
    return c;
}

std::vector<int> dynkin_neighbors(const DynkinType& t, int i) {
    if (i < 1 || i > t.rank) throw input_error("node index out of range");
    std::vector<int> n;
    for (auto [a, b] : diagram_edges(t)) {
        if (a == i) n.push_back(b);
        if (b == i) n.push_back(a);
    }
    std::sort(n.begin(), n.end());
    return n;
}

bool is_diagram_automorphism(const DynkinType& t, const std::vector<int>& perm) {
    const int l = t.rank;
    if (static_cast<int>(perm.size()) != l) return false;
    std::vector<bool> seen(l + 1, false);
    for (int v : perm) {
        if (v < 1 || v > l || seen[v]) return false;
        seen[v] = true;
    }
    Mat c = cartan_matrix(t);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (c[perm[i] - 1][perm[j] - 1] != c[i][j]) return false;
    return true;
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t) {
    const int l = t.rank;
    Mat c = cartan_matrix(t);
    std::vector<std::vector<int>> result;
    std::vector<int> perm(l, 0);
    std::vector<bool> used(l + 1, false);

    auto consistent = [&](int pos) {
        for (int k = 0; k < pos; ++k) {
            if (c[perm[pos] - 1][perm[k] - 1] != c[pos][k]) return false;
            if (c[perm[k] - 1][perm[pos] - 1] != c[k][pos]) return false;
        }
        return c[perm[pos] - 1][perm[pos] - 1] == c[pos][pos];
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == l) {
            result.push_back(perm);
            return;
        }
        for (int v = 1; v <= l; ++v) {
            if (used[v]) continue;
            perm[pos] = v;
            if (consistent(pos)) {
                used[v] = true;
                self(self, pos + 1);
                used[v] = false;
            }
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

std::set<int> diagram_automorphism(const DynkinType& t, const std::vector<int>& perm,
                                   const std::set<int>& nodes) {
    if (!is_diagram_automorphism(t, perm))
        throw input_error("permutation does not preserve the Cartan matrix");
    std::set<int> image;
    for (int k : nodes) {
        if (k < 1 || k > t.rank) throw input_error("node index out of range");
        image.insert(perm[k - 1]);
    }
    return image;
}

} // namespace parcert
