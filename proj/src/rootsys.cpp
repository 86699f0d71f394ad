#include "parcert/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace parcert {

Vec RootSystem::to_fundamental(const Vec& v) const {
    Vec gv = mat_vec(gram, v);
    Vec f(rank);
    for (int k = 0; k < rank; ++k) f[k] = 2 * gv[k] / gram[k][k];
    return f;
}

Vec RootSystem::from_fundamental(const Vec& f) const {
    // rows of the map v -> to_fundamental(v)
    Mat m(rank, Vec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = 2 * gram[i][j] / gram[i][i];
    return solve_square(m, f);
}

Vec RootSystem::reflect(int i, const Vec& v) const {
    if (i < 1 || i > rank) throw input_error("reflection node out of range");
    Rat c = 2 * dot(gram, v, simple_root(i)) / gram[i - 1][i - 1];
    Vec w(v);
    w[i - 1] -= c;
    return w;
}

Vec RootSystem::simple_root(int i) const {
    Vec v = zero_vec(rank);
    v[i - 1] = 1;
    return v;
}

bool RootSystem::is_positive_root(const Vec& v) const {
    if (!is_root(v)) return false;
    return coord_sum(v) > 0;
}

RootSystem build_root_system(const DynkinType& t) {
    if (!dynkin_valid(t)) throw input_error("invalid Dynkin type");
    RootSystem sys;
    sys.type = t;
    sys.rank = t.rank;
    sys.cartan = cartan_matrix(t);
    sys.gram = gram_matrix(t);

    // Grow the positive system by height. theta + a_i is a root iff the
    // a_i-string through theta extends upward: p = q - <theta, a_i^v> with q
    // the known downward string length.
    std::set<Vec> pos;
    std::vector<Vec> frontier;
    for (int i = 1; i <= sys.rank; ++i) {
        pos.insert(sys.simple_root(i));
        frontier.push_back(sys.simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& theta : frontier) {
            for (int i = 1; i <= sys.rank; ++i) {
                Vec ai = sys.simple_root(i);
                Rat pairing = 2 * sys.inner(theta, ai) / sys.gram[i - 1][i - 1];
                Rat q(0);
                Vec down = sub(theta, ai);
                while (pos.count(down)) {
                    q += 1;
                    down = sub(down, ai);
                }
                if (q - pairing >= 1) {
                    Vec up = add(theta, ai);
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }

    sys.positives.assign(pos.begin(), pos.end());
    std::sort(sys.positives.begin(), sys.positives.end(), height_lex_less);
    for (const auto& r : sys.positives) {
        sys.all_roots.insert(r);
        sys.all_roots.insert(neg(r));
    }

    sys.mu = sys.positives.back();
    // the highest root is the unique root of maximal height and is dominant
    for (int i = 1; i <= sys.rank; ++i)
        if (sys.inner(sys.mu, sys.simple_root(i)) < 0)
            throw std::logic_error("highest root is not dominant");

    sys.rho = sys.from_fundamental(Vec(sys.rank, Rat(1)));
    return sys;
}

const RootSystem& root_system(const DynkinType& t) {
    static std::map<DynkinType, RootSystem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
    return it->second;
}

std::size_t expected_positive_count(const DynkinType& t) {
    const std::size_t l = static_cast<std::size_t>(t.rank);
    switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: throw input_error("invalid Dynkin type");
    }
}

} // namespace parcert
