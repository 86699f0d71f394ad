#pragma once

#include "parcert/linalg.hpp"

#include <set>
#include <string>
#include <vector>

namespace parcert {

// A complex simple type. Node numbering: A/B/C/D follow the usual chain
// numbering with the fork of D_l at nodes {l-1, l} hanging off node l-2.
// E_l is the chain 1..l-1 with node l attached to node 3. F_4 has nodes 1,2
// long and 3,4 short; G_2 has node 1 short and node 2 long.
struct DynkinType {
    char family = 0; // 'A'..'G'
    int rank = 0;

    bool operator==(const DynkinType&) const = default;
    bool operator<(const DynkinType& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
};

bool dynkin_valid(const DynkinType& t);
DynkinType make_dynkin(char family, int rank); // throws input_error if invalid
std::string dynkin_name(const DynkinType& t);  // e.g. "B3"
DynkinType parse_dynkin(const std::string& s); // accepts "B3", "b3"

// cartan[i-1][j-1] = 2<a_j, a_i>/|a_i|^2, so s_i(a_j) = a_j - c_ij a_i.
Mat cartan_matrix(const DynkinType& t);

// Exact inner products of simple roots; long roots have squared length 2 in
// each component.
Mat gram_matrix(const DynkinType& t);

// 1-based nodes adjacent to node i (c_ij != 0, i != j).
std::vector<int> dynkin_neighbors(const DynkinType& t, int i);

// All node permutations preserving the Cartan matrix, as 1-based maps
// perm[i-1] = image of node i. The identity comes first; order is
// deterministic.
std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t);

bool is_diagram_automorphism(const DynkinType& t, const std::vector<int>& perm);

// Applies a validated diagram automorphism to a node subset; throws
// input_error if perm does not preserve the Cartan matrix.
std::set<int> diagram_automorphism(const DynkinType& t, const std::vector<int>& perm,
                                   const std::set<int>& nodes);

} // namespace parcert
