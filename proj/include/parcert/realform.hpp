#pragma once

#include "parcert/rootsys.hpp"

#include <map>
#include <optional>

namespace parcert {

// Combinatorial encoding of a real form: painted nodes, the arrow pairing,
// and the induced map from complex simple roots to simple restricted roots.
struct SatakeDatum {
    std::string name;    // canonical, e.g. "sl(4,H)", "so(3,7)", "split(B3)"
    std::string row_key; // catalog row: "split", "complex", "slH", "su_pq", ...
    std::vector<int> params;
    DynkinType complex_type;
    std::set<int> compact_nodes;       // 1-based painted nodes
    std::map<int, int> arrow_pairs;    // involution, stored both ways
    DynkinType restricted_type;        // indivisible-root diagram
    std::vector<int> restriction_class; // [k-1] = restricted index of node k, 0 if compact

    int real_rank() const { return restricted_type.rank; }
    bool structurally_split() const { return compact_nodes.empty() && arrow_pairs.empty(); }
};

struct RestrictedRootSystem {
    DynkinType type; // indivisible-root diagram of the image
    int rank = 0;
    Mat gram; // from `type`, long roots squared length 2
    std::vector<Vec> positives; // image of the complex positive system, (height, lex)
    std::set<Vec> all_restricted;
    Vec mu_restricted;

    Rat inner(const Vec& u, const Vec& v) const { return dot(gram, u, v); }
    Rat norm2(const Vec& u) const { return dot(gram, u, u); }
    Vec to_fundamental(const Vec& v) const;
    Vec from_fundamental(const Vec& f) const;
    bool contains(const Vec& v) const { return all_restricted.count(v) != 0; }
    bool is_positive(const Vec& v) const;
};

struct RealModel {
    SatakeDatum satake;
    const RootSystem* complex_system = nullptr; // cached, owned by root_system()
    RestrictedRootSystem restricted;

    bool is_split() const { return satake.structurally_split(); }
};

// Known catalog names (see parse_form for accepted spellings):
//   split(Xl), complex(Xl), sl(m,H), su(p,q), so(p,q), sp(p,q), so*(n)
SatakeDatum catalog_lookup(const std::string& name, const std::vector<int>& params);

// Parses CLI spellings: "split(B3)"/"splitB3"/"splitB" + params, "sl4H",
// "sl(4,H)", "su(3,3)", "so*(12)", "complexA3", bare "su" with --params 3,3 ...
SatakeDatum parse_form(const std::string& name, const std::vector<int>& params);

// Row-keyed constructor used by the catalog sweeps; unlike parse_form it does
// not canonicalize boundary parameters to split forms. l is ignored for
// one-parameter rows.
SatakeDatum catalog_row_datum(const std::string& key, int p, int l);

RealModel build_model(const SatakeDatum& datum);
RealModel split_model(const DynkinType& t);

// Coefficient-wise pushforward along the restriction class map.
Vec restrict_vec(const SatakeDatum& datum, const Vec& v);

int real_rank(const RealModel& model);

// Cartan integers of the image set derived from root strings alone,
// independent of the cataloged gram: c[j][k] = -max{m : b_k + m b_j in image}.
Mat derived_restricted_cartan(const RestrictedRootSystem& r);

// 2<x,y>/|y|^2 integral over all pairs of restricted roots.
bool restricted_integrality_audit(const RestrictedRootSystem& r);

} // namespace parcert
