#pragma once

#include "parcert/hasse.hpp"

#include <nlohmann/json_fwd.hpp>

namespace parcert {

// Sweep found a model where no seed passes every check: either an
// implementation bug or a genuine counterexample. Mapped to exit code 1.
struct classification_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct A0Witness {
    Vec alpha;            // restricted root of positive height
    Vec nu0;              // restricted root of positive height
    std::map<int, Rat> r; // uncrossed index -> coefficient of b_k
    Vec a0_flat;          // alpha + sum r_k b_k
};

struct C0Witness {
    int k = 0; // restricted index with negative tau-coefficient
    Rat t;     // c0 = E + t * (k-th restricted fundamental coweight)
};

struct Certificate {
    SatakeDatum model;
    std::set<int> I;
    bool special = false; // the one non-lowest-weight seed
    int seed_i = 0, seed_j = 0;
    Vec tau;
    Vec nonscaling_witness;
    A0Witness a0;
    C0Witness c0;
    bool kt_ok = false;
    std::optional<Rat> complex_killing_factor; // 2 for complex-as-real models
};

// Deterministic feasibility search over ordered pairs (alpha, nu0) of
// positive-height restricted roots, solving <alpha + sum r_k b_k, tau> = 0,
// <alpha + sum r_k b_k, nu0> = 0 exactly in the r_k. First feasible pair
// wins; free variables are set to zero.
std::optional<A0Witness> find_a0(const ParabolicDatum& pd, const Vec& tau);

// Smallest k with a negative tau-coefficient; t = -tau(E)/<tau, L_k>; the
// positivity of every positive-height root on c0 is checked exhaustively.
std::optional<C0Witness> find_c0(const ParabolicDatum& pd, const Vec& tau);

Certificate certify_model(const RealModel& model, const std::set<int>& I);

// Fixed certificate for (sl(4,H), P_{2,6}): the seed is not a lowest weight.
Certificate sl4h_special();

// Every (catalog form, crossed set) with real rank >= 3 and nonempty
// positive-homogeneity set: split forms, the classical non-split catalog,
// and complex-as-real forms, paired with the tabled crossed patterns (for
// non-split forms also their diagram-automorphism images, deduplicated
// modulo decoration-preserving automorphisms).
std::vector<std::pair<SatakeDatum, std::set<int>>> enumerate_models(int max_rank);

nlohmann::json certificate_to_json(const Certificate& cert);

// Rebuilds the model from the identifiers in the JSON, recomputes the
// certificate from (model, seed) alone and checks every component, including
// agreement with the serialized witness data. Returns false with a reason on
// any failure.
bool reverify_certificate(const nlohmann::json& j, std::string* why = nullptr);

} // namespace parcert
