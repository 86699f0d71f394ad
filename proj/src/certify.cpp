#include "parcert/certify.hpp"

#include "parcert/catalogs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

using nlohmann::json;

namespace parcert {

std::optional<A0Witness> find_a0(const ParabolicDatum& pd, const Vec& tau) {
    const auto& r = pd.restricted;
    std::vector<int> un(pd.uncrossed.begin(), pd.uncrossed.end());

    auto simple = [&](int k) {
        Vec b = zero_vec(r.rank);
        b[k - 1] = 1;
        return b;
    };
    std::vector<Vec> b_tau_row(un.size());
    for (std::size_t k = 0; k < un.size(); ++k) b_tau_row[k] = simple(un[k]);

    for (const auto& alpha : pd.pos_p_plus) {
        for (const auto& nu0 : pd.pos_p_plus) {
            Mat a(2, Vec(un.size(), Rat(0)));
            for (std::size_t k = 0; k < un.size(); ++k) {
                a[0][k] = r.inner(b_tau_row[k], tau);
                a[1][k] = r.inner(b_tau_row[k], nu0);
            }
            Vec rhs = {-r.inner(alpha, tau), -r.inner(alpha, nu0)};
            auto sol = solve_consistent(a, rhs);
            if (!sol) continue;
            A0Witness w;
            w.alpha = alpha;
            w.nu0 = nu0;
            w.a0_flat = alpha;
            for (std::size_t k = 0; k < un.size(); ++k) {
                w.r[un[k]] = (*sol)[k];
                w.a0_flat[un[k] - 1] += (*sol)[k];
            }
            if (r.inner(w.a0_flat, tau) != 0 || r.inner(w.a0_flat, nu0) != 0)
                throw std::logic_error("a0 solve produced a non-solution");
            return w;
        }
    }
    return std::nullopt;
}

std::optional<C0Witness> find_c0(const ParabolicDatum& pd, const Vec& tau) {
    const auto& r = pd.restricted;
    Rat tau_E = pd.height(tau);
    if (!(tau_E > 0)) throw input_error("find_c0 needs tau of positive homogeneity");
    int k = 0;
    for (int idx = 1; idx <= r.rank; ++idx)
        if (tau[idx - 1] < 0) {
            k = idx;
            break;
        }
    if (k == 0) return std::nullopt;
    // <tau, L_k> = (k-th coefficient) |b_k|^2 / 2 < 0
    Rat pair_k = tau[k - 1] * r.gram[k - 1][k - 1] / 2;
    Rat t = -tau_E / pair_k;
    if (!(t > 0)) throw std::logic_error("c0 parameter not positive");
    for (const auto& nu : pd.pos_p_plus) {
        Rat val = pd.height(nu) + t * nu[k - 1] * r.gram[k - 1][k - 1] / 2;
        if (!(val > 0)) return std::nullopt;
    }
    return C0Witness{k, t};
}

namespace {

std::optional<Certificate> try_seed(const RealModel& model, const ParabolicDatum& pd,
                                    const HasseElement& h) {
    RestrictedTriple triple = restricted_triple(model, h);
    const Vec& tau = triple.tau;
    ScalingResult sc = is_scaling(pd, tau);
    if (sc.scaling) return std::nullopt;
    if (!kruglikov_the_check(pd, triple)) return std::nullopt;
    auto a0 = find_a0(pd, tau);
    if (!a0) return std::nullopt;
    auto c0 = find_c0(pd, tau);
    if (!c0)
        throw classification_violation(
            model.satake.name + ": tau from a positive-homogeneity seed has no negative "
                                "coefficient, so the c0 construction has no foothold");

    Certificate cert;
    cert.model = model.satake;
    cert.I = pd.I;
    cert.seed_i = h.i;
    cert.seed_j = h.j;
    cert.tau = tau;
    cert.nonscaling_witness = *sc.witness;
    cert.a0 = *a0;
    cert.c0 = *c0;
    cert.kt_ok = true;
    if (model.satake.row_key == "complex") cert.complex_killing_factor = Rat(2);
    return cert;
}

bool is_sl4h_p26(const SatakeDatum& datum, const std::set<int>& I) {
    return datum.row_key == "slH" && datum.params == std::vector<int>{3} &&
           I == std::set<int>{2, 6};
}

} // namespace

Certificate certify_model(const RealModel& model, const std::set<int>& I) {
    if (is_sl4h_p26(model.satake, I)) return sl4h_special();
    if (real_rank(model) < 3)
        throw input_error(model.satake.name + " has real rank < 3");
    ParabolicDatum pd = build_parabolic(model, I);
    auto plus = wp2_plus(*model.complex_system, I);
    if (plus.empty())
        throw input_error(model.satake.name + ": crossed set is Yamaguchi rigid");
    for (const auto& h : plus)
        if (auto cert = try_seed(model, pd, h)) return *cert;
    throw classification_violation(model.satake.name + " with crossed set: no seed admits a full certificate");
}

Certificate sl4h_special() {
    RealModel model = build_model(parse_form("sl(4,H)", {}));
    std::set<int> I = {2, 6};
    ParabolicDatum pd = build_parabolic(model, I);
    const auto& r = pd.restricted;

    auto fail = [](const std::string& what) -> void {
        throw std::logic_error("sl4h_special invariant failed: " + what);
    };

    Vec tau = {Rat(2), Rat(0), Rat(-1)}; // 2 b1 - b3
    if (pd.height(tau) != 1) fail("tau(E) != 1");

    // the three component weight triples of the seed
    Vec b1 = {Rat(1), Rat(0), Rat(0)};
    Vec b12 = {Rat(1), Rat(1), Rat(0)};
    Vec m23 = {Rat(0), Rat(-1), Rat(-1)};
    Vec m3 = {Rat(0), Rat(0), Rat(-1)};
    std::vector<RestrictedTriple> comps;
    comps.push_back({b12, b1, m23, add(add(b12, b1), m23)});
    comps.push_back({b1, b12, m23, add(add(b1, b12), m23)});
    comps.push_back({b1, b1, m3, add(add(b1, b1), m3)});
    for (const auto& c : comps) {
        if (c.tau != tau) fail("component weight is not tau");
        if (!kruglikov_the_check(pd, c)) fail("component fails the second-order check");
    }

    ScalingResult sc = is_scaling(pd, tau);
    if (sc.scaling || !sc.witness) fail("tau unexpectedly scaling");
    Vec beta2 = {Rat(0), Rat(1), Rat(0)};
    if (*sc.witness != beta2) fail("non-scaling witness is not b2");
    if (r.inner(beta2, tau) != Rat(-1)) fail("<b2,tau> != -|b2|^2/2");

    A0Witness a0;
    a0.alpha = r.mu_restricted; // b1+b2+b3
    a0.nu0 = b1;
    a0.r[2] = Rat(1);
    a0.a0_flat = add(a0.alpha, beta2); // b1+2b2+b3
    if (r.inner(a0.a0_flat, tau) != 0) fail("<a0,tau> != 0");
    if (r.inner(a0.a0_flat, a0.nu0) != 0) fail("<a0,nu0> != 0");
    if (r.to_fundamental(a0.a0_flat) != Vec{Rat(0), Rat(2), Rat(0)}) fail("a0 != 2 L2");

    auto c0 = find_c0(pd, tau);
    if (!c0 || c0->k != 3) fail("c0 construction");

    Certificate cert;
    cert.model = model.satake;
    cert.I = I;
    cert.special = true;
    cert.tau = tau;
    cert.nonscaling_witness = beta2;
    cert.a0 = a0;
    cert.c0 = *c0;
    cert.kt_ok = true;
    return cert;
}

namespace {

// Decoration-preserving diagram automorphisms: fix the painted set and
// commute with the arrow pairing.
std::vector<std::vector<int>> satake_automorphisms(const SatakeDatum& d) {
    std::vector<std::vector<int>> out;
    for (const auto& perm : diagram_automorphisms(d.complex_type)) {
        bool ok = true;
        for (int k = 1; k <= d.complex_type.rank && ok; ++k) {
            bool painted = d.compact_nodes.count(k) != 0;
            if (painted != (d.compact_nodes.count(perm[k - 1]) != 0)) ok = false;
        }
        for (auto [a, b] : d.arrow_pairs) {
            if (!ok) break;
            auto it = d.arrow_pairs.find(perm[a - 1]);
            if (it == d.arrow_pairs.end() || it->second != perm[b - 1]) ok = false;
        }
        if (ok) out.push_back(perm);
    }
    return out;
}

std::set<int> apply_perm(const std::vector<int>& perm, const std::set<int>& I) {
    std::set<int> out;
    for (int k : I) out.insert(perm[k - 1]);
    return out;
}

} // namespace

std::vector<std::pair<SatakeDatum, std::set<int>>> enumerate_models(int max_rank) {
    if (max_rank < 4) throw input_error("enumerate_models needs max_rank >= 4");
    std::vector<std::pair<SatakeDatum, std::set<int>>> out;

    auto instances = yamaguchi_instances(max_rank);
    std::map<DynkinType, std::vector<std::set<int>>> tabled_by_type;
    for (const auto& inst : instances) {
        auto& v = tabled_by_type[inst.type];
        if (std::find(v.begin(), v.end(), inst.I) == v.end()) v.push_back(inst.I);
    }

    auto add_split_like = [&](const SatakeDatum& datum) {
        if (datum.real_rank() < 3) return;
        auto it = tabled_by_type.find(datum.complex_type);
        if (it == tabled_by_type.end()) return;
        const RootSystem& sys = root_system(datum.complex_type);
        for (const auto& I : it->second)
            if (!wp2_plus(sys, I).empty()) out.push_back({datum, I});
    };

    for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int rank = 1; rank <= max_rank; ++rank)
            if (dynkin_valid({fam, rank})) add_split_like(parse_form("split" + std::string(1, fam), {rank}));

    for (const auto& datum : instantiate_catalog(max_rank)) {
        if (datum.structurally_split()) continue; // split coincidences already listed
        if (datum.real_rank() < 3) continue;
        auto it = tabled_by_type.find(datum.complex_type);
        if (it == tabled_by_type.end()) continue;
        const RootSystem& sys = root_system(datum.complex_type);
        auto autos = diagram_automorphisms(datum.complex_type);
        auto sat_autos = satake_automorphisms(datum);
        std::set<std::set<int>> emitted;
        for (const auto& I0 : it->second) {
            for (const auto& perm : autos) {
                std::set<int> I = apply_perm(perm, I0);
                if (!compatible(datum, I)) continue;
                if (wp2_plus(sys, I).empty()) continue;
                // canonical form modulo decoration-preserving symmetry
                std::set<int> canon = I;
                for (const auto& sp : sat_autos) canon = std::min(canon, apply_perm(sp, I));
                if (emitted.insert(canon).second) out.push_back({datum, canon});
            }
        }
    }

    for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int rank = 1; rank <= max_rank; ++rank)
            if (dynkin_valid({fam, rank}))
                add_split_like(parse_form("complex" + std::string(1, fam), {rank}));

    return out;
}

// --- serialization ----------------------------------------------------------

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

Vec vec_from_json(const json& a) {
    Vec v;
    for (const auto& x : a) v.push_back(rat_parse(x.get<std::string>()));
    return v;
}

} // namespace

json certificate_to_json(const Certificate& cert) {
    json j;
    j["schema_version"] = 1;
    j["model"]["form"] = cert.model.name;
    j["model"]["params"] = cert.model.params;
    j["model"]["crossed"] = json::array();
    for (int k : cert.I) j["model"]["crossed"].push_back(k);
    if (cert.special)
        j["seed"] = "special:sl4H-P26";
    else
        j["seed"] = json::array({cert.seed_i, cert.seed_j});
    j["tau"] = vec_to_json(cert.tau);
    j["nonscaling_witness"] = vec_to_json(cert.nonscaling_witness);
    j["a0"]["alpha"] = vec_to_json(cert.a0.alpha);
    j["a0"]["nu0"] = vec_to_json(cert.a0.nu0);
    j["a0"]["R"] = json::object();
    for (const auto& [k, val] : cert.a0.r) j["a0"]["R"][std::to_string(k)] = rat_str(val);
    j["c0"]["k"] = cert.c0.k;
    j["c0"]["t"] = rat_str(cert.c0.t);
    j["checks"] = {{"nonscaling", true},
                   {"a0_ker_tau", true},
                   {"a0_ker_nu0", true},
                   {"c0_positive", true},
                   {"kt", cert.kt_ok}};
    if (cert.complex_killing_factor) {
        j["complex_reduction"]["killing_factor"] = rat_str(*cert.complex_killing_factor);
        j["complex_reduction"]["note"] =
            "model is a complex form; data computed on the split form, the Killing pairing "
            "doubles and a0, tau sharps rescale by 1/2";
    }
    return j;
}

bool reverify_certificate(const json& j, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    try {
        if (j.at("schema_version").get<int>() != 1) return reject("unknown schema_version");
        SatakeDatum datum =
            parse_form(j.at("model").at("form").get<std::string>(), {});
        std::set<int> I;
        for (const auto& k : j.at("model").at("crossed")) I.insert(k.get<int>());
        RealModel model = build_model(datum);

        Certificate recomputed;
        if (j.at("seed").is_string()) {
            if (j.at("seed").get<std::string>() != "special:sl4H-P26")
                return reject("unknown special seed tag");
            if (!is_sl4h_p26(datum, I)) return reject("special seed on the wrong model");
            recomputed = sl4h_special();
        } else {
            int si = j.at("seed")[0].get<int>();
            int sj = j.at("seed")[1].get<int>();
            ParabolicDatum pd = build_parabolic(model, I);
            std::optional<HasseElement> seed;
            for (const auto& h : wp2_plus(*model.complex_system, I))
                if (h.i == si && h.j == sj) seed = h;
            if (!seed) return reject("seed pair is not a positive-homogeneity element");
            auto cert = try_seed(model, pd, *seed);
            if (!cert) return reject("seed fails a certificate check on recomputation");
            recomputed = *cert;
        }

        // byte-stable: the serialized certificate must reproduce exactly
        if (certificate_to_json(recomputed) != j)
            return reject("recomputed certificate differs from the serialized one");

        // independent arithmetic on the serialized numbers themselves
        ParabolicDatum pd = build_parabolic(model, I);
        const auto& r = pd.restricted;
        Vec tau = vec_from_json(j.at("tau"));
        Vec a0 = vec_from_json(j.at("a0").at("alpha"));
        for (const auto& [key, val] : j.at("a0").at("R").items()) {
            int k = std::stoi(key);
            if (!pd.uncrossed.count(k)) return reject("R supported on a crossed index");
            a0[k - 1] += rat_parse(val.get<std::string>());
        }
        Vec nu0 = vec_from_json(j.at("a0").at("nu0"));
        if (r.inner(a0, tau) != 0) return reject("a0 not in ker tau");
        if (r.inner(a0, nu0) != 0) return reject("a0 not in ker nu0");
        if (!pd.restricted.is_positive(nu0) || pd.height(nu0) <= 0)
            return reject("nu0 not a positive-height restricted root");
        if (!pd.restricted.is_positive(vec_from_json(j.at("a0").at("alpha"))))
            return reject("alpha not a restricted root");
        int k = j.at("c0").at("k").get<int>();
        Rat t = rat_parse(j.at("c0").at("t").get<std::string>());
        if (!(t > 0)) return reject("c0 parameter not positive");
        if (pd.height(tau) + t * tau[k - 1] * r.gram[k - 1][k - 1] / 2 != 0)
            return reject("tau(c0) != 0");
        for (const auto& nu : pd.pos_p_plus)
            if (!(pd.height(nu) + t * nu[k - 1] * r.gram[k - 1][k - 1] / 2 > 0))
                return reject("c0 not positive on a positive-height root");
        ScalingResult sc = is_scaling(pd, tau);
        if (sc.scaling) return reject("tau is scaling");
        return true;
    } catch (const std::exception& e) {
        return reject(std::string("exception: ") + e.what());
    }
}

} // namespace parcert
