#include "parcert/catalogs.hpp"
#include "parcert/certify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace parcert;

namespace {

constexpr int kSchemaVersion = 1;

// Denominator-cleared view of a rational vector: integer entries plus the
// cleared common denominator, for diffing against displayed identities.
std::pair<std::vector<Int>, Int> clear_denominators(const Vec& v) {
    Int lcm = 1;
    for (const auto& x : v) {
        Int d = denominator(x);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> cleared;
    for (const auto& x : v) cleared.push_back(numerator(x) * (lcm / denominator(x)));
    return {cleared, lcm};
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

json mat_json(const Mat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_json(row));
    return a;
}

std::string tsv_vec(const Vec& v) {
    auto [cleared, den] = clear_denominators(v);
    std::string out;
    for (std::size_t k = 0; k < cleared.size(); ++k) {
        if (k) out += "\t";
        out += cleared[k].str();
    }
    if (den != 1) out += "\tx 1/" + den.str();
    return out;
}

void emit(const json& j, const std::string& format,
          const std::function<void()>& tsv_printer) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        tsv_printer();
}

int run_rootsys(const std::string& type_str, int rank, const std::string& format) {
    const RootSystem& sys = root_system(make_dynkin(
        static_cast<char>(std::toupper(static_cast<unsigned char>(type_str[0]))), rank));
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = dynkin_name(sys.type);
    j["rank"] = sys.rank;
    j["cartan"] = mat_json(sys.cartan);
    {
        Vec flat;
        for (const auto& row : sys.gram)
            for (const auto& x : row) flat.push_back(x);
        auto [cleared, den] = clear_denominators(flat);
        json g;
        g["denominator"] = den.str();
        g["entries"] = json::array();
        for (int a = 0; a < sys.rank; ++a) {
            json row = json::array();
            for (int b = 0; b < sys.rank; ++b)
                row.push_back(cleared[a * sys.rank + b].str());
            g["entries"].push_back(row);
        }
        j["gram_cleared"] = g;
    }
    j["positive_count"] = sys.positives.size();
    j["positives"] = json::array();
    for (const auto& r : sys.positives) j["positives"].push_back(vec_json(r));
    j["mu"] = vec_json(sys.mu);
    j["mu_fundamental"] = vec_json(sys.to_fundamental(sys.mu));
    j["rho"] = vec_json(sys.rho);
    emit(j, format, [&] {
        std::cout << "type\t" << dynkin_name(sys.type) << "\n";
        std::cout << "positive_count\t" << sys.positives.size() << "\n";
        for (const auto& r : sys.positives) std::cout << "root\t" << tsv_vec(r) << "\n";
        std::cout << "mu\t" << tsv_vec(sys.mu) << "\n";
        std::cout << "rho\t" << tsv_vec(sys.rho) << "\n";
    });
    return 0;
}

json restricted_json(const RealModel& model) {
    const auto& r = model.restricted;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["form"] = model.satake.name;
    j["params"] = model.satake.params;
    j["complex_type"] = dynkin_name(model.satake.complex_type);
    j["compact_nodes"] = json(model.satake.compact_nodes);
    {
        json arrows = json::array();
        for (auto [a, b] : model.satake.arrow_pairs)
            if (a < b) arrows.push_back(json::array({a, b}));
        j["arrow_pairs"] = arrows;
    }
    j["restricted_type"] = dynkin_name(r.type);
    j["real_rank"] = r.rank;
    j["restricted_gram"] = mat_json(r.gram);
    j["restricted_positives"] = json::array();
    for (const auto& v : r.positives) j["restricted_positives"].push_back(vec_json(v));
    j["mu_restricted"] = vec_json(r.mu_restricted);
    j["mu_restricted_fundamental"] = vec_json(r.to_fundamental(r.mu_restricted));
    return j;
}

int run_restrict(const std::string& form, const std::vector<int>& params,
                 const std::string& format) {
    RealModel model = build_model(parse_form(form, params));
    json j = restricted_json(model);
    emit(j, format, [&] {
        const auto& r = model.restricted;
        std::cout << "form\t" << model.satake.name << "\n";
        std::cout << "restricted_type\t" << dynkin_name(r.type) << "\n";
        std::cout << "real_rank\t" << r.rank << "\n";
        for (const auto& row : r.gram) std::cout << "gram\t" << tsv_vec(row) << "\n";
        for (const auto& v : r.positives) std::cout << "pos\t" << tsv_vec(v) << "\n";
        std::cout << "mu_restricted\t" << tsv_vec(r.mu_restricted) << "\n";
        std::cout << "mu_restricted_fund\t" << tsv_vec(r.to_fundamental(r.mu_restricted))
                  << "\n";
    });
    return 0;
}

int run_parabolic(const std::string& form, const std::vector<int>& params,
                  const std::vector<int>& crossed, const std::string& format) {
    RealModel model = build_model(parse_form(form, params));
    std::set<int> I(crossed.begin(), crossed.end());
    ParabolicDatum pd = build_parabolic(model, I);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["form"] = model.satake.name;
    j["crossed"] = json(pd.I);
    j["crossed_restricted"] = json(pd.I_hat);
    j["uncrossed_restricted"] = json(pd.uncrossed);
    j["uncrossed_count"] = pd.uncrossed.size();
    j["pos_p_plus"] = json::array();
    for (const auto& v : pd.pos_p_plus) j["pos_p_plus"].push_back(vec_json(v));
    j["levi_positives"] = json::array();
    for (const auto& v : pd.levi_pos) j["levi_positives"].push_back(vec_json(v));
    emit(j, format, [&] {
        std::cout << "form\t" << model.satake.name << "\n";
        std::cout << "uncrossed_count\t" << pd.uncrossed.size() << "\n";
        for (const auto& v : pd.pos_p_plus) std::cout << "p_plus\t" << tsv_vec(v) << "\n";
        for (const auto& v : pd.levi_pos) std::cout << "levi\t" << tsv_vec(v) << "\n";
    });
    return 0;
}

int run_wp2(const std::string& type_str, int rank, const std::vector<int>& crossed,
            const std::string& format) {
    const RootSystem& sys = root_system(make_dynkin(
        static_cast<char>(std::toupper(static_cast<unsigned char>(type_str[0]))), rank));
    std::set<int> I(crossed.begin(), crossed.end());
    auto all = wp2(sys, I);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = dynkin_name(sys.type);
    j["crossed"] = json(I);
    j["elements"] = json::array();
    for (const auto& h : all) {
        json e;
        e["pair"] = json::array({h.i, h.j});
        e["w_dot_mu"] = vec_json(h.w_dot_mu);
        e["w_dot_mu_fundamental"] = vec_json(sys.to_fundamental(h.w_dot_mu));
        e["homogeneity"] = rat_str(h.homogeneity);
        e["positive"] = h.homogeneity > 0;
        j["elements"].push_back(e);
    }
    emit(j, format, [&] {
        for (const auto& h : all) {
            std::cout << "(" << h.i << " " << h.j << ")\t" << (h.homogeneity > 0 ? "+" : "0")
                      << "\thom=" << h.homogeneity << "\tw.mu\t" << tsv_vec(h.w_dot_mu)
                      << "\tfund\t" << tsv_vec(sys.to_fundamental(h.w_dot_mu)) << "\n";
        }
    });
    return 0;
}

int run_verify(const std::string& which, int max_rank, const std::string& format) {
    VerificationReport rep;
    if (which == "yamaguchi")
        rep = verify_yamaguchi(max_rank);
    else if (which == "satake")
        rep = verify_satake(max_rank);
    else
        throw input_error("verify takes 'yamaguchi' or 'satake'");
    json j;
    j["schema_version"] = kSchemaVersion;
    j["table"] = which;
    j["max_rank"] = max_rank;
    j["rows_checked"] = rep.rows_checked;
    j["mismatches"] = json::array();
    for (const auto& m : rep.mismatches)
        j["mismatches"].push_back({{"where", m.where}, {"detail", m.detail}});
    j["flags"] = json::array();
    for (const auto& f : rep.flags) j["flags"].push_back({{"where", f.where}, {"detail", f.detail}});
    j["verified"] = rep.verified();
    emit(j, format, [&] {
        std::cout << "table\t" << which << "\nrows_checked\t" << rep.rows_checked << "\n";
        for (const auto& m : rep.mismatches)
            std::cout << "MISMATCH\t" << m.where << "\t" << m.detail << "\n";
        for (const auto& f : rep.flags)
            std::cout << "flag\t" << f.where << "\t" << f.detail << "\n";
        std::cout << "verified\t" << (rep.verified() ? "yes" : "no") << "\n";
    });
    return rep.verified() ? 0 : 1;
}

int run_certify(const std::string& form, const std::vector<int>& params,
                const std::vector<int>& crossed, bool all, int max_rank,
                const std::string& recheck_path, const std::string& format) {
    if (!recheck_path.empty()) {
        std::ifstream in(recheck_path);
        if (!in) throw input_error("cannot open " + recheck_path);
        json j = json::parse(in);
        json items = j.is_array() ? j : (j.contains("certificates") ? j["certificates"]
                                                                    : json::array({j}));
        int failures = 0;
        for (const auto& item : items) {
            std::string why;
            bool ok = reverify_certificate(item, &why);
            std::cout << (ok ? "ok" : "FAIL") << "\t"
                      << item.at("model").at("form").get<std::string>();
            if (!ok) std::cout << "\t" << why;
            std::cout << "\n";
            if (!ok) ++failures;
        }
        return failures == 0 ? 0 : 1;
    }
    if (all) {
        json out;
        out["schema_version"] = kSchemaVersion;
        out["max_rank"] = max_rank;
        out["certificates"] = json::array();
        for (const auto& [datum, I] : enumerate_models(max_rank)) {
            RealModel model = build_model(datum);
            Certificate cert = certify_model(model, I);
            out["certificates"].push_back(certificate_to_json(cert));
        }
        out["count"] = out["certificates"].size();
        emit(out, format, [&] {
            for (const auto& c : out["certificates"]) {
                std::cout << c.at("model").at("form").get<std::string>() << "\tP{";
                bool first = true;
                for (const auto& k : c.at("model").at("crossed")) {
                    std::cout << (first ? "" : ",") << k.get<int>();
                    first = false;
                }
                std::cout << "}\tseed ";
                if (c.at("seed").is_string())
                    std::cout << c.at("seed").get<std::string>();
                else
                    std::cout << "(" << c["seed"][0].get<int>() << " " << c["seed"][1].get<int>()
                              << ")";
                std::cout << "\tok\n";
            }
        });
        return 0;
    }
    if (form.empty()) throw input_error("certify needs --form or --all");
    RealModel model = build_model(parse_form(form, params));
    std::set<int> I(crossed.begin(), crossed.end());
    Certificate cert = certify_model(model, I);
    json j = certificate_to_json(cert);
    emit(j, format, [&] {
        std::cout << "form\t" << cert.model.name << "\n";
        std::cout << "tau\t" << tsv_vec(cert.tau) << "\n";
        std::cout << "nonscaling_witness\t" << tsv_vec(cert.nonscaling_witness) << "\n";
        std::cout << "a0\t" << tsv_vec(cert.a0.a0_flat) << "\n";
        std::cout << "nu0\t" << tsv_vec(cert.a0.nu0) << "\n";
        std::cout << "c0\tk=" << cert.c0.k << "\tt=" << cert.c0.t << "\n";
        if (cert.special)
            std::cout << "seed\tspecial:sl4H-P26\n";
        else
            std::cout << "seed\t(" << cert.seed_i << " " << cert.seed_j << ")\n";
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of parabolic model geometries: restricted root systems, "
                 "degree-two Hasse data, table verification and essentiality certificates"};
    app.require_subcommand(1);
    std::string format = "json";
    std::string type_str;
    int rank = 0;
    std::string form;
    std::vector<int> params, crossed;
    int max_rank = 9;
    bool all = false;
    std::string which, recheck_path;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format)
            ->check(CLI::IsMember({"json", "tsv"}))
            ->description("output format (default json)");
    };

    auto* c_root = app.add_subcommand("rootsys", "build a complex root system");
    add_format(c_root);
    c_root->add_option("--type", type_str)->required();
    c_root->add_option("--rank", rank)->required();

    auto* c_res = app.add_subcommand("restrict", "restricted root system of a real form");
    add_format(c_res);
    c_res->add_option("--form", form)->required();
    c_res->add_option("--params", params)->delimiter(',');

    auto* c_par = app.add_subcommand("parabolic", "height partition for a crossed set");
    add_format(c_par);
    c_par->add_option("--form", form)->required();
    c_par->add_option("--params", params)->delimiter(',');
    c_par->add_option("--crossed", crossed)->delimiter(',')->required();

    auto* c_wp2 = app.add_subcommand("wp2", "length-two coset representatives and homogeneities");
    add_format(c_wp2);
    c_wp2->add_option("--type", type_str)->required();
    c_wp2->add_option("--rank", rank)->required();
    c_wp2->add_option("--crossed", crossed)->delimiter(',')->required();

    auto* c_ver = app.add_subcommand("verify", "recompute a stored table and diff");
    add_format(c_ver);
    c_ver->add_option("table", which)->required()->check(CLI::IsMember({"yamaguchi", "satake"}));
    c_ver->add_option("--max-rank", max_rank)->capture_default_str();

    auto* c_cert = app.add_subcommand("certify", "emit or recheck essentiality certificates");
    add_format(c_cert);
    c_cert->add_option("--form", form);
    c_cert->add_option("--params", params)->delimiter(',');
    c_cert->add_option("--crossed", crossed)->delimiter(',');
    c_cert->add_flag("--all", all, "sweep every enumerated model");
    c_cert->add_option("--max-rank", max_rank)->capture_default_str();
    c_cert->add_option("--recheck", recheck_path, "re-verify certificates from a JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_root->parsed()) return run_rootsys(type_str, rank, format);
        if (c_res->parsed()) return run_restrict(form, params, format);
        if (c_par->parsed()) return run_parabolic(form, params, crossed, format);
        if (c_wp2->parsed()) return run_wp2(type_str, rank, crossed, format);
        if (c_ver->parsed()) return run_verify(which, max_rank, format);
        if (c_cert->parsed())
            return run_certify(form, params, crossed, all, max_rank, recheck_path, format);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const classification_violation& e) {
        std::cerr << "classification violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
