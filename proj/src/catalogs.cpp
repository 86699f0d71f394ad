#include "parcert/catalogs.hpp"

#include "parcert/embedded_tables.hpp"
#include "parcert/hasse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

using nlohmann::json;

namespace parcert {

namespace {

// --- tiny integer-affine expression language --------------------------------
//
// Expressions over the variables l, i, j: sums of terms `n`, `v`, `n*v`.
// Guards are `expr OP expr` with OP in {<, <=, ==, !=, >, >=}.

struct Env {
    long l = 0, i = 0, j = 0;
    long var(char c) const {
        switch (c) {
        case 'l': return l;
        case 'i': return i;
        case 'j': return j;
        default: throw input_error(std::string("unknown variable '") + c + "'");
        }
    }
};

long eval_expr(const std::string& s, const Env& env) {
    long total = 0;
    std::size_t pos = 0;
    int sign = 1;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        if (s[pos] == '+') {
            sign = 1;
            ++pos;
            continue;
        }
        if (s[pos] == '-') {
            sign = -1;
            ++pos;
            continue;
        }
        long coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                coef = coef * 10 + (s[pos++] - '0');
            have_coef = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            total += sign * coef * env.var(s[pos]);
            ++pos;
        } else if (have_coef) {
            total += sign * coef;
        } else {
            throw input_error("cannot parse expression '" + s + "'");
        }
        sign = 1;
    }
    return total;
}

bool eval_guard(const std::string& g, const Env& env) {
    static const char* ops[] = {"<=", ">=", "==", "!=", "<", ">"};
    for (const char* op : ops) {
        auto at = g.find(op);
        if (at == std::string::npos) continue;
        long lhs = eval_expr(g.substr(0, at), env);
        long rhs = eval_expr(g.substr(at + std::strlen(op)), env);
        std::string o(op);
        if (o == "<=") return lhs <= rhs;
        if (o == ">=") return lhs >= rhs;
        if (o == "==") return lhs == rhs;
        if (o == "!=") return lhs != rhs;
        if (o == "<") return lhs < rhs;
        return lhs > rhs;
    }
    throw input_error("cannot parse guard '" + g + "'");
}

bool eval_guards(const json& guards, const Env& env) {
    for (const auto& g : guards)
        if (!eval_guard(g.get<std::string>(), env)) return false;
    return true;
}

const json& yamaguchi_json() {
    static const json j = json::parse(embedded::kYamaguchiTable);
    return j;
}

const json& satake_json() {
    static const json j = json::parse(embedded::kSatakeCatalog);
    return j;
}

std::pair<int, int> family_range(char fam, int max_rank, const json& ranges) {
    auto r = ranges.at(std::string(1, fam));
    return {r[0].get<int>(), std::min(max_rank, r[1].get<int>())};
}

std::string pair_set_str(const std::set<std::pair<int, int>>& s) {
    std::ostringstream os;
    bool first = true;
    for (auto [a, b] : s) {
        os << (first ? "" : ",") << "(" << a << " " << b << ")";
        first = false;
    }
    return os.str();
}

std::string node_set_str(const std::set<int>& s) {
    std::ostringstream os;
    bool first = true;
    for (int k : s) {
        os << (first ? "" : ",") << k;
        first = false;
    }
    return os.str();
}

std::optional<YamaguchiInstance> instantiate_row(const json& row, const Env& env) {
    if (!eval_guards(row.at("when"), env)) return std::nullopt;
    char fam = row.at("family").get<std::string>()[0];
    YamaguchiInstance inst;
    inst.case_id = row.at("case").get<std::string>();
    inst.type = DynkinType{fam, static_cast<int>(env.l)};
    inst.ambiguous = row.value("ambiguous", false);
    inst.corrected = row.value("corrected", false);
    inst.quote = row.value("quote", "");
    for (const auto& tok : row.at("I")) {
        long node = eval_expr(tok.get<std::string>(), env);
        if (node < 1 || node > env.l) return std::nullopt;
        if (!inst.I.insert(static_cast<int>(node)).second) return std::nullopt;
    }
    const json* branch = nullptr;
    for (const auto& b : row.at("branches"))
        if (eval_guards(b.at("when"), env)) {
            branch = &b;
            break;
        }
    if (!branch) return std::nullopt;
    for (const auto& pr : branch->at("w")) {
        long a = eval_expr(pr[0].get<std::string>(), env);
        long b = eval_expr(pr[1].get<std::string>(), env);
        if (a < 1 || a > env.l || b < 1 || b > env.l || a == b)
            throw std::logic_error("table row " + inst.case_id + " instantiates bad pair");
        inst.expected.insert({static_cast<int>(a), static_cast<int>(b)});
    }
    return inst;
}

} // namespace

std::vector<YamaguchiInstance> yamaguchi_instances(int max_rank) {
    const json& table = yamaguchi_json();
    std::vector<YamaguchiInstance> out;
    for (const auto& row : table.at("rows")) {
        char fam = row.at("family").get<std::string>()[0];
        auto [lo, hi] = family_range(fam, max_rank, table.at("family_ranges"));
        std::vector<std::string> vars;
        for (const auto& v : row.at("vars")) vars.push_back(v.get<std::string>());
        for (int l = lo; l <= hi; ++l) {
            Env env;
            env.l = l;
            if (vars.empty()) {
                if (auto inst = instantiate_row(row, env)) out.push_back(*inst);
            } else if (vars.size() == 1) {
                for (int i = 1; i <= l; ++i) {
                    env.i = i;
                    if (auto inst = instantiate_row(row, env)) out.push_back(*inst);
                }
            } else {
                for (int i = 1; i <= l; ++i)
                    for (int j = 1; j <= l; ++j) {
                        env.i = i;
                        env.j = j;
                        if (auto inst = instantiate_row(row, env)) out.push_back(*inst);
                    }
            }
        }
    }
    return out;
}

std::vector<SatakeDatum> instantiate_catalog(int max_rank) {
    // The data file spells constraints over p and l; the evaluator's variable
    // set is {l,i,j}, so p rides in as i.
    auto subst_p = [](std::string s) {
        for (auto& c : s)
            if (c == 'p') c = 'i';
        return s;
    };
    std::vector<SatakeDatum> out;
    for (const auto& row : satake_json().at("rows")) {
        std::string key = row.at("key").get<std::string>();
        bool has_l = row.at("params").size() == 2;
        std::string complex_spec = row.at("complex").get<std::string>();
        char fam = complex_spec[0];
        std::string rank_expr = subst_p(complex_spec.substr(2));

        auto admissible = [&](int p, int l) {
            Env env;
            env.l = l;
            env.i = p;
            for (const auto& g : row.at("constraints"))
                if (!eval_guard(subst_p(g.get<std::string>()), env)) return false;
            long crank = eval_expr(rank_expr, env);
            return crank >= 1 && crank <= max_rank &&
                   dynkin_valid(DynkinType{fam, static_cast<int>(crank)});
        };
        for (int p = 1; p <= max_rank; ++p) {
            if (has_l) {
                for (int l = 1; l <= max_rank; ++l)
                    if (admissible(p, l)) out.push_back(catalog_row_datum(key, p, l));
            } else if (admissible(p, 0)) {
                out.push_back(catalog_row_datum(key, p, 0));
            }
        }
    }
    return out;
}

VerificationReport verify_yamaguchi(int max_rank) {
    if (max_rank < 4) throw input_error("verify yamaguchi needs --max-rank >= 4");
    VerificationReport rep;
    auto instances = yamaguchi_instances(max_rank);

    // tabled subsets per type, for the untabled sweep
    std::map<DynkinType, std::set<std::set<int>>> tabled;
    std::map<std::string, std::string> corrected_rows;

    for (const auto& inst : instances) {
        ++rep.rows_checked;
        const RootSystem& sys = root_system(inst.type);
        std::set<std::pair<int, int>> computed;
        for (const auto& h : wp2_plus(sys, inst.I)) computed.insert({h.i, h.j});
        tabled[inst.type].insert(inst.I);
        if (inst.corrected) corrected_rows[inst.case_id] = inst.quote;
        if (computed != inst.expected) {
            std::string where = inst.case_id + " " + dynkin_name(inst.type) + "/P{" +
                                node_set_str(inst.I) + "}";
            std::string detail = "computed {" + pair_set_str(computed) + "} vs tabled {" +
                                 pair_set_str(inst.expected) + "}";
            if (inst.ambiguous)
                rep.flags.push_back({where, detail + " (row marked ambiguous)"});
            else
                rep.mismatches.push_back({where, detail});
        }
    }

    for (const auto& [case_id, quote] : corrected_rows)
        rep.flags.push_back({"row " + case_id,
                             "stored cell deviates from the printed one: " + quote});

    // untabled singletons and pairs must have empty positive part unless they
    // match a tabled subset up to a diagram automorphism
    std::vector<DynkinType> types;
    for (auto& [t, _] : tabled) types.push_back(t);
    for (const auto& t : types) {
        const RootSystem& sys = root_system(t);
        auto autos = diagram_automorphisms(t);
        auto matches_tabled = [&](const std::set<int>& I) {
            for (const auto& perm : autos) {
                std::set<int> img;
                for (int k : I) img.insert(perm[k - 1]);
                if (tabled[t].count(img)) return true;
            }
            return false;
        };
        auto check_subset = [&](const std::set<int>& I) {
            if (matches_tabled(I)) return;
            auto plus = wp2_plus(sys, I);
            if (!plus.empty()) {
                std::set<std::pair<int, int>> computed;
                for (const auto& h : plus) computed.insert({h.i, h.j});
                rep.mismatches.push_back(
                    {"sweep " + dynkin_name(t) + "/P{" + node_set_str(I) + "}",
                     "untabled subset has nonempty positive part {" + pair_set_str(computed) +
                         "}"});
            }
        };
        for (int a = 1; a <= t.rank; ++a) {
            check_subset({a});
            for (int b = a + 1; b <= t.rank; ++b) check_subset({a, b});
        }
    }

    std::sort(rep.mismatches.begin(), rep.mismatches.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.where < b.where; });
    std::sort(rep.flags.begin(), rep.flags.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.where < b.where; });
    return rep;
}

namespace {

// "2L1-2Ll" etc.; nullopt when an index exceeds the restricted rank.
std::optional<Vec> eval_mu_expr(const std::string& s, int rank, int p, int l) {
    Vec out = zero_vec(rank);
    std::size_t pos = 0;
    int sign = 1;
    while (pos < s.size()) {
        char c = s[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c == '+') {
            sign = 1;
            ++pos;
            continue;
        }
        if (c == '-') {
            sign = -1;
            ++pos;
            continue;
        }
        long coef = 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                coef = coef * 10 + (s[pos++] - '0');
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        if (pos >= s.size() || s[pos] != 'L')
            throw input_error("cannot parse mu expression '" + s + "'");
        ++pos;
        long idx = 0;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                idx = idx * 10 + (s[pos++] - '0');
        } else if (pos < s.size() && (s[pos] == 'p' || s[pos] == 'l')) {
            idx = (s[pos] == 'p') ? p : l;
            ++pos;
        } else {
            throw input_error("cannot parse mu expression '" + s + "'");
        }
        if (idx < 1 || idx > rank) return std::nullopt;
        out[idx - 1] += sign * coef;
        sign = 1;
    }
    return out;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
}

} // namespace

VerificationReport verify_satake(int max_rank) {
    if (max_rank < 4) throw input_error("verify satake needs --max-rank >= 4");
    VerificationReport rep;
    const json& table = satake_json();

    std::map<std::string, const json*> row_by_key;
    for (const auto& row : table.at("rows"))
        row_by_key[row.at("key").get<std::string>()] = &row;

    for (const auto& datum : instantiate_catalog(max_rank)) {
        ++rep.rows_checked;
        const json& row = *row_by_key.at(datum.row_key);
        RealModel model = build_model(datum);
        const auto& r = model.restricted;
        std::string where = datum.name + " [" + datum.row_key + "]";

        // real rank = number of restriction classes
        int classes = 0;
        for (int c : datum.restriction_class) classes = std::max(classes, c);
        if (classes != r.rank) {
            rep.mismatches.push_back({where, "restriction class count differs from tabled rank"});
            continue;
        }

        // restricted Cartan integers recomputed from root strings in the image
        Mat derived = derived_restricted_cartan(r);
        Mat tabled_cartan = cartan_matrix(r.type);
        if (derived != tabled_cartan) {
            rep.mismatches.push_back({where, "derived restricted Cartan matrix differs from " +
                                                 dynkin_name(r.type)});
            continue;
        }

        if (!restricted_integrality_audit(r)) {
            rep.mismatches.push_back({where, "restricted pairing integrality audit failed"});
            continue;
        }

        // restricted highest root, in restricted fundamental coordinates
        Vec computed = r.to_fundamental(r.mu_restricted);
        int p = datum.params[0];
        int l = datum.params.size() > 1 ? datum.params[1] : 0;
        auto tabled_mu = eval_mu_expr(row.at("mu").get<std::string>(), r.rank, p, l);
        bool flagged = row.value("mu_flag", false);
        if (!flagged && row.contains("mu_when")) {
            Env env;
            env.i = p;
            env.l = l;
            for (const auto& g : row.at("mu_when")) {
                std::string gs = g.get<std::string>();
                for (auto& ch : gs)
                    if (ch == 'p') ch = 'i';
                if (!eval_guard(gs, env)) flagged = true;
            }
        }
        if (flagged) {
            std::string note = row.value("flag_note", "tabled value flagged");
            rep.flags.push_back({where, "tabled mu|_a '" + row.at("mu").get<std::string>() +
                                            "' flagged; computed " + vec_str(computed) +
                                            " in restricted fundamental coordinates (" + note +
                                            ")"});
        } else if (!tabled_mu || computed != *tabled_mu) {
            rep.mismatches.push_back({where, "mu|_a computed " + vec_str(computed) +
                                                 " vs tabled '" +
                                                 row.at("mu").get<std::string>() + "'"});
        }
    }

    std::sort(rep.mismatches.begin(), rep.mismatches.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.where < b.where; });
    std::sort(rep.flags.begin(), rep.flags.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.where < b.where; });
    return rep;
}

} // namespace parcert
