#include "parcert/realform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace parcert {

namespace {

std::string canon_split_name(const DynkinType& t) { return "split(" + dynkin_name(t) + ")"; }
std::string canon_complex_name(const DynkinType& t) { return "complex(" + dynkin_name(t) + ")"; }

SatakeDatum make_split_datum(const DynkinType& t, bool as_complex) {
    SatakeDatum d;
    d.name = as_complex ? canon_complex_name(t) : canon_split_name(t);
    d.row_key = as_complex ? "complex" : "split";
    d.params = {t.rank};
    d.complex_type = t;
    d.restricted_type = t;
    d.restriction_class.resize(t.rank);
    for (int k = 1; k <= t.rank; ++k) d.restriction_class[k - 1] = k;
    return d;
}

DynkinType rank1_safe(char family, int rank) {
    // B1, C1 and D2/D3 never arise here; rank-one restricted diagrams are A1.
    if (rank == 1) return make_dynkin('A', 1);
    return make_dynkin(family, rank);
}

void set_classes(SatakeDatum& d, const std::map<int, int>& cls) {
    d.restriction_class.assign(d.complex_type.rank, 0);
    for (auto [node, idx] : cls) d.restriction_class[node - 1] = idx;
}

} // namespace

SatakeDatum catalog_lookup(const std::string& name, const std::vector<int>& params) {
    return parse_form(name, params);
}

// --- catalog rows -----------------------------------------------------------

namespace {

SatakeDatum make_slH(int p) {
    if (p < 1) throw input_error("sl(p+1,H) needs p >= 1");
    SatakeDatum d;
    d.name = "sl(" + std::to_string(p + 1) + ",H)";
    d.row_key = "slH";
    d.params = {p};
    d.complex_type = make_dynkin('A', 2 * p + 1);
    std::map<int, int> cls;
    for (int k = 1; k <= 2 * p + 1; k += 2) d.compact_nodes.insert(k);
    for (int k = 1; k <= p; ++k) cls[2 * k] = k;
    d.restricted_type = rank1_safe('A', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_su(int p, int q) {
    if (p < 1 || q < p) throw input_error("su(p,q) needs 1 <= p <= q");
    const int l = p + q - 1;
    if (l < 1) throw input_error("su(p,q): rank too small");
    SatakeDatum d;
    d.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
    d.row_key = (p == q) ? "su_pp" : "su_pq";
    d.params = (p == q) ? std::vector<int>{p} : std::vector<int>{p, l};
    d.complex_type = make_dynkin('A', l);
    std::map<int, int> cls;
    for (int k = p + 1; k <= l - p; ++k) d.compact_nodes.insert(k);
    for (int k = 1; k <= p; ++k) {
        cls[k] = k;
        if (l + 1 - k != k) {
            cls[l + 1 - k] = k;
            d.arrow_pairs[k] = l + 1 - k;
            d.arrow_pairs[l + 1 - k] = k;
        }
    }
    d.restricted_type = (p == q) ? rank1_safe('C', p) : rank1_safe('B', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_so_odd(int p, int l) {
    // so(p, 2l+1-p), complex B_l; p = l is the split coincidence
    if (!(p >= 1 && p <= l)) throw input_error("so(p,2l+1-p) needs 1 <= p <= l");
    SatakeDatum d;
    d.name = "so(" + std::to_string(p) + "," + std::to_string(2 * l + 1 - p) + ")";
    d.row_key = "so_odd";
    d.params = {p, l};
    d.complex_type = make_dynkin('B', l);
    std::map<int, int> cls;
    for (int k = p + 1; k <= l; ++k) d.compact_nodes.insert(k);
    for (int k = 1; k <= p; ++k) cls[k] = k;
    d.restricted_type = rank1_safe('B', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_sp(int p, int q) {
    if (p < 1 || q < p) throw input_error("sp(p,q) needs 1 <= p <= q");
    const int l = p + q;
    SatakeDatum d;
    d.name = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
    d.row_key = (p == q) ? "sp_pp" : "sp_pq";
    d.params = (p == q) ? std::vector<int>{p} : std::vector<int>{p, l};
    d.complex_type = make_dynkin('C', l);
    std::map<int, int> cls;
    for (int k = 1; k <= 2 * p; k += 2) d.compact_nodes.insert(k);
    for (int k = 2 * p + 1; k <= l; ++k) d.compact_nodes.insert(k);
    for (int k = 1; k <= p; ++k) cls[2 * k] = k;
    d.restricted_type = (p == q) ? rank1_safe('C', p) : rank1_safe('B', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_so_even(int p, int l) {
    // so(p, 2l-p), complex D_l
    if (!(p >= 1 && p <= l - 2)) throw input_error("so(p,2l-p) needs 1 <= p <= l-2");
    SatakeDatum d;
    d.name = "so(" + std::to_string(p) + "," + std::to_string(2 * l - p) + ")";
    d.row_key = "so_even";
    d.params = {p, l};
    d.complex_type = make_dynkin('D', l);
    std::map<int, int> cls;
    for (int k = p + 1; k <= l; ++k) d.compact_nodes.insert(k);
    for (int k = 1; k <= p; ++k) cls[k] = k;
    d.restricted_type = rank1_safe('B', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_so_pp2(int p) {
    // so(p, p+2) = so(l-1, l+1), complex D_l with l = p+1
    if (p < 3) throw input_error("so(p,p+2) needs p >= 3");
    const int l = p + 1;
    SatakeDatum d;
    d.name = "so(" + std::to_string(p) + "," + std::to_string(p + 2) + ")";
    d.row_key = "so_pp2";
    d.params = {p};
    d.complex_type = make_dynkin('D', l);
    std::map<int, int> cls;
    for (int k = 1; k <= l - 2; ++k) cls[k] = k;
    cls[l - 1] = p;
    cls[l] = p;
    d.arrow_pairs[l - 1] = l;
    d.arrow_pairs[l] = l - 1;
    d.restricted_type = make_dynkin('B', p);
    set_classes(d, cls);
    return d;
}

SatakeDatum make_soStar(int n) {
    // so*(2n') with 2n' = n; rows so*(4p) and so*(4p+2)
    if (n % 2 != 0) throw input_error("so*(n) needs n even");
    const int half = n / 2; // complex type D_half
    if (half < 4) throw input_error("so*(n) needs n >= 8");
    SatakeDatum d;
    d.name = "so*(" + std::to_string(n) + ")";
    d.complex_type = make_dynkin('D', half);
    std::map<int, int> cls;
    if (half % 2 == 0) {
        const int p = half / 2;
        d.row_key = "soStar4p";
        d.params = {p};
        for (int k = 1; k <= 2 * p - 1; k += 2) d.compact_nodes.insert(k);
        for (int k = 1; k <= p; ++k) cls[2 * k] = k;
        d.restricted_type = make_dynkin('C', p);
    } else {
        const int p = (half - 1) / 2;
        if (p < 2) throw input_error("so*(n) needs rank >= 2");
        d.row_key = "soStar4p2";
        d.params = {p};
        for (int k = 1; k <= 2 * p - 1; k += 2) d.compact_nodes.insert(k);
        for (int k = 1; k < p; ++k) cls[2 * k] = k;
        cls[2 * p] = p;
        cls[2 * p + 1] = p;
        d.arrow_pairs[2 * p] = 2 * p + 1;
        d.arrow_pairs[2 * p + 1] = 2 * p;
        d.restricted_type = make_dynkin('B', p);
    }
    set_classes(d, cls);
    return d;
}

SatakeDatum make_so(int p, int q) {
    if (p < 1 || p > q) throw input_error("so(p,q) needs 1 <= p <= q");
    const int total = p + q;
    if (total % 2 == 1) {
        const int l = (total - 1) / 2;
        if (p == l) return make_split_datum(make_dynkin('B', l), false);
        return make_so_odd(p, l);
    }
    const int l = total / 2;
    if (p == l) return make_split_datum(make_dynkin('D', l), false);
    if (q == p + 2) return make_so_pp2(p);
    return make_so_even(p, l);
}

struct ParsedName {
    std::string head;      // lowercase letters and '*'
    std::vector<int> args; // numbers found inside the name
    bool has_H = false;
};

ParsedName chop_name(const std::string& raw) {
    ParsedName out;
    std::string token;
    auto flush_number = [&]() {
        if (!token.empty()) {
            out.args.push_back(std::stoi(token));
            token.clear();
        }
    };
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            token += c;
            continue;
        }
        flush_number();
        if (c == '(' || c == ')' || c == ',') continue;
        if (c == 'H' || c == 'h') {
            out.has_H = true;
            continue;
        }
        if (c == '*') {
            out.head += '*';
            continue;
        }
        out.head += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    flush_number();
    return out;
}

} // namespace

SatakeDatum parse_form(const std::string& name, const std::vector<int>& params) {
    // generic catalog row names, parameters supplied separately
    {
        std::string flat;
        for (char ch : name)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                flat += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        static const std::map<std::string, std::pair<std::string, std::size_t>> generic = {
            {"sl(p+1,h)", {"slH", 1}},      {"su(p,l+1-p)", {"su_pq", 2}},
            {"su(p,p)", {"su_pp", 1}},      {"so(p,2l+1-p)", {"so_odd", 2}},
            {"sp(p,l-p)", {"sp_pq", 2}},    {"sp(p,p)", {"sp_pp", 1}},
            {"so(p,2l-p)", {"so_even", 2}}, {"so(p,p+2)", {"so_pp2", 1}},
            {"so*(4p)", {"soStar4p", 1}},   {"so*(4p+2)", {"soStar4p2", 1}},
        };
        auto it = generic.find(flat);
        if (it != generic.end()) {
            if (params.size() != it->second.second)
                throw input_error("form '" + name + "' needs " +
                                  std::to_string(it->second.second) + " parameter(s)");
            int p = params[0];
            int l = params.size() > 1 ? params[1] : 0;
            return catalog_row_datum(it->second.first, p, l);
        }
    }
    ParsedName pn = chop_name(name);
    std::vector<int> args = pn.args;
    args.insert(args.end(), params.begin(), params.end());

    auto need = [&](std::size_t n, const std::string& what) {
        if (args.size() != n)
            throw input_error("form '" + name + "' needs " + what);
    };

    if (pn.head.size() == 6 && pn.head.rfind("split", 0) == 0) {
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(pn.head[5])));
        need(1, "a rank, e.g. split(B3)");
        return make_split_datum(make_dynkin(fam, args[0]), false);
    }
    if (pn.head.size() == 8 && pn.head.rfind("complex", 0) == 0) {
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(pn.head[7])));
        need(1, "a rank, e.g. complex(A3)");
        return make_split_datum(make_dynkin(fam, args[0]), true);
    }
    if (pn.head == "sl" && pn.has_H) {
        need(1, "one parameter m for sl(m,H)");
        if (args[0] < 2) throw input_error("sl(m,H) needs m >= 2");
        return make_slH(args[0] - 1);
    }
    if (pn.head == "su") {
        need(2, "two parameters p,q");
        if (args[0] > args[1])
            throw input_error("su(p,q) needs p <= q; write su(" + std::to_string(args[1]) +
                              "," + std::to_string(args[0]) + ")");
        return make_su(args[0], args[1]);
    }
    if (pn.head == "so") {
        need(2, "two parameters p,q");
        if (args[0] > args[1])
            throw input_error("so(p,q) needs p <= q; write so(" + std::to_string(args[1]) +
                              "," + std::to_string(args[0]) + ")");
        return make_so(args[0], args[1]);
    }
    if (pn.head == "sp") {
        need(2, "two parameters p,q");
        if (args[0] > args[1])
            throw input_error("sp(p,q) needs p <= q; write sp(" + std::to_string(args[1]) +
                              "," + std::to_string(args[0]) + ")");
        return make_sp(args[0], args[1]);
    }
    if (pn.head == "so*" || pn.head == "sostar") {
        need(1, "one parameter n for so*(n)");
        return make_soStar(args[0]);
    }
    throw input_error("unknown form '" + name + "'");
}

SatakeDatum catalog_row_datum(const std::string& key, int p, int l) {
    if (key == "slH") return make_slH(p);
    if (key == "su_pq") return make_su(p, l + 1 - p);
    if (key == "su_pp") return make_su(p, p);
    if (key == "so_odd") return make_so_odd(p, l);
    if (key == "sp_pq") return make_sp(p, l - p);
    if (key == "sp_pp") return make_sp(p, p);
    if (key == "so_even") return make_so_even(p, l);
    if (key == "so_pp2") return make_so_pp2(p);
    if (key == "soStar4p") return make_soStar(4 * p);
    if (key == "soStar4p2") return make_soStar(4 * p + 2);
    throw input_error("unknown catalog row '" + key + "'");
}

// --- restriction ------------------------------------------------------------

Vec restrict_vec(const SatakeDatum& datum, const Vec& v) {
    Vec out = zero_vec(datum.real_rank());
    for (int k = 1; k <= datum.complex_type.rank; ++k) {
        int cls = datum.restriction_class[k - 1];
        if (cls > 0) out[cls - 1] += v[k - 1];
    }
    return out;
}

Vec RestrictedRootSystem::to_fundamental(const Vec& v) const {
    Vec gv = mat_vec(gram, v);
    Vec f(rank);
    for (int k = 0; k < rank; ++k) f[k] = 2 * gv[k] / gram[k][k];
    return f;
}

Vec RestrictedRootSystem::from_fundamental(const Vec& f) const {
    Mat m(rank, Vec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = 2 * gram[i][j] / gram[i][i];
    return solve_square(m, f);
}

bool RestrictedRootSystem::is_positive(const Vec& v) const {
    return contains(v) && coord_sum(v) > 0;
}

RealModel build_model(const SatakeDatum& datum) {
    RealModel m;
    m.satake = datum;
    m.complex_system = &root_system(datum.complex_type);

    RestrictedRootSystem r;
    r.type = datum.restricted_type;
    r.rank = datum.real_rank();
    r.gram = gram_matrix(datum.restricted_type);

    std::set<Vec> pos_image;
    for (const auto& theta : m.complex_system->positives) {
        Vec img = restrict_vec(datum, theta);
        if (!is_zero(img)) pos_image.insert(img);
    }
    r.positives.assign(pos_image.begin(), pos_image.end());
    std::sort(r.positives.begin(), r.positives.end(), height_lex_less);
    for (const auto& v : r.positives) {
        r.all_restricted.insert(v);
        r.all_restricted.insert(neg(v));
    }
    r.mu_restricted = restrict_vec(datum, m.complex_system->mu);
    m.restricted = std::move(r);
    return m;
}

RealModel split_model(const DynkinType& t) { return build_model(make_split_datum(t, false)); }

int real_rank(const RealModel& model) { return model.restricted.rank; }

Mat derived_restricted_cartan(const RestrictedRootSystem& r) {
    Mat c(r.rank, Vec(r.rank, Rat(0)));
    for (int j = 1; j <= r.rank; ++j) {
        Vec bj = zero_vec(r.rank);
        bj[j - 1] = 1;
        for (int k = 1; k <= r.rank; ++k) {
            if (k == j) {
                c[j - 1][k - 1] = 2;
                continue;
            }
            Vec bk = zero_vec(r.rank);
            bk[k - 1] = 1;
            int up = 0;
            Vec probe = add(bk, bj);
            while (r.contains(probe)) {
                ++up;
                probe = add(probe, bj);
            }
            c[j - 1][k - 1] = -up;
        }
    }
    return c;
}

bool restricted_integrality_audit(const RestrictedRootSystem& r) {
    // roots are small integer vectors; scale the gram to integers so the
    // whole quadratic sweep runs in machine arithmetic (the scale cancels in
    // 2<x,y>/<y,y>)
    long scale = 1;
    for (const auto& row : r.gram)
        for (const auto& e : row) {
            long d = static_cast<long>(denominator(e));
            scale = scale / std::gcd(scale, d) * d;
        }
    const int n = r.rank;
    std::vector<std::vector<long>> g(n, std::vector<long>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g[a][b] = rat_to_long(scale * r.gram[a][b]);

    std::vector<std::vector<long>> roots;
    for (const auto& v : r.positives) {
        std::vector<long> iv(n);
        for (int a = 0; a < n; ++a) iv[a] = rat_to_long(v[a]);
        roots.push_back(iv);
    }
    // signs drop out of the integrality condition, so positives suffice
    for (const auto& y : roots) {
        std::vector<long> gy(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) gy[a] += g[a][b] * y[b];
        long nrm = 0;
        for (int a = 0; a < n; ++a) nrm += y[a] * gy[a];
        for (const auto& x : roots) {
            long dotv = 0;
            for (int a = 0; a < n; ++a) dotv += x[a] * gy[a];
            if ((2 * dotv) % nrm != 0) return false;
        }
    }
    return true;
}

} // namespace parcert
