// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fillcert/certifier.hpp"
#include "fillcert/errors.hpp"
#include "fillcert/fingers.hpp"
#include "fillcert/nilpotent.hpp"
#include "fillcert/parallel.hpp"

using namespace fillcert;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

// "(1-x)^2(1-y)" -> {2,1}
MultiIndex parse_multiplier(const std::string& text, int dim) {
    MultiIndex alpha(dim, 0);
    size_t i = 0;
    while (i < text.size()) {
        if (text.compare(i, 3, "(1-") != 0 || i + 5 > text.size()) throw InvalidInput("bad multiplier " + text);
        const int v = text[i + 3] - 'x';
        i += 5;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            size_t used = 0;
            e = std::stoi(text.substr(i + 1), &used);
            i += 1 + used;
        }
        alpha.at(v) += e;
    }
    return alpha;
}

// A column label written with any multiplier denotes the same element as ours
// when both project to the same class in the line's quotient ring.
bool same_column(const std::string& printed, const std::string& ours, const LinkSpec& link, int k) {
    const std::string a = strip(printed), b = strip(ours);
    const size_t pa = a.rfind("l_"), pb = b.rfind("l_");
    if (a.substr(pa) != b.substr(pb)) return false;
    const LineQuotient q = line_quotient(link.components[link.index_of(a.substr(pa))].direction);
    const AugClass x = q.project_class(parse_multiplier(a.substr(0, pa), link.dim));
    const AugClass y = q.project_class(parse_multiplier(b.substr(0, pb), link.dim));
    return x == y && x.degree() == k;
}

Outcome golden_table(int k, const std::vector<std::vector<long>>& expected, const std::vector<std::string>& rows,
                     const std::vector<std::string>& cols) {
    Outcome o;
    const auto t0 = Clock::now();
    const LinkSpec link = standard_link(k, 2);
    const LinkingMatrix m = build_matrix(k, link, MatrixMode::ClosedForm);
    const double t = seconds_since(t0);
    std::ostringstream d;
    const IntMatrix want = IntMatrix::from_rows(expected);
    if (!(m.entries == want)) {
        o.pass = false;
        for (size_t r = 0; r < want.rows(); ++r)
            for (size_t c = 0; c < want.cols(); ++c)
                if (m.entries(r, c) != want(r, c))
                    d << " entry (" << m.rows[r] << ", " << m.cols[c] << ") is " << m.entries(r, c).get_str()
                      << ", table has " << want(r, c).get_str() << ";";
    }
    for (size_t r = 0; r < rows.size(); ++r)
        if (strip(m.rows[r]) != strip(rows[r])) {
            o.pass = false;
            d << " row label " << m.rows[r] << " vs " << rows[r] << ";";
        }
    for (size_t c = 0; c < cols.size(); ++c)
        if (!same_column(cols[c], m.cols[c], link, k)) {
            o.pass = false;
            d << " column label " << m.cols[c] << " vs " << cols[c] << ";";
        }
    if (t >= 1.0) {
        o.pass = false;
        d << " too slow;";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " k=%d %.3fs", k, t);
    o.detail = buf + d.str();
    return o;
}

Outcome criterion1() {
    const Outcome a = golden_table(1, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, {"(1-x)P_y", "(1-y)P_x", "(1-x)P_x"},
                                   {"(1-x)l_y", "(1-y)l_x", "(1-x)l_{xy}"});
    const Outcome b = golden_table(2, {{1, 0, 1, 4}, {0, 1, 1, 1}, {0, 0, 1, 2}, {0, 0, 1, 4}},
                                   {"(1-x)^2 P_y", "(1-y)^2 P_x", "(1-x)(1-y) P_x", "(1-x)^2 P_x"},
                                   {"(1-x)^2 l_y", "(1-y)^2 l_x", "(1-y)^2 l_{xy}", "(1-y)^2 l_{xy^2}"});
    return {a.pass && b.pass, a.detail + " |" + b.detail};
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = Clock::now();
    CertifyOptions opt;
    opt.geometric = false;
    std::ostringstream d;
    int count = 0;
    for (int dim : {2, 3})
        for (int m = 2; m <= (dim == 2 ? 8 : 6); ++m) {
            const Certificate c = certify_filling(m, dim, opt);
            bool ok = c.verdict;
            for (const auto& rec : c.degrees)
                ok = ok && rec.injectivity.bareiss_rank == rec.matrix.entries.rows() &&
                     rec.injectivity.smith_rank == rec.matrix.entries.rows();
            ++count;
            if (!ok) {
                o.pass = false;
                d << " dim " << dim << " m=" << m << " failed;";
            }
        }
    const double t = seconds_since(t0);
    if (t >= 60) o.pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %d certificates, %.2fs", count, t);
    o.detail = buf + d.str();
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream d;
    for (int dim : {2, 3})
        for (int k = 0; k <= (dim == 2 ? 4 : 3); ++k) {
            const LinkSpec l = standard_link(k, dim);
            const bool same =
                build_matrix(k, l, MatrixMode::Geometric).entries == build_matrix(k, l, MatrixMode::ClosedForm).entries;
            if (!same) {
                o.pass = false;
                d << " dim " << dim << " k=" << k << " differs;";
            }
        }
    const double t = seconds_since(t0);
    if (t >= 300) o.pass = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.2fs", t);
    o.detail = buf + d.str();
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream d;
    size_t maps = 0, violations = 0;
    for (int dim : {2, 3})
        for (int k = 1; k <= 4; ++k) {
            const LinkSpec l = standard_link(k, dim);
            std::vector<size_t> bad(100);
            parallel_for(100, [&](size_t s) {
                bad[s] = kernel_invariance_check(k, l, random_finger_map(s, 3, 2, l)).violations.size();
            });
            for (size_t b : bad) violations += b;
            maps += 100;
        }
    const double t = seconds_since(t0);
    o.pass = violations == 0 && t < 120;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %zu maps, %zu violations, %.2fs", maps, violations, t);
    o.detail = buf;
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::ostringstream d;
    const IntVector phi3 = phi_k(parse_word("[[x,y],z]", 3), 3);
    if (phi3 != normal_form(PlaquetteChain::generator(Model::Cubical3, 2, LaurentPoly::one_minus(3, 2)), 1)) {
        o.pass = false;
        d << " phi_3([[x,y],z]) differs from (1-z)P_z;";
    }
    size_t checked = 0;
    for (int len = 2; len <= 5; ++len) {
        std::vector<int> s(len, 0);
        while (true) {
            if (s[0] != s[1]) {
                ++checked;
                if (phi_k(basic_commutator(s, 3), len) != normal_form(phi_closed_form(s, 3), len - 2)) {
                    o.pass = false;
                    d << " closed form fails;";
                }
            }
            int i = len - 1;
            while (i >= 0 && s[i] == 2) s[i--] = 0;
            if (i < 0) break;
            ++s[i];
        }
    }
    size_t witnesses = 0;
    for (int k = 2; k <= 5; ++k) {
        const SurjectivityReport r = phi_surjectivity_check(k, 3);
        witnesses += r.witnesses.size();
        if (!r.ok()) {
            o.pass = false;
            d << " surjectivity fails at k=" << k << ";";
        }
    }
    o.detail = " " + std::to_string(checked) + " commutators, " + std::to_string(witnesses) + " witnesses" + d.str();
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::ostringstream d;
    for (int k = 1; k <= 10; ++k) {
        const VandermondeReport r = vandermonde_check(k, 2);
        if (!r.ok || r.determinant != vandermonde_product(k)) {
            o.pass = false;
            d << " k=" << k << ";";
        }
    }
    o.detail = " k=1..10, det V_10 = " + vandermonde_product(10).get_str() + d.str();
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::ostringstream d;
    const auto hb = hall_basis(3, 5);
    for (int k = 1; k <= 5; ++k) {
        long n = 0;
        for (const auto& e : hb) n += e.weight == k;
        const size_t span = hall_leading_rank(3, k);
        d << " " << n;
        if (witt_rank(3, k) != n || static_cast<long>(span) != n) o.pass = false;
    }
    size_t depths = 0;
    for (const auto& e : hb) {
        ++depths;
        if (lcs_depth(e.word, 5) != e.weight) o.pass = false;
    }
    o.detail = " ranks" + d.str() + ", " + std::to_string(depths) + " depths exact";
    return o;
}

Outcome criterion8() {
    const NegativeControlReport r = negative_control();
    Outcome o;
    o.pass = !r.injectivity.injective && r.witness_is_x_minus_y && r.geometric_vanishes;
    o.detail = " witness " + r.witness_chain.to_string();
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"golden matrices", criterion1},      {"certification sweep", criterion2},
        {"oracle equivalence", criterion3},   {"finger-move invariance", criterion4},
        {"phi-map checks", criterion5},       {"Vandermonde structure", criterion6},
        {"Magnus/LCS suite", criterion7},     {"negative control", criterion8},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string(" exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " :"
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failures ? 1 : 0;
}
