// fillcert: linking matrices, filling certificates, word maps and
// finger-move checks from the command line.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fillcert/certifier.hpp"
#include "fillcert/errors.hpp"
#include "fillcert/fingers.hpp"
#include "fillcert/json_io.hpp"
#include "fillcert/nilpotent.hpp"
#include "fillcert/parallel.hpp"

using namespace fillcert;

namespace {

enum Exit { kOk = 0, kUsage = 2, kStructure = 3, kFailed = 4 };

struct MatrixArgs {
    int dim = 2;
    int k = 1;
    bool standard = false;
    std::string link_file;
    std::string mode = "closed";
    std::string json;
};

struct CertifyArgs {
    int dim = 3;
    int m = 2;
    std::string mode = "closed";
    int geometric_cap = -1;
    std::string json;
};

struct WordArgs {
    std::string word;
    int rank = 3;
    std::optional<int> k;
    int max_depth = 8;
    std::string json;
};

struct FingerArgs {
    int dim = 2;
    int k = 1;
    int seeds = 100;
    uint64_t seed_base = 0;
    int radius = 2;
    int degree = 2;
    std::string replay;
    std::string save_failing;
    std::string json;
};

void print_table(std::ostream& os, const LinkingMatrix& m) {
    size_t label_w = 0;
    for (const auto& r : m.rows) label_w = std::max(label_w, r.size());
    std::vector<size_t> w(m.cols.size());
    for (size_t c = 0; c < m.cols.size(); ++c) {
        w[c] = m.cols[c].size();
        for (size_t r = 0; r < m.rows.size(); ++r) w[c] = std::max(w[c], m.entries(r, c).get_str().size());
    }
    os << std::string(label_w, ' ');
    for (size_t c = 0; c < m.cols.size(); ++c) os << "  " << std::setw(static_cast<int>(w[c])) << m.cols[c];
    os << '\n';
    for (size_t r = 0; r < m.rows.size(); ++r) {
        os << std::left << std::setw(static_cast<int>(label_w)) << m.rows[r] << std::right;
        for (size_t c = 0; c < m.cols.size(); ++c)
            os << "  " << std::setw(static_cast<int>(w[c])) << m.entries(r, c).get_str();
        os << '\n';
    }
}

int cmd_matrix(const MatrixArgs& a) {
    if (a.standard == !a.link_file.empty()) throw InvalidInput("give exactly one of --standard and --link");
    LinkSpec link = a.standard ? standard_link(a.k, a.dim) : link_from_json(read_json_file(a.link_file));
    if (!a.standard && link.dim != a.dim) throw InvalidInput("link file dimension does not match --dim");
    link.validate();
    const unsigned threads = thread_count();
    const bool geo_primary = a.mode == "geometric";
    const LinkingMatrix mat = build_matrix(a.k, link, geo_primary ? MatrixMode::Geometric : MatrixMode::ClosedForm, threads);
    std::cout << "i_" << a.k << " (dim " << a.dim << ", " << link.components.size() << " components, "
              << (geo_primary ? "geometric" : "closed form") << ")\n";
    print_table(std::cout, mat);
    int code = kOk;
    if (a.mode == "both") {
        const LinkingMatrix geo = build_matrix(a.k, link, MatrixMode::Geometric, threads);
        const bool same = geo.entries == mat.entries;
        std::cout << "geometric oracle: " << (same ? "agrees" : "DISAGREES") << '\n';
        if (!same) {
            print_table(std::cout, geo);
            code = kFailed;
        }
    }
    if (!a.json.empty()) write_json_file(a.json, to_json(mat));
    return code;
}

int cmd_certify(const CertifyArgs& a) {
    CertifyOptions opt;
    opt.closed_form = a.mode != "geometric";
    opt.geometric = a.mode != "closed";
    opt.geometric_cap = a.geometric_cap;
    opt.threads = thread_count();
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate cert = certify_filling(a.m, a.dim, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "certify m=" << cert.m << " dim=" << cert.dim << " link: " << cert.link.components.size()
              << " components\n";
    for (const auto& c : cert.link.components) {
        std::cout << "  " << c.label << " (";
        for (size_t i = 0; i < c.direction.size(); ++i) std::cout << (i ? "," : "") << c.direction[i];
        std::cout << ")\n";
    }
    for (const auto& d : cert.degrees) {
        std::cout << "  " << d.matrix_ref << ": " << d.matrix.entries.rows() << "x" << d.matrix.entries.cols()
                  << " injective=" << (d.injective ? "yes" : "no") << " bareiss=" << d.injectivity.bareiss_rank
                  << " smith=" << d.injectivity.smith_rank;
        if (d.geometric_checked) std::cout << " geometric=" << (d.geometric_agrees ? "agrees" : "DISAGREES");
        if (!d.boundary_filtration_ok) std::cout << " boundary-filtration=FAILED";
        std::cout << '\n';
        if (!d.witness.empty()) std::cout << "    kernel witness: " << d.witness << '\n';
    }
    for (const auto& s : cert.lemma_chain) std::cout << "  - " << s << '\n';
    for (const auto& s : cert.log) std::cout << "  log: " << s << '\n';
    std::cout << "verdict: " << (cert.verdict ? "CERTIFIED" : "NOT CERTIFIED") << " (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    if (!a.json.empty()) write_json_file(a.json, to_json(cert));
    return cert.verdict ? kOk : kFailed;
}

int cmd_word(const WordArgs& a) {
    const FreeWord w = parse_word(a.word, a.rank);
    Json out = {{"word", w.to_string()}, {"rank", a.rank}};
    std::cout << "word: " << w.to_string() << '\n';
    const auto depth = lcs_depth(w, a.max_depth);
    if (w.is_identity()) {
        std::cout << "depth: infinite (identity)\n";
        out["depth"] = nullptr;
    } else if (!depth) {
        std::cout << "depth: > " << a.max_depth << '\n';
        out["depth"] = nullptr;
    } else {
        std::cout << "depth: " << *depth << '\n';
        out["depth"] = *depth;
    }
    bool in_commutator = true;
    for (long e : w.abelianization()) in_commutator = in_commutator && e == 0;
    const int k = a.k ? *a.k : (depth ? *depth : a.max_depth + 1);
    if (!in_commutator || k < 2) {
        std::cout << "phi: not applicable (not in the commutator subgroup)\n";
    } else {
        const IntVector coords = phi_k(w, k);
        const QuotientBasis basis = basis_J(k - 2, word_model(a.rank));
        std::vector<std::string> labels = basis.labels();
        std::string text;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            const Integer mag = abs(coords[i]);
            text += text.empty() ? (coords[i] < 0 ? "-" : "") : (coords[i] < 0 ? " - " : " + ");
            if (mag != 1) text += mag.get_str() + "*";
            text += labels[i];
        }
        std::cout << "phi_" << k << ": " << (text.empty() ? "0" : text) << '\n';
        // A single plaquette term with the same class reads better than basis
        // coordinates, e.g. (1-z) P_z.
        const Model model = word_model(a.rank);
        std::string single;
        for (int gen = 0; gen < plaquette_count(model) && single.empty() && !text.empty(); ++gen)
            for (const auto& alpha : multi_indices(a.rank, k - 2)) {
                const IntVector nf = normal_form(PlaquetteChain::generator(model, gen, LaurentPoly::difference_monomial(alpha)), k - 2);
                IntVector neg = nf;
                for (auto& x : neg) x = -x;
                std::string mono = difference_monomial_label(alpha);
                mono += (mono.empty() ? "" : " ") + plaquette_name(model, gen);
                if (nf == coords) single = mono;
                if (neg == coords) single = "-" + mono;
                if (!single.empty()) break;
            }
        if (!single.empty() && single != text) std::cout << "      = " << single << " (mod I^" << k - 1 << "J)\n";
        Json cj = Json::array();
        for (const auto& c : coords) cj.push_back(c.get_si());
        out["phi"] = {{"k", k}, {"basis", labels}, {"coords", cj}, {"text", text.empty() ? "0" : text}};
        if (!single.empty()) out["phi"]["single"] = single;
    }
    if (!a.json.empty()) write_json_file(a.json, out);
    return kOk;
}

int cmd_fingers(const FingerArgs& a) {
    std::vector<FingerReplay> runs;
    if (!a.replay.empty()) {
        runs.push_back(replay_from_json(read_json_file(a.replay)));
        runs.back().link.validate();
    } else {
        if (a.seeds < 1) throw InvalidInput("--seeds must be positive");
        const LinkSpec link = standard_link(a.k, a.dim);
        for (int s = 0; s < a.seeds; ++s) {
            const uint64_t seed = a.seed_base + static_cast<uint64_t>(s);
            runs.push_back({a.k, seed, link, random_finger_map(seed, a.radius, a.degree, link)});
        }
    }
    std::vector<InvarianceReport> reports(runs.size());
    parallel_for(runs.size(), [&](size_t i) { reports[i] = kernel_invariance_check(runs[i].k, runs[i].link, runs[i].map); });
    size_t violations = 0;
    size_t checked = 0;
    std::optional<size_t> first_bad;
    Json per_seed = Json::array();
    for (size_t i = 0; i < runs.size(); ++i) {
        checked += reports[i].checked;
        violations += reports[i].violations.size();
        if (!reports[i].ok() && !first_bad) first_bad = i;
        Json v = Json::array();
        for (const auto& x : reports[i].violations) {
            v.push_back({{"element", x.element}, {"detail", x.detail}});
            std::cout << "seed " << runs[i].seed << ": " << x.element << ": " << x.detail << '\n';
        }
        per_seed.push_back({{"seed", runs[i].seed}, {"checked", reports[i].checked}, {"violations", v}});
    }
    const int k = runs.front().k;
    std::cout << "fingers dim=" << runs.front().link.dim << " k=" << k << ": " << runs.size() << " map(s), " << checked
              << " basis checks, " << violations << " violation(s)\n";
    if (first_bad && !a.save_failing.empty()) {
        write_json_file(a.save_failing, to_json(runs[*first_bad]));
        std::cout << "saved failing map to " << a.save_failing << '\n';
    }
    if (!a.json.empty()) write_json_file(a.json, {{"k", k}, {"maps", runs.size()}, {"violations", violations}, {"runs", per_seed}});
    return violations ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filling-link certificates for spines of T^3 and T^2 x I"};
    app.require_subcommand(1);

    MatrixArgs ma;
    auto* matrix = app.add_subcommand("matrix", "print the linking matrix i_k");
    matrix->add_option("--dim", ma.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
    matrix->add_option("--k", ma.k, "filtration degree")->required()->check(CLI::NonNegativeNumber);
    matrix->add_flag("--standard", ma.standard, "use the standard link L_k");
    matrix->add_option("--link", ma.link_file, "link JSON file");
    matrix->add_option("--mode", ma.mode, "closed, geometric or both")->check(CLI::IsMember({"closed", "geometric", "both"}));
    matrix->add_option("--json", ma.json, "write the matrix as JSON");

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "certify that L_{m-3} is m-filling");
    certify->add_option("--dim", ca.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
    certify->add_option("--m", ca.m, "filling depth, at least 2")->required();
    certify->add_option("--mode", ca.mode, "closed, geometric or both")->check(CLI::IsMember({"closed", "geometric", "both"}));
    certify->add_option("--geometric-cap", ca.geometric_cap, "highest degree cross-checked geometrically");
    certify->add_option("--json", ca.json, "write the certificate as JSON");

    WordArgs wa;
    auto* word = app.add_subcommand("word", "lower central series depth and phi_k of a word");
    word->add_option("word", wa.word, "e.g. \"[[x,y],z]\"")->required();
    word->add_option("--rank", wa.rank, "number of generators, 2 or 3")->check(CLI::IsMember({2, 3}));
    word->add_option("--k", wa.k, "evaluate phi_k (default: the depth)");
    word->add_option("--max-depth", wa.max_depth, "Magnus truncation degree")->check(CLI::PositiveNumber);
    word->add_option("--json", wa.json, "write the report as JSON");

    FingerArgs fa;
    auto* fingers = app.add_subcommand("fingers", "finger-move invariance over random maps");
    fingers->add_option("--dim", fa.dim, "2 or 3")->check(CLI::IsMember({2, 3}));
    fingers->add_option("--k", fa.k, "filtration degree")->check(CLI::NonNegativeNumber);
    fingers->add_option("--seeds", fa.seeds, "number of random maps");
    fingers->add_option("--seed-base", fa.seed_base, "first seed");
    fingers->add_option("--radius", fa.radius, "support radius")->check(CLI::NonNegativeNumber);
    fingers->add_option("--degree", fa.degree, "value degree")->check(CLI::NonNegativeNumber);
    fingers->add_option("--replay", fa.replay, "re-run a saved map");
    fingers->add_option("--save-failing", fa.save_failing, "save the first failing map here");
    fingers->add_option("--json", fa.json, "write the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*matrix) return cmd_matrix(ma);
        if (*certify) return cmd_certify(ca);
        if (*word) return cmd_word(wa);
        if (*fingers) return cmd_fingers(fa);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kStructure;
    }
    return kUsage;
}
