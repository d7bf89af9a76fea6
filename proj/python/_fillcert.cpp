#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fillcert/certifier.hpp"
#include "fillcert/errors.hpp"
#include "fillcert/fingers.hpp"
#include "fillcert/json_io.hpp"
#include "fillcert/nilpotent.hpp"
#include "fillcert/parallel.hpp"

namespace py = pybind11;
using namespace fillcert;

namespace {

// Results cross the boundary as JSON text; the python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

MatrixMode mode_of(const std::string& m) {
    if (m == "closed") return MatrixMode::ClosedForm;
    if (m == "geometric") return MatrixMode::Geometric;
    throw InvalidInput("mode must be 'closed' or 'geometric'");
}

LinkSpec link_of(const std::string& text) { return link_from_json(Json::parse(text)); }

std::vector<long> small(const IntVector& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

PYBIND11_MODULE(_fillcert, m) {
    m.doc() = "Linking matrices and filling certificates for spines of T^3 and T^2 x I";

    // Translators are tried newest first, so the base class goes in first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

    m.def("standard_link", [](int k, int dim) { return dump(to_json(standard_link(k, dim))); }, py::arg("k"),
          py::arg("dim"));

    m.def(
        "build_matrix",
        [](int k, const std::string& link, const std::string& mode) {
            const LinkSpec l = link_of(link);
            l.validate();
            return dump(to_json(build_matrix(k, l, mode_of(mode), thread_count())));
        },
        py::arg("k"), py::arg("link"), py::arg("mode") = "closed");

    m.def(
        "is_injective",
        [](const std::string& matrix) {
            const LinkingMatrix mat = matrix_from_json(Json::parse(matrix));
            const InjectivityResult r = is_injective(mat);
            Json out = {{"injective", r.injective},
                        {"bareissRank", r.bareiss_rank},
                        {"smithRank", r.smith_rank},
                        {"witness", small(r.witness)}};
            if (!r.injective) out["witnessText"] = describe_combination(r.witness, mat.rows);
            return dump(out);
        },
        py::arg("matrix"));

    m.def(
        "certify",
        [](int m_, int dim, const std::string& mode, int cap) {
            CertifyOptions opt;
            opt.closed_form = mode != "geometric";
            opt.geometric = mode != "closed";
            opt.geometric_cap = cap;
            opt.threads = thread_count();
            return dump(to_json(certify_filling(m_, dim, opt)));
        },
        py::arg("m"), py::arg("dim"), py::arg("mode") = "closed", py::arg("geometric_cap") = -1);

    m.def(
        "vandermonde_check",
        [](int k, int dim) {
            const VandermondeReport r = vandermonde_check(k, dim);
            return dump({{"ok", r.ok},
                         {"determinant", r.determinant.get_str()},
                         {"expected", r.expected.get_str()},
                         {"failures", r.failures}});
        },
        py::arg("k"), py::arg("dim") = 2);

    m.def("negative_control", [] {
        const NegativeControlReport r = negative_control();
        return dump({{"injective", r.injectivity.injective},
                     {"witness", r.witness_chain.to_string()},
                     {"witnessIsXMinusY", r.witness_is_x_minus_y},
                     {"geometricVanishes", r.geometric_vanishes}});
    });

    m.def(
        "finger_check",
        [](int k, int dim, uint64_t seed, int radius, int degree) {
            const LinkSpec l = standard_link(k, dim);
            const FingerMoveMap f = random_finger_map(seed, radius, degree, l);
            const InvarianceReport r = kernel_invariance_check(k, l, f);
            Json v = Json::array();
            for (const auto& x : r.violations) v.push_back({{"element", x.element}, {"detail", x.detail}});
            return dump({{"checked", r.checked}, {"violations", v}, {"map", to_json(f)}});
        },
        py::arg("k"), py::arg("dim"), py::arg("seed"), py::arg("radius") = 2, py::arg("degree") = 2);

    m.def(
        "lcs_depth",
        [](const std::string& word, int rank, int max_degree) -> std::optional<int> {
            return lcs_depth(parse_word(word, rank), max_degree);
        },
        py::arg("word"), py::arg("rank") = 3, py::arg("max_degree") = 8);

    m.def(
        "phi",
        [](const std::string& word, int k, int rank) {
            const IntVector c = phi_k(parse_word(word, rank), k);
            return dump({{"k", k}, {"basis", basis_J(k - 2, word_model(rank)).labels()}, {"coords", small(c)}});
        },
        py::arg("word"), py::arg("k"), py::arg("rank") = 3);

    m.def("witt_rank", [](int rank, int k) { return witt_rank(rank, k).get_si(); }, py::arg("rank"), py::arg("k"));
    m.def("hall_basis", [](int rank, int max_weight) {
        std::vector<std::pair<int, std::string>> out;
        for (const auto& e : hall_basis(rank, max_weight)) out.emplace_back(e.weight, e.text);
        return out;
    }, py::arg("rank"), py::arg("max_weight"));

    m.def(
        "laurent",
        [](const std::string& text, int dim) { return parse_laurent(text, dim).to_string(); }, py::arg("text"),
        py::arg("dim"), "Normalized text of a Laurent polynomial.");
}
