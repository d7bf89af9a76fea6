#pragma once

// Linking matrices i_k on filtration quotients, injectivity, and filling
// certificates over the standard links.

#include <string>
#include <vector>

#include "fillcert/filtered.hpp"
#include "fillcert/link_spec.hpp"
#include "fillcert/linalg.hpp"

namespace fillcert {

struct LinkingMatrix {
    int k = 0;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    IntMatrix entries;
};

enum class MatrixMode { ClosedForm, Geometric };

/// Signed count of lines of direction v crossing plaquette generator gen.
Integer plaquette_intersection_number(Model m, int generator, const std::vector<int64_t>& direction);

/// Class of Lk(row) on the component's quotient: n * (image of the row's
/// multiplier under the line's substitution u_e -> linear form).
AugClass closed_form_entry(const BasisElement& row, Model m, const LinkComponent& line, int k);

/// Rows basis_J(k), columns basis_H(k, link). Geometric mode fills the
/// cycle of every row and counts intersections; rows are computed in
/// parallel and assembled in order.
LinkingMatrix build_matrix(int k, const LinkSpec& link, MatrixMode mode, unsigned threads = 0);

struct InjectivityResult {
    bool injective = false;
    size_t bareiss_rank = 0;
    size_t smith_rank = 0;
    std::vector<Integer> smith_invariants;
    /// Q-basis of the left kernel (primitive vectors).
    std::vector<IntVector> kernel;
    /// Kernel vector of least support (empty when injective).
    IntVector witness;
    /// True when the two rank computations agree.
    bool methods_agree() const { return bareiss_rank == smith_rank; }
};

InjectivityResult is_injective(const LinkingMatrix& mat);

/// "a*row_i + b*row_j" over the matrix row labels.
std::string describe_combination(const IntVector& w, const std::vector<std::string>& labels);

struct VandermondeReport {
    bool ok = false;
    int k = 0;
    int dim = 2;
    /// det of the extracted k x k Vandermonde matrix, and the expected
    /// prod_{1<=m<n<=k} (n-m).
    Integer determinant;
    Integer expected;
    /// det of the diagonal block itself (= k! * det V in dim 2).
    Integer block_determinant;
    std::vector<std::string> failures;
};

/// Verifies the predicted block-triangular structure of the closed-form
/// matrix over standard_link(k, dim) and its Vandermonde diagonal blocks.
VandermondeReport vandermonde_check(int k, int dim);

/// prod_{1<=m<n<=k} (n-m), computed directly.
Integer vandermonde_product(int k);

struct DegreeRecord {
    int j = 0;
    bool injective = false;
    bool methods_agree = false;
    bool boundary_filtration_ok = false;
    bool geometric_checked = false;
    bool geometric_agrees = false;
    std::string matrix_ref;
    LinkingMatrix matrix;
    InjectivityResult injectivity;
    std::string witness;  // nonempty on failure
};

struct Certificate {
    int m = 2;
    int dim = 2;
    LinkSpec link;
    std::vector<DegreeRecord> degrees;
    bool verdict = false;
    std::vector<std::string> lemma_chain;
    std::vector<std::string> log;
};

struct CertifyOptions {
    bool closed_form = true;
    bool geometric = true;
    /// Highest degree cross-checked geometrically; -1 picks 4 (dim 2) or 3 (dim 3).
    int geometric_cap = -1;
    unsigned threads = 0;
};

Certificate certify_filling(int m, int dim, const CertifyOptions& options = {});

struct NegativeControlReport {
    LinkSpec link;
    LinkingMatrix matrix;
    InjectivityResult injectivity;
    /// Witness as a plaquette chain, e.g. (x - y) P_x.
    PlaquetteChain witness_chain;
    bool witness_is_x_minus_y = false;
    /// Geometric Lk((x-y)P_x) on the (1,1) line vanishes exactly.
    bool geometric_vanishes = false;
};

/// The single (1,1)-curve link in T^2 x I at degree one.
NegativeControlReport negative_control();

}  // namespace fillcert
