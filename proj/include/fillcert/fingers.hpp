#pragma once

// Finger-move maps F: C_1 -> H and the kernel-invariance check.

#include <cstdint>
#include <string>
#include <vector>

#include "fillcert/filtered.hpp"
#include "fillcert/link_spec.hpp"
#include "fillcert/model.hpp"

namespace fillcert {

/// An equivariant map C_1 -> H, given by its values on the edge generators.
struct FingerMoveMap {
    Model model = Model::Relative2;
    std::vector<MeridianChain> assignments;  // one per edge generator

    static FingerMoveMap zero(Model m);
    /// F(e) extended Z[Z^d]-linearly.
    MeridianChain apply(const EdgeChain& e) const;
    FingerMoveMap& operator+=(const FingerMoveMap& o);
    friend FingerMoveMap operator+(FingerMoveMap a, const FingerMoveMap& b) { return a += b; }
};

/// Lk(c) + F(j(c)).
MeridianChain perturbed_linking(const PlaquetteChain& c, const FingerMoveMap& f, const LinkSpec& link);

/// Deterministic in (seed, parameters): every edge gets, for every link
/// component, value_degree + 1 terms with exponents in [-radius, radius]
/// and coefficients in [-3, 3].
FingerMoveMap random_finger_map(uint64_t seed, int support_radius, int value_degree, const LinkSpec& link);

struct InvarianceViolation {
    std::string element;
    std::string detail;
};

struct InvarianceReport {
    int k = 0;
    size_t checked = 0;
    std::vector<InvarianceViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For each c in basis_J(k): F(j(c)) lies in I^{k+1}H, and the degree-k
/// coordinates of the perturbed and unperturbed linking agree.
InvarianceReport kernel_invariance_check(int k, const LinkSpec& link, const FingerMoveMap& f);

}  // namespace fillcert
