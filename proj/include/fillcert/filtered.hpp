#pragma once

// Ordered bases of I^kM/I^{k+1}M for M = J, H, C_1 and coordinates in them.

#include <map>
#include <string>
#include <vector>

#include "fillcert/group_ring.hpp"
#include "fillcert/link_spec.hpp"
#include "fillcert/linalg.hpp"
#include "fillcert/model.hpp"

namespace fillcert {

enum class ModuleTag { J, H, C1 };

struct BasisElement {
    /// Plaquette or edge generator index, or link component index for H.
    int generator = 0;
    /// Multiplier exponents: over the d variables for J and C_1, over the
    /// quotient variables of the line for H.
    MultiIndex alpha;
    std::string label;
};

struct QuotientBasis {
    ModuleTag module = ModuleTag::J;
    Model model = Model::Cubical3;
    int degree = 0;
    std::vector<BasisElement> elements;

    size_t size() const { return elements.size(); }
    std::vector<std::string> labels() const;
    /// Position of (generator, alpha); throws InvalidInput if absent.
    size_t index_of(int generator, const MultiIndex& alpha) const;

private:
    friend QuotientBasis make_basis(ModuleTag, Model, int, std::vector<BasisElement>);
    std::map<std::pair<int, MultiIndex>, size_t> index_;
};

QuotientBasis make_basis(ModuleTag module, Model model, int degree, std::vector<BasisElement> elements);

/// Relative2: (1-x)^k P_y, then (1-x)^a (1-y)^(k-a) P_x for a = 0..k.
/// Planar2: all degree-k monomials times P.
/// Cubical3: C^k_{abc} P_x, C^k_{abc} P_y, C^k_{ab0} P_z, each block in
/// descending lexicographic order of (a,b,c).
QuotientBasis basis_J(int k, Model m);
QuotientBasis basis_J(int k, int dim);

/// Per link component (in link order), the degree-k monomials of its
/// quotient ring. Runs the Smith-form torsion check for every line.
QuotientBasis basis_H(int k, const LinkSpec& link);

/// Free basis of I^kC_1/I^{k+1}C_1: degree-k monomials per edge generator.
QuotientBasis basis_C1(int k, Model m);

/// The plaquette chain of a J-basis element.
PlaquetteChain emit(const BasisElement& e, Model m);

/// Coordinates of c in basis_J(k). Throws FiltrationError if c is not in I^kJ.
IntVector normal_form(const PlaquetteChain& c, int k);

/// Coordinates of h in basis_H(k, link). Throws FiltrationError if h is not in I^kH.
IntVector normal_form(const MeridianChain& h, int k, const LinkSpec& link);
/// Same, reusing a basis_H(k, link) built by the caller.
IntVector normal_form(const MeridianChain& h, int k, const LinkSpec& link, const QuotientBasis& basis);

/// Coordinates of e in basis_C1(k). Throws FiltrationError if e is not in I^kC_1.
IntVector normal_form(const EdgeChain& e, int k);

/// Checks j(b) in I^{k+1}C_1 for every b in basis_J(k); returns the labels
/// of any element where it fails.
std::vector<std::string> check_boundary_filtration(int k, Model m);

/// Lk(c) for every component of the link, via the geometric linking of the
/// generating plaquettes extended Z[Z^d]-linearly.
MeridianChain linking(const PlaquetteChain& c, const LinkSpec& link);

}  // namespace fillcert
