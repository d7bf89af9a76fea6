#pragma once

// The Z[Z^d]-modules of the jungle gym: plaquette chains (J), edge chains
// (C_1) and meridian chains (H), with the cycle-inclusion map j.

#include <map>
#include <string>
#include <vector>

#include "fillcert/group_ring.hpp"

namespace fillcert {

/// Which lattice model a computation lives in.
///  - Relative2: T^2 x I with the relative spine; C_1 is generated by one
///    vertical segment Z, J by the plaquettes P_x, P_y.
///  - Planar2: the square grid of R^2 (free group on x, y); J generated by
///    a single plaquette P with no relation. Used by the word machinery.
///  - Cubical3: the jungle gym in R^3; C_1 free of rank 3, J generated by
///    P_x, P_y, P_z subject to (1-x)P_x + (1-y)P_y + (1-z)P_z = 0.
enum class Model { Relative2, Planar2, Cubical3 };

int group_rank(Model m);
int plaquette_count(Model m);
int edge_count(Model m);
std::string plaquette_name(Model m, int generator);
std::string edge_name(Model m, int generator);
std::string model_name(Model m);

struct PlaquetteChain {
    Model model = Model::Cubical3;
    std::vector<LaurentPoly> coords;

    static PlaquetteChain zero(Model m);
    /// multiplier * P_generator.
    static PlaquetteChain generator(Model m, int generator,
                                    const LaurentPoly& multiplier);

    PlaquetteChain& operator+=(const PlaquetteChain& o);
    PlaquetteChain& operator-=(const PlaquetteChain& o);
    friend PlaquetteChain operator+(PlaquetteChain a, const PlaquetteChain& b) { return a += b; }
    friend PlaquetteChain operator-(PlaquetteChain a, const PlaquetteChain& b) { return a -= b; }
    /// Scalar multiplication by a group-ring element.
    friend PlaquetteChain operator*(const LaurentPoly& r, const PlaquetteChain& c);
    friend bool operator==(const PlaquetteChain& a, const PlaquetteChain& b) {
        return a.model == b.model && a.coords == b.coords;
    }
    bool is_zero() const;
    std::string to_string() const;
};

struct EdgeChain {
    Model model = Model::Cubical3;
    std::vector<LaurentPoly> coords;

    static EdgeChain zero(Model m);

    EdgeChain& operator+=(const EdgeChain& o);
    friend EdgeChain operator+(EdgeChain a, const EdgeChain& b) { return a += b; }
    friend EdgeChain operator*(const LaurentPoly& r, const EdgeChain& c);
    friend bool operator==(const EdgeChain& a, const EdgeChain& b) {
        return a.model == b.model && a.coords == b.coords;
    }
    bool is_zero() const;
    /// Boundary in C_0 = Z[Z^d] (for Relative2 the augmentation, as a constant).
    LaurentPoly boundary() const;
    std::string to_string() const;
};

/// Element of H: one coefficient per line orbit, keyed by line label.
struct MeridianChain {
    int dim = 0;
    std::map<std::string, LaurentPoly> coords;

    MeridianChain& operator+=(const MeridianChain& o);
    friend MeridianChain operator+(MeridianChain a, const MeridianChain& b) { return a += b; }
    friend MeridianChain operator*(const LaurentPoly& r, const MeridianChain& c);
    LaurentPoly coefficient(const std::string& label) const;
    std::string to_string() const;
};

/// Cycle-inclusion map j: J -> C_1.
///   Relative2: j(P_x) = (1-y)Z, j(P_y) = (1-x)Z
///   Planar2:   j(P)   = (1-y)E_x - (1-x)E_y
///   Cubical3:  j(P_x) = (1-z)E_y - (1-y)E_z and cyclic permutations
EdgeChain j_boundary(const PlaquetteChain& p);

/// The relation element of J (maps to zero under j); zero chain for Planar2.
PlaquetteChain relation_element(Model m);

/// Unique plaquette coordinates of a 1-cycle, with the relation used to
/// eliminate P_y-terms involving y (Relative2) or P_z-terms involving z
/// (Cubical3). Throws NotACycle if the chain is not a cycle.
PlaquetteChain plaquettes_of_cycle(const EdgeChain& cycle);

/// Canonical representative of the same element of J.
PlaquetteChain canonical(const PlaquetteChain& p);

}  // namespace fillcert
