#pragma once

// Cubical chains in Z^d, cone-off fillings, periodic lines and the
// intersection-count linking oracle.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fillcert/group_ring.hpp"
#include "fillcert/model.hpp"
#include "fillcert/word.hpp"

namespace fillcert {

/// The unit cube [base, base + sum_{a in axes} e_a]. Axes are sorted.
struct Cell {
    Exponents base;
    std::vector<int> axes;
    auto operator<=>(const Cell&) const = default;
};

/// Finite integer combination of q-cells of Z^d. GridCycle (q = 1) and
/// TwoChain (q = 2) are both this type; the relative 2D model uses
/// 0-chains for cycles and 1-chains for fillings.
class CubicalChain {
public:
    CubicalChain() = default;
    CubicalChain(int dim, int degree) : dim_(dim), degree_(degree) {}

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    const std::map<Cell, Integer>& cells() const noexcept { return cells_; }
    bool is_zero() const noexcept { return cells_.empty(); }
    Integer coefficient(const Cell& c) const;

    void add(const Cell& c, const Integer& coeff);
    CubicalChain& operator+=(const CubicalChain& o);
    CubicalChain& operator-=(const CubicalChain& o);
    friend CubicalChain operator+(CubicalChain a, const CubicalChain& b) { return a += b; }
    friend CubicalChain operator-(CubicalChain a, const CubicalChain& b) { return a -= b; }
    friend CubicalChain operator*(const Integer& s, CubicalChain a);
    friend bool operator==(const CubicalChain&, const CubicalChain&) = default;

    CubicalChain translated(const Exponents& shift) const;
    CubicalChain boundary() const;
    /// Boundary zero (for 0-chains: coefficient sum zero).
    bool is_cycle() const;

    /// Debug dump: one "base {axes} coeff" line per cell, sorted.
    std::string dump() const;

private:
    int dim_ = 0;
    int degree_ = 0;
    std::map<Cell, Integer> cells_;
};

/// Unit square with sides along axes i < j, at base.
Cell square(const Exponents& base, int i, int j);
/// Unit edge along axis i at base.
Cell edge(const Exponents& base, int i);

/// S with boundary(S) == c. Cones toward the smallest corner of the support,
/// one axis at a time in axis_order (default 0, 1, ..). Throws NotACycle.
CubicalChain fill_cycle(const CubicalChain& c, const std::vector<int>& axis_order = {});

/// An oriented periodic line basepoint + t * direction in R^d.
struct Line {
    std::vector<int64_t> direction;
    std::vector<mpq_class> basepoint;
    std::string label;
};

/// Line for link component `slot`: basepoint coordinates (i+1)/(2*slot+4).
Line make_line(const std::vector<int64_t>& direction, const std::string& label, int slot);

/// Throws InvalidInput unless the direction is primitive and the line misses
/// every lattice cell of codimension two (edges in 3D, vertices in 2D).
void validate_line(const Line& l);

/// True if no Z^d-translate of a meets b (3D only; 2D lines sit at
/// distinct levels of T^2 x I and never meet).
bool lines_disjoint(const Line& a, const Line& b);

/// sum over g of (signed intersections of S with g.l) * x^g, exponents
/// reduced modulo the direction so the first nonzero direction coordinate
/// of g lies in [0, |v_e|). S must be a chain of (d-1)-cells.
LaurentPoly intersection_linking(const CubicalChain& filling, const Line& l);

/// intersection_linking(fill_cycle(cycle), l).
LaurentPoly geometric_linking(const CubicalChain& cycle, const Line& l,
                              const std::vector<int>& axis_order = {});

/// Lattice cycle of an edge chain (vertices for Relative2).
CubicalChain to_grid_cycle(const EdgeChain& e);
/// Inverse of to_grid_cycle for the given model.
EdgeChain from_grid_cycle(const CubicalChain& c, Model m);

/// The lattice cell carrying plaquette generator i, with its sign.
std::pair<Cell, int> plaquette_cell(Model m, int generator);

/// Closed edge path traced by w from the origin (Planar2 for rank 2,
/// Cubical3 for rank 3). Throws InvalidInput if the path does not close.
CubicalChain word_to_cycle(const FreeWord& w);

/// Plaquette coordinates of a lattice cycle, read off the filling and
/// returned in canonical form.
PlaquetteChain cycle_to_plaquettes(const CubicalChain& c, Model m);

}  // namespace fillcert
