#pragma once

// Magnus expansion, lower central series depth, Hall basic commutators and
// the maps phi_k: F_k -> I^{k-2}J/I^{k-1}J.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fillcert/filtered.hpp"
#include "fillcert/linalg.hpp"
#include "fillcert/word.hpp"

namespace fillcert {

/// Truncated noncommutative power series in X_1..X_d. Degree-L coefficients
/// are stored densely, indexed by the base-d digits of the monomial.
class MagnusSeries {
public:
    MagnusSeries(int rank, int max_degree);

    static MagnusSeries one(int rank, int max_degree);

    int rank() const noexcept { return rank_; }
    int max_degree() const noexcept { return max_degree_; }
    const IntVector& degree(int L) const { return coeffs_.at(L); }
    IntVector& degree(int L) { return coeffs_.at(L); }
    /// Coefficient of X_{w[0]} X_{w[1]} ...
    Integer coefficient(const std::vector<int>& monomial) const;

    friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b);
    friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

    std::string to_string() const;

private:
    int rank_;
    int max_degree_;
    std::vector<IntVector> coeffs_;
};

/// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
MagnusSeries magnus(const FreeWord& w, int max_degree);

/// Lowest degree L >= 1 with a nonzero coefficient; nullopt if none up to D.
std::optional<int> lcs_depth(const FreeWord& w, int max_degree);

/// [...[[x1,x2],x3],...,xk]; generators 0-based. Throws InvalidInput if x1 == x2.
FreeWord basic_commutator(const std::vector<int>& letters, int rank);

/// Bracket tree of a Hall basic commutator.
struct HallElement {
    int weight = 1;
    int generator = -1;  // leaves only
    int left = -1;       // indices into the enclosing basis
    int right = -1;
    std::string text;    // e.g. "[[y,x],x]"
    FreeWord word;
};

/// Hall basic commutators of weight <= max_weight on `rank` generators,
/// ordered by weight, then by generation order. [a,b] is basic when a > b
/// and, if a = [c,d], then d <= b.
std::vector<HallElement> hall_basis(int rank, int max_weight);

/// Rank of F_k/F_{k+1} for the free group of the given rank (necklace formula).
Integer witt_rank(int rank, int k);

/// Rank over Q of the degree-k Magnus coefficients of the weight-k Hall
/// commutators.
size_t hall_leading_rank(int rank, int k);

/// The word model of J: Planar2 for rank 2, Cubical3 for rank 3.
Model word_model(int rank);

/// Coordinates of the class of w in basis_J(k-2, word_model). Throws
/// InvalidInput if w is not in the commutator subgroup or not in F_k.
IntVector phi_k(const FreeWord& w, int k);

/// (1-x_3)...(1-x_k) P([x_1,x_2]) for a basic commutator's letters.
PlaquetteChain phi_closed_form(const std::vector<int>& letters, int rank);

struct SurjectivityWitness {
    std::string element;
    std::string word;
    bool verified = false;
};

struct SurjectivityReport {
    int k = 0;
    int rank = 0;
    std::vector<SurjectivityWitness> witnesses;
    bool ok() const;
};

/// A word in F_k hitting every element of basis_J(k-2): for C_{abc} P_x the
/// commutator [[y,z], x^a, y^b, z^c] (left-normed), and cyclically.
SurjectivityReport phi_surjectivity_check(int k, int rank);

/// Ranks in 0 -> K_k -> F_k/F_{k+1} -> I^{k-2}J/I^{k-1}J -> 0.
struct SesRanks {
    int k = 0;
    Integer lcs_quotient;  // witt_rank
    size_t image = 0;      // rank of phi_k on the Hall commutators of weight k
    size_t target = 0;     // size of basis_J(k-2)
    Integer kernel;        // lcs_quotient - image
};

SesRanks ses_ranks(int k, int rank);

}  // namespace fillcert
