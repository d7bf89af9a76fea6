#pragma once

// Exact arithmetic in the group ring Z[Z^d] and in the augmentation-ideal
// filtration quotients I^k/I^{k+1}.
//
// A LaurentPoly is a finite map from exponent vectors to nonzero integers.
// An AugClass is a homogeneous degree-k polynomial in the difference
// variables u_i = 1 - x_i; the degree-k monomials form a Z-basis of
// I^k/I^{k+1}.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fillcert {

using Integer = mpz_class;
using Exponents = std::vector<int64_t>;
using MultiIndex = std::vector<int>;

/// Variable names used in text forms, by coordinate index.
char variable_name(int index);

class LaurentPoly {
public:
    using Terms = std::map<Exponents, Integer>;

    LaurentPoly() = default;
    explicit LaurentPoly(int dim) : dim_(dim) {}

    static LaurentPoly constant(int dim, const Integer& c);
    static LaurentPoly monomial(const Exponents& e, const Integer& c = 1);
    /// x_i as an element of Z[Z^dim].
    static LaurentPoly variable(int dim, int index);
    /// 1 - x_i.
    static LaurentPoly one_minus(int dim, int index);
    /// prod_i (1 - x_i)^{alpha_i}.
    static LaurentPoly difference_monomial(const MultiIndex& alpha);

    int dim() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Integer& c);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    /// Multiply by the monomial x^shift.
    LaurentPoly translated(const Exponents& shift) const;
    /// Set x_index = 1.
    LaurentPoly evaluate_at_one(int index) const;
    /// Image under the exponent map e -> A e, where A has `rows` rows and dim() columns.
    LaurentPoly transform_exponents(const std::vector<std::vector<int64_t>>& A) const;
    /// Exact quotient by (1 - x_index). Throws InvalidInput if not divisible.
    LaurentPoly divide_one_minus(int index) const;

    std::string to_string() const;

private:
    int dim_ = 0;
    Terms terms_;
};

/// Sum of coefficients (the augmentation).
Integer augmentation(const LaurentPoly& p);

class AugClass {
public:
    using Coeffs = std::map<MultiIndex, Integer>;

    AugClass() = default;
    AugClass(int dim, int degree) : dim_(dim), degree_(degree) {}

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Integer coefficient(const MultiIndex& alpha) const;

    void add_term(const MultiIndex& alpha, const Integer& c);

    AugClass& operator+=(const AugClass& other);
    AugClass& operator*=(const Integer& c);
    friend AugClass operator+(AugClass a, const AugClass& b) { return a += b; }
    /// Graded product: degrees add.
    friend AugClass operator*(const AugClass& a, const AugClass& b);

    friend bool operator==(const AugClass& a, const AugClass& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// Re-substitute u_i = 1 - x_i.
    LaurentPoly to_laurent() const;

    std::string to_string() const;

private:
    int dim_ = 0;
    int degree_ = 0;
    Coeffs coeffs_;
};

/// All multi-indices of length dim summing to degree, in lexicographically
/// descending order ((k,0,..) first).
std::vector<MultiIndex> multi_indices(int dim, int degree);

/// Class of p in I^k/I^{k+1}. Throws FiltrationError if p is not in I^k.
AugClass reduce_mod_filtration(const LaurentPoly& p, int k);

/// Truncated expansion of p in the u-variables: all terms of total degree <= maxdeg.
std::map<MultiIndex, Integer> u_expansion(const LaurentPoly& p, int maxdeg);

/// Largest k <= maxdeg with p in I^k; nullopt stands for ">= maxdeg+1" (includes p = 0).
std::optional<int> filtration_degree(const LaurentPoly& p, int maxdeg);

/// Parse "1 - x*y^-1 + 2*z" or "(1-x)^2(1-y)". Variables x, y, z; dim must cover
/// every variable used. Negative powers are allowed on monomials only.
LaurentPoly parse_laurent(std::string_view text, int dim);

/// Parse "2*u_y^2 + u_x*u_z" as a homogeneous class. "0" gives the zero class.
AugClass parse_aug_class(std::string_view text, int dim, int degree);

/// Label form of a difference monomial: "(1-x)^2(1-y)", empty for degree 0.
std::string difference_monomial_label(const MultiIndex& alpha);

}  // namespace fillcert
