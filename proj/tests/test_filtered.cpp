#include <doctest.h>

#include "fillcert/errors.hpp"
#include "fillcert/filtered.hpp"

using namespace fillcert;

namespace {

PlaquetteChain gen(Model m, int g, const char* mult) {
    return PlaquetteChain::generator(m, g, parse_laurent(mult, group_rank(m)));
}

IntVector vec(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("j on plaquettes") {
    CHECK(j_boundary(gen(Model::Relative2, 0, "1")).coords[0] == parse_laurent("1 - y", 2));
    CHECK(j_boundary(gen(Model::Relative2, 1, "1")).coords[0] == parse_laurent("1 - x", 2));
    for (Model m : {Model::Relative2, Model::Cubical3}) {
        CHECK(j_boundary(relation_element(m)).is_zero());
        CHECK(j_boundary(gen(m, 0, "x - 3*y")).boundary().is_zero());
    }
}

TEST_CASE("J bases") {
    const QuotientBasis b1 = basis_J(1, Model::Relative2);
    CHECK(b1.labels() == std::vector<std::string>{"(1-x) P_y", "(1-y) P_x", "(1-x) P_x"});
    CHECK(basis_J(0, 3).labels() == std::vector<std::string>{"P_x", "P_y", "P_z"});
    for (int k = 0; k <= 5; ++k) {
        CHECK(basis_J(k, 2).size() == static_cast<size_t>(k + 2));
        CHECK(basis_J(k, 3).size() == static_cast<size_t>((k + 1) * (k + 3)));
    }
    CHECK(basis_J(2, 3).size() == 15);
}

TEST_CASE("H bases") {
    const QuotientBasis h1 = basis_H(1, standard_link(1, 2));
    CHECK(h1.labels() == std::vector<std::string>{"(1-x) l_y", "(1-y) l_x", "(1-y) l_{xy}"});
    const LinkSpec l3 = standard_link(3, 3);
    CHECK(basis_H(0, l3).size() == l3.components.size());
    CHECK(basis_H(2, standard_link(2, 2)).size() == 4);
    CHECK(basis_H(2, l3).size() == 3 * l3.components.size());
}

TEST_CASE("normal forms") {
    // (x - y) = (1 - y) - (1 - x); basis order (1-x)P_y, (1-y)P_x, (1-x)P_x.
    CHECK(normal_form(gen(Model::Relative2, 0, "x - y"), 1) == vec({0, 1, -1}));
    const QuotientBasis b2 = basis_J(2, Model::Relative2);
    const size_t slot = b2.index_of(0, {2, 0});
    IntVector unit(b2.size());
    unit[slot] = 1;
    CHECK(normal_form(gen(Model::Relative2, 0, "(1-x)^2"), 2) == unit);
    CHECK_THROWS_AS(normal_form(gen(Model::Relative2, 0, "1 - x"), 2), FiltrationError);
}

TEST_CASE("every basis element has a unit normal form") {
    for (Model m : {Model::Relative2, Model::Cubical3, Model::Planar2})
        for (int k = 0; k <= 4; ++k) {
            const QuotientBasis b = basis_J(k, m);
            for (size_t i = 0; i < b.size(); ++i) {
                IntVector unit(b.size());
                unit[i] = 1;
                CHECK(normal_form(emit(b.elements[i], m), k) == unit);
            }
        }
}

TEST_CASE("multiples of the relation have zero normal form") {
    for (Model m : {Model::Relative2, Model::Cubical3})
        for (int k = 1; k <= 4; ++k)
            for (const auto& alpha : multi_indices(group_rank(m), k - 1)) {
                const PlaquetteChain r = LaurentPoly::difference_monomial(alpha) * relation_element(m);
                CHECK(normal_form(r, k) == IntVector(basis_J(k, m).size()));
            }
}

TEST_CASE("boundary filtration holds") {
    for (int k = 0; k <= 6; ++k) {
        CHECK(check_boundary_filtration(k, Model::Relative2).empty());
        CHECK(check_boundary_filtration(k, Model::Cubical3).empty());
    }
}

TEST_CASE("meridian normal forms") {
    const LinkSpec l = standard_link(2, 2);
    MeridianChain h{2, {{"l_{xy^2}", parse_laurent("(1-x)^2", 2)}}};
    const QuotientBasis b = basis_H(2, l);
    const IntVector nf = normal_form(h, 2, l);
    CHECK(nf[b.index_of(3, {2})] == 4);
    MeridianChain low{2, {{"l_x", parse_laurent("1 - y", 2)}}};
    CHECK_THROWS_AS(normal_form(low, 2, l), FiltrationError);
}
