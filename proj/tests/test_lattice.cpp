#include <doctest.h>

#include "fillcert/errors.hpp"
#include "fillcert/lattice.hpp"
#include "fillcert/word.hpp"

using namespace fillcert;

namespace {

CubicalChain unit_square_boundary(const Exponents& b) {
    CubicalChain s(2, 2);
    s.add(square(b, 0, 1), 1);
    return s.boundary();
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes") {
    CubicalChain cube(3, 3);
    cube.add(Cell{{0, 0, 0}, {0, 1, 2}}, 1);
    CHECK(cube.boundary().boundary().is_zero());
    CHECK(cube.boundary().cells().size() == 6);
}

TEST_CASE("fill_cycle") {
    CubicalChain sq(2, 2);
    sq.add(square({0, 0}, 0, 1), 1);
    CHECK(fill_cycle(sq.boundary()) == sq);

    CHECK(fill_cycle(CubicalChain(3, 1)).is_zero());

    CubicalChain rect(2, 2);
    rect.add(square({0, 0}, 0, 1), 1);
    rect.add(square({1, 0}, 0, 1), 1);
    const CubicalChain filled = fill_cycle(rect.boundary());
    CHECK(filled == rect);
    CHECK(filled.boundary() == rect.boundary());

    CubicalChain open(2, 1);
    open.add(edge({0, 0}, 0), 1);
    CHECK_THROWS_AS(fill_cycle(open), NotACycle);
}

TEST_CASE("fillings of 3D cycles have the right boundary") {
    const CubicalChain c = word_to_cycle(parse_word("[[x,y],z] [y,z]^x", 3));
    const CubicalChain s = fill_cycle(c);
    CHECK(s.boundary() == c);
    CHECK(fill_cycle(c, {2, 1, 0}).boundary() == c);
}

TEST_CASE("geometric linking with lines") {
    const Line lx = make_line({1, 0}, "l_x", 0);
    const Line ly = make_line({0, 1}, "l_y", 1);
    const Line l0 = make_line({1, -1}, "l_0", 0);
    // P_x is the x-edge boundary pair in the relative picture, see plaquette_cell.
    const auto [px, sx] = plaquette_cell(Model::Relative2, 0);
    CubicalChain s(2, 1);
    s.add(px, sx);
    CHECK(intersection_linking(s, lx) == LaurentPoly::constant(2, 1));
    CHECK(intersection_linking(s, ly).is_zero());
    const LaurentPoly one_minus_y = LaurentPoly::one_minus(2, 1);
    CHECK(one_minus_y * intersection_linking(s, l0) == one_minus_y);

    // (x - y) P_x links trivially with the (1,1)-curve lift.
    const CubicalChain cyc = s.boundary().translated({1, 0}) - s.boundary().translated({0, 1});
    CHECK(geometric_linking(cyc, l0).is_zero());
}

TEST_CASE("linking is independent of the filling") {
    const Line l = make_line({1, 1, -2}, "l", 0);
    const CubicalChain c = word_to_cycle(parse_word("[[x,y],z]", 3));
    CHECK(geometric_linking(c, l, {0, 1, 2}) == geometric_linking(c, l, {2, 0, 1}));
}

TEST_CASE("lines") {
    CHECK_THROWS_AS(validate_line(make_line({2, 0}, "bad", 0)), InvalidInput);
    CHECK(lines_disjoint(make_line({1, 0, 0}, "a", 0), make_line({0, 1, 0}, "b", 1)));
    CHECK_FALSE(lines_disjoint(make_line({1, 0, 0}, "a", 0), make_line({1, 0, 0}, "b", 0)));
}

TEST_CASE("word cycles") {
    const CubicalChain sq = word_to_cycle(parse_word("[x,y]", 2));
    CHECK(sq == unit_square_boundary({0, 0}));
    CHECK(word_to_cycle(parse_word("[x,y]", 3)).cells().size() == 4);
    CHECK(word_to_cycle(parse_word("[[x,y],z]", 3)).cells().size() == 8);
    CHECK(word_to_cycle(parse_word("x x'", 2)).is_zero());
    CHECK_THROWS_AS(word_to_cycle(parse_word("x", 2)), InvalidInput);
}

TEST_CASE("cycles to plaquettes") {
    const PlaquetteChain zz = cycle_to_plaquettes(word_to_cycle(parse_word("[[x,y],z]", 3)), Model::Cubical3);
    CHECK(canonical(zz) == canonical(PlaquetteChain::generator(Model::Cubical3, 2, LaurentPoly::one_minus(3, 2))));

    const auto [cell, sign] = plaquette_cell(Model::Cubical3, 0);
    CubicalChain px(3, 2);
    px.add(cell, sign);
    CHECK(cycle_to_plaquettes(px.boundary(), Model::Cubical3) ==
          canonical(PlaquetteChain::generator(Model::Cubical3, 0, LaurentPoly::constant(3, 1))));

    const PlaquetteChain p = cycle_to_plaquettes(word_to_cycle(parse_word("[x,y][y,x]^y", 2)), Model::Planar2);
    CHECK(p == PlaquetteChain::generator(Model::Planar2, 0, LaurentPoly::one_minus(2, 1)));
}

TEST_CASE("grid cycles round trip through edge chains") {
    const EdgeChain e = j_boundary(PlaquetteChain::generator(Model::Cubical3, 1, parse_laurent("x - 2*y*z", 3)));
    CHECK(from_grid_cycle(to_grid_cycle(e), Model::Cubical3) == e);
}
