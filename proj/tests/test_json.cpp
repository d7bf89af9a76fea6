#include <doctest.h>

#include "fillcert/errors.hpp"
#include "fillcert/json_io.hpp"

using namespace fillcert;

TEST_CASE("link round trip") {
    const LinkSpec l = standard_link(3, 3);
    const LinkSpec back = link_from_json(Json::parse(to_json(l).dump()));
    REQUIRE(back.components.size() == l.components.size());
    for (size_t i = 0; i < l.components.size(); ++i) {
        CHECK(back.components[i].direction == l.components[i].direction);
        CHECK(back.components[i].label == l.components[i].label);
        CHECK(back.components[i].offset_seed == l.components[i].offset_seed);
    }
    CHECK_THROWS_AS(link_from_json(Json::parse(R"({"dim":2,"components":[{"direction":[1,0,0]}]})")), InvalidInput);
    CHECK_THROWS_AS(link_from_json(Json::parse(R"({"components":[]})")), InvalidInput);
}

TEST_CASE("matrix round trip") {
    const LinkingMatrix m = build_matrix(2, standard_link(2, 2), MatrixMode::ClosedForm);
    const Json j = to_json(m);
    CHECK(j["entries"] == Json::parse("[[1,0,1,8],[0,1,1,1],[0,0,1,2],[0,0,1,4]]"));
    const LinkingMatrix back = matrix_from_json(Json::parse(j.dump()));
    CHECK(back.entries == m.entries);
    CHECK(back.rows == m.rows);
    CHECK(back.cols == m.cols);
    CHECK(back.k == 2);
}

TEST_CASE("certificate round trip") {
    const Certificate c = certify_filling(5, 3, {true, false, -1, 1});
    const Certificate back = certificate_from_json(Json::parse(to_json(c).dump()));
    CHECK(to_json(back) == to_json(c));
    CHECK(back.degrees.size() == 3);
    CHECK(back.degrees[2].matrix.entries == c.degrees[2].matrix.entries);
}

TEST_CASE("finger map round trip") {
    const LinkSpec l = standard_link(2, 3);
    const FingerMoveMap f = random_finger_map(17, 2, 2, l);
    const FingerReplay r{2, 17, l, f};
    const FingerReplay back = replay_from_json(Json::parse(to_json(r).dump()));
    CHECK(to_json(back) == to_json(r));
    CHECK(back.seed == 17);
    for (size_t g = 0; g < f.assignments.size(); ++g)
        for (const auto& comp : l.components)
            CHECK(back.map.assignments[g].coefficient(comp.label) == f.assignments[g].coefficient(comp.label));
}
