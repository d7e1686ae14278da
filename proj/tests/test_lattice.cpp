#include <doctest.h>

#include "donaldson/catalog.hpp"
#include "donaldson/lattice.hpp"

using namespace donaldson;

namespace {

const ManifoldRecord& B() { return catalog_get("B").record; }

LatticeClass bcls(Rat s, Rat e1, Rat e2, Rat f) {
    return LatticeClass(B().lattice, {std::move(s), std::move(e1), std::move(e2), std::move(f)});
}

} // namespace

TEST_CASE("pairings on the B lattice") {
    LatticeClass E1 = LatticeClass::generator(B().lattice, "E1");
    LatticeClass sigma = B().sigma;
    CHECK(pair(E1, E1) == Rat(-1));
    CHECK(pair(sigma, sigma) == Rat(0));
    CHECK(pair(bcls(0, 1, 1, 0), sigma) == Rat(2));
    CHECK(pair(LatticeClass::generator(B().lattice, "F"), sigma) == Rat(1));
}

TEST_CASE("pair rejects classes from different lattices") {
    LatticeClass E1 = LatticeClass::generator(B().lattice, "E1");
    LatticeClass other = LatticeClass::generator(catalog_get("K3").record.lattice, "S");
    CHECK_THROWS_AS(pair(E1, other), Error);
}

TEST_CASE("validate_allowable") {
    LatticeClass sigma = B().sigma;
    CHECK(validate_allowable(LatticeClass::generator(B().lattice, "E1"), sigma));
    CHECK_FALSE(validate_allowable(bcls(0, 2, 0, 0), sigma));                      // even pairing
    CHECK_FALSE(validate_allowable(LatticeClass::generator(B().lattice, "E1"),
                                   LatticeClass::generator(B().lattice, "S")));    // S^2 = 2
    CHECK_THROWS_AS(validate_allowable(bcls(Rat(1, 2), 0, 0, 0), sigma), Error);   // non-integral
}

TEST_CASE("adjunction_check") {
    LatticeClass sigma = B().sigma;
    CHECK(adjunction_check(bcls(0, 1, 1, 0), sigma, 2));   // 2 >= 0 + 2
    CHECK(adjunction_check(bcls(0, 0, 0, 0), sigma, 1));   // 0 >= 0
    // A class pairing 4 with sigma: 2S·sigma = 4 exceeds the genus-2 bound.
    CHECK_FALSE(adjunction_check(bcls(2, 0, 0, 0), sigma, 2));
    // Bound not applicable when S^2 < 0.
    CHECK_THROWS_AS(adjunction_check(bcls(0, 1, 1, 0), LatticeClass::generator(B().lattice, "E1"), 2),
                    Error);
}

TEST_CASE("lattice construction rejects malformed input") {
    CHECK_THROWS_AS(make_lattice("bad", {"a", "b"}, {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}), Error);
    CHECK_THROWS_AS(make_lattice("bad", {"a", "a"}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}), Error);
    CHECK_THROWS_AS(make_lattice("bad", {"a"}, {{Rat(0), Rat(0)}}), Error);
    CHECK_THROWS_AS(make_lattice("bad", {}, {}), Error);
}

TEST_CASE("class rendering") {
    CHECK(B().sigma.to_string() == "S - E1 - E2");
    CHECK(bcls(0, -1, 0, 0).to_string() == "-E1");
    CHECK(bcls(Rat(1, 2), 0, 0, Rat(1, 2)).to_string() == "1/2*S + 1/2*F");
    CHECK(bcls(0, 0, 0, 0).to_string() == "0");
    CHECK(bcls(0, 2, -3, 0).to_string() == "2*E1 - 3*E2");
}

TEST_CASE("class arithmetic") {
    LatticeClass a = bcls(1, 0, 0, 1);
    LatticeClass b = bcls(0, 1, 1, 0);
    CHECK(a + b == bcls(1, 1, 1, 1));
    CHECK(a - b == bcls(1, -1, -1, 1));
    CHECK(Rat(1, 2) * a == bcls(Rat(1, 2), 0, 0, Rat(1, 2)));
    CHECK((-b).is_integral());
    CHECK_FALSE((Rat(1, 2) * b).is_integral());
    CHECK(LatticeClass::zero(B().lattice).is_zero());
}
