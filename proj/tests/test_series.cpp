#include <doctest.h>

#include "donaldson/catalog.hpp"
#include "donaldson/series.hpp"

using namespace donaldson;

namespace {

const ManifoldRecord& B() { return catalog_get("B").record; }

LatticeClass K_E1E2(int s1, int s2) {
    return LatticeClass(B().lattice, {Rat(0), Rat(s1), Rat(s2), Rat(0)});
}

} // namespace

TEST_CASE("canonicalize merges, cancels and drops zeros") {
    LatticePtr lat = B().lattice;
    LatticeClass K = K_E1E2(1, 1);
    DSeries cancel = DSeries::term(lat, Rat(1, 2), K, GaussianRational(Rat(1))) +
                     DSeries::term(lat, Rat(1, 2), K, GaussianRational(Rat(-1)));
    CHECK(cancel.is_zero());
    DSeries merged = DSeries::term(lat, Rat(1, 2), K, GaussianRational(Rat(1, 4))) +
                     DSeries::term(lat, Rat(1, 2), K, GaussianRational(Rat(1, 4)));
    CHECK(merged.size() == 1);
    CHECK(merged.terms()[0].coeff == GaussianRational(Rat(1, 2)));
}

TEST_CASE("canonical form is stable under reconstruction") {
    DSeries s = build_dseries(B(), B().named_class("w"));
    CHECK(s.size() == 4);
    // Rebuilding from the same terms in another order changes nothing.
    std::vector<ExpTerm> shuffled(s.terms().rbegin(), s.terms().rend());
    DSeries t(s.lattice(), std::move(shuffled));
    CHECK(s == t);
    CHECK(s.to_string() == t.to_string());
}

TEST_CASE("add has the zero series as identity") {
    DSeries s = build_dseries(B(), B().named_class("w"));
    CHECK(s + DSeries(B().lattice) == s);
}

TEST_CASE("mul adds exponents; inverse exponents collapse to the constant term") {
    LatticePtr lat = B().lattice;
    LatticeClass K = K_E1E2(1, 1);
    DSeries a = DSeries::term(lat, Rat(1), K, GaussianRational(Rat(1)));
    DSeries b = DSeries::term(lat, Rat(-1), -K, GaussianRational(Rat(1)));
    DSeries one = DSeries::term(lat, Rat(0), LatticeClass::zero(lat), GaussianRational(Rat(1)));
    CHECK(a * b == one);
}

TEST_CASE("sinh times twice cosh gives sinh of the doubled class") {
    LatticePtr lat = B().lattice;
    LatticeClass E1 = LatticeClass::generator(lat, "E1");
    GaussianRational half(Rat(1, 2));
    DSeries sinh_e1 = DSeries::term(lat, Rat(1), E1, half) +
                      DSeries::term(lat, Rat(1), -E1, -half);  // e^{Q/2} sinh(E1·α)
    DSeries two_cosh = DSeries::term(lat, Rat(0), E1, GaussianRational(Rat(1))) +
                       DSeries::term(lat, Rat(0), -E1, GaussianRational(Rat(1)));
    DSeries expected = DSeries::term(lat, Rat(1), Rat(2) * E1, half) +
                       DSeries::term(lat, Rat(1), Rat(-2) * E1, -half);
    CHECK(sinh_e1 * two_cosh == expected);
    CHECK((sinh_e1 * two_cosh).size() == 2);  // the middle terms cancel
}

TEST_CASE("series equality is structural and lattice-aware") {
    DSeries s = build_dseries(B(), B().named_class("w"));
    DSeries k3 = build_dseries(catalog_get("K3").record, catalog_get("K3").record.named_class("w"));
    CHECK(s != k3);
    CHECK_THROWS_AS(s + k3, Error);
}

TEST_CASE("project_parity at d0 divisible by four splits the gaussian") {
    LatticePtr lat = B().lattice;
    DSeries eq2 = DSeries::term(lat, Rat(1), LatticeClass::zero(lat), GaussianRational(Rat(1)));
    DSeries projected = project_parity(eq2, 0, +1);
    GaussianRational half(Rat(1, 2));
    DSeries expected = DSeries::term(lat, Rat(1), LatticeClass::zero(lat), half) +
                       DSeries::term(lat, Rat(-1), LatticeClass::zero(lat), half);
    CHECK(projected == expected);
}

TEST_CASE("project_parity is idempotent on already-projected series") {
    // On a series supported in degrees ≡ d0 (mod 4) a second projection with
    // the same d0 changes nothing; the catalog D^w series are such.
    for (const char* name : {"K3", "B", "C", "C2"}) {
        const ManifoldRecord& X = catalog_get(name).record;
        const LatticeClass& w = X.named_class("w");
        long d0 = d_zero(X, w);
        DSeries dw = project_parity(build_dseries(X, w), d0, +1);
        CHECK(project_parity(dw, d0, +1) == dw);
    }
}

TEST_CASE("canonical text rendering is pinned") {
    LatticePtr lat = B().lattice;
    DSeries s = DSeries::term(lat, Rat(1), K_E1E2(1, 1), GaussianRational(Rat(1, 2))) +
                DSeries::term(lat, Rat(-1),
                              {GaussianRational(), GaussianRational(Rat(0), Rat(1)),
                               GaussianRational(Rat(0), Rat(-1)), GaussianRational()},
                              GaussianRational(Rat(0), Rat(-3, 4)));
    CHECK(s.to_string() ==
          "(1/2) * exp((1)*Q/2 + (1)*E1 + (1)*E2) + "
          "(0-3/4i) * exp((-1)*Q/2 + (0+1i)*E1 + (0-1i)*E2)");
    CHECK(DSeries(lat).to_string() == "0");
}

TEST_CASE("conjugation symmetry detector") {
    LatticePtr lat = B().lattice;
    std::vector<GaussianRational> iK{GaussianRational(), GaussianRational(Rat(0), Rat(1)),
                                     GaussianRational(), GaussianRational()};
    std::vector<GaussianRational> miK{GaussianRational(), GaussianRational(Rat(0), Rat(-1)),
                                      GaussianRational(), GaussianRational()};
    DSeries sym = DSeries::term(lat, Rat(-1), iK, GaussianRational(Rat(1, 4))) +
                  DSeries::term(lat, Rat(-1), miK, GaussianRational(Rat(1, 4)));
    CHECK(sym.has_conjugation_symmetry());
    DSeries asym = DSeries::term(lat, Rat(-1), iK, GaussianRational(Rat(1, 4)));
    CHECK_FALSE(asym.has_conjugation_symmetry());
}
