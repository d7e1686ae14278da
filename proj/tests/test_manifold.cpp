#include <doctest.h>

#include "donaldson/catalog.hpp"
#include "donaldson/manifold.hpp"

using namespace donaldson;

namespace {

const ManifoldRecord& R(const char* name) { return catalog_get(name).record; }

} // namespace

TEST_CASE("d_zero on catalog records") {
    const ManifoldRecord& B = R("B");
    CHECK(d_zero(B, B.named_class("wE1")) == -5);
    CHECK(d_zero(B, B.named_class("w")) == -6);
    const ManifoldRecord& K3 = R("K3");
    CHECK(d_zero(K3, K3.named_class("w")) == -6);
    // The doubled manifold: d0(C, D) = -15 (odd), driven by b+ = 9.
    const ManifoldRecord& C = R("C");
    CHECK(d_zero(C, C.named_class("w")) == -15);
    // With b+ = 7 the same formula would give -12; kept as a plain formula check.
    ManifoldRecord synthetic = C;
    synthetic.b_plus = 7;
    CHECK(d_zero(synthetic, synthetic.named_class("w")) == -12);
}

TEST_CASE("d_zero rejects corrupt parity data") {
    ManifoldRecord bad = R("B");
    bad.b_plus = 2;  // b+ - b1 even: d0 would be half-integral
    CHECK_THROWS_AS(d_zero(bad, bad.named_class("w")), Error);
}

TEST_CASE("build_dseries produces the sinh-sinh expansion of B") {
    const ManifoldRecord& B = R("B");
    DSeries s = build_dseries(B, B.named_class("w"));
    REQUIRE(s.size() == 4);
    // w = F pairs 0 with every E, so all signs are +1 and the coefficients
    // are the stored ±1/4.
    for (const auto& t : s.terms()) {
        CHECK(t.q == Rat(1));
        CHECK(abs(t.coeff.re) == Rat(1, 4));
        CHECK(t.coeff.im == 0);
    }
}

TEST_CASE("build_dseries of K3 is a single gaussian term") {
    const ManifoldRecord& K3 = R("K3");
    DSeries s = build_dseries(K3, K3.named_class("w"));
    DSeries expected =
        DSeries::term(K3.lattice, Rat(1), LatticeClass::zero(K3.lattice), GaussianRational(Rat(1)));
    CHECK(s == expected);
}

TEST_CASE("build_dseries of an empty structure is the zero series") {
    ManifoldRecord X = R("B");
    X.structure.entries.clear();
    CHECK(build_dseries(X, X.named_class("w")).is_zero());
}

TEST_CASE("build_dseries preconditions") {
    const ManifoldRecord& S = R("SigmaCP1");
    CHECK_THROWS_AS(build_dseries(S, S.named_class("w")), Error);  // chamber record

    // A non-characteristic w makes K·w + w² odd.
    LatticePtr lat = make_lattice("toy", {"A", "Sig"}, {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}});
    ManifoldRecord toy;
    toy.name = "toy";
    toy.b1 = 0;
    toy.b_plus = 3;
    toy.lattice = lat;
    toy.sigma = LatticeClass::generator(lat, "Sig");
    toy.simple_type = true;
    toy.structure.entries = {{LatticeClass::generator(lat, "A"), Rat(1)},
                             {-LatticeClass::generator(lat, "A"), Rat(1)}};
    CHECK_THROWS_AS(build_dseries(toy, toy.sigma), Error);  // A·Sig + Sig² = 1
}

TEST_CASE("to_DwS matches the project_parity composition") {
    // D^{(w,Σ)} = D^w + D^{w+Σ} with D^w the +1 projection and D^{w+Σ} the -1
    // projection at the same d0.
    for (const char* name : {"B", "K3", "C", "C2"}) {
        const ManifoldRecord& X = R(name);
        const LatticeClass& w = X.named_class("w");
        long d0 = d_zero(X, w);
        DSeries composed = project_parity(build_dseries(X, w), d0, +1) +
                           project_parity(build_dseries(X, w + X.sigma), d0, -1);
        CHECK(to_DwS(X, w) == composed);
    }
}

TEST_CASE("to_DwS requires an allowable pair") {
    const ManifoldRecord& B = R("B");
    LatticeClass even_w = Rat(2) * B.named_class("w");
    CHECK_THROWS_AS(to_DwS(B, even_w), Error);
}

TEST_CASE("from_DwS inverts to_DwS on the blown-up K3") {
    const ManifoldRecord& B = R("B");
    const LatticeClass& w = B.named_class("w");
    SimpleTypeStructure st = from_DwS(to_DwS(B, w), B.sigma, d_zero(B, w), w);
    REQUIRE(st.entries.size() == 4);
    LatticeClass Kpp(B.lattice, {Rat(0), Rat(1), Rat(1), Rat(0)});
    LatticeClass Kpm(B.lattice, {Rat(0), Rat(1), Rat(-1), Rat(0)});
    CHECK(st.coefficient_of(Kpp) == Rat(1, 4));
    CHECK(st.coefficient_of(-Kpp) == Rat(1, 4));
    CHECK(st.coefficient_of(Kpm) == Rat(-1, 4));
    CHECK(st.coefficient_of(-Kpm) == Rat(-1, 4));
}

TEST_CASE("from_DwS of the zero series is the empty structure") {
    const ManifoldRecord& B = R("B");
    CHECK(from_DwS(DSeries(B.lattice), B.sigma, -6, B.named_class("w")).empty());
}

TEST_CASE("from_DwS recovers the sinh structure of C") {
    const ManifoldRecord& C = R("C");
    // -4 e^{Q/2} sinh(K·α) as the already-transformed series (all K·Σ = ±2).
    LatticeClass K(C.lattice, {Rat(0), Rat(0), Rat(1), Rat(0)});
    DSeries s = DSeries::term(C.lattice, Rat(1), K, GaussianRational(Rat(-2))) +
                DSeries::term(C.lattice, Rat(1), -K, GaussianRational(Rat(2)));
    SimpleTypeStructure st = from_DwS(s, C.sigma, d_zero(C, C.named_class("w")), C.named_class("w"));
    REQUIRE(st.entries.size() == 2);
    CHECK(abs(*st.coefficient_of(K)) == Rat(2));
    CHECK(abs(*st.coefficient_of(-K)) == Rat(2));
}

TEST_CASE("from_DwS rejects malformed sector shapes") {
    const ManifoldRecord& B = R("B");
    DSeries bad_q = DSeries::term(B.lattice, Rat(2), LatticeClass::zero(B.lattice),
                                  GaussianRational(Rat(1)));
    CHECK_THROWS_WITH_AS(from_DwS(bad_q, B.sigma, -6, B.named_class("w")),
                         doctest::Contains("malformed sector shape"), Error);
    // q = +1 needs K·Σ ≡ 2 (mod 4): the zero frequency fails.
    DSeries bad_sector = DSeries::term(B.lattice, Rat(1), LatticeClass::zero(B.lattice),
                                       GaussianRational(Rat(1)));
    CHECK_THROWS_AS(from_DwS(bad_sector, B.sigma, -6, B.named_class("w")), Error);
}

TEST_CASE("validate_structure accepts the catalog and flags broken records") {
    CHECK(validate_structure(R("B")).empty());

    ManifoldRecord missing_mirror = R("B");
    missing_mirror.structure.entries.resize(1);  // keep only E1+E2
    auto v1 = validate_structure(missing_mirror);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].find("missing mirror") != std::string::npos);

    ManifoldRecord odd_pairing = R("B");
    // E1 pairs 1 with sigma: flagged both as odd and (trivially) adjunction-safe.
    odd_pairing.structure.entries = {
        {LatticeClass::generator(odd_pairing.lattice, "E1"), Rat(1)},
        {-LatticeClass::generator(odd_pairing.lattice, "E1"), Rat(1)}};
    auto v2 = validate_structure(odd_pairing);
    CHECK(!v2.empty());
    CHECK(v2[0].find("odd") != std::string::npos);

    ManifoldRecord broken_sign = R("C");
    broken_sign.structure.entries[1].a = Rat(2);  // should be -2 under the odd parity sign
    auto v3 = validate_structure(broken_sign);
    REQUIRE(!v3.empty());
    CHECK(v3[0].find("symmetry") != std::string::npos);

    ManifoldRecord bad_sigma = R("B");
    bad_sigma.sigma = LatticeClass::generator(bad_sigma.lattice, "S");
    auto v4 = validate_structure(bad_sigma);
    REQUIRE(!v4.empty());
    CHECK(v4[0].find("Σ²") != std::string::npos);
}

TEST_CASE("structure symmetry parity follows (3/2)(1 - b1 + b+)") {
    CHECK(structure_symmetry_parity(R("B")) == 0);   // (3/2)·4 = 6
    CHECK(structure_symmetry_parity(R("C")) == 1);   // (3/2)·10 = 15
    CHECK(structure_symmetry_parity(R("C2")) == 0);  // (3/2)·16 = 24
}
