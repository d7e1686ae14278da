#include <doctest.h>

#include "donaldson/expansion.hpp"
#include "donaldson/verify.hpp"

using namespace donaldson;

TEST_CASE("catalog lookup") {
    CHECK(catalog_names().size() == 5);
    CHECK_THROWS_AS(catalog_get("E8"), Error);
    for (const auto& name : catalog_names()) {
        const CatalogEntry& e = catalog_get(name);
        CHECK(e.record.name == name);
        CHECK_FALSE(e.notes.empty());
        CHECK(validate_structure(e.record).empty());
    }
}

TEST_CASE("B carries four classes of magnitude 1/4") {
    const ManifoldRecord& B = catalog_get("B").record;
    REQUIRE(B.structure.entries.size() == 4);
    for (const auto& e : B.structure.entries) CHECK(abs(e.a) == Rat(1, 4));
}

TEST_CASE("K3 carries the single trivial class") {
    const ManifoldRecord& K3 = catalog_get("K3").record;
    REQUIRE(K3.structure.entries.size() == 1);
    CHECK(K3.structure.entries[0].k.is_zero());
    CHECK(K3.structure.entries[0].a == Rat(1));
}

TEST_CASE("the ruled-surface monomial table") {
    const ManifoldRecord& S = catalog_get("SigmaCP1").record;
    CHECK(S.monomials.at(1) == Rat(0));
    CHECK(S.monomials.at(3) == Rat(-1, 2));
    CHECK(S.monomials.at(5) == Rat(-2));
    CHECK(S.chamber == "sigma");
    CHECK_FALSE(S.simple_type);
    CHECK(S.extra_constants.at("epsilon_s_w") == Rat(-1));
    CHECK(d_zero(S, S.named_class("w")) == 3);
}

TEST_CASE("declared pairings of the doubled manifolds") {
    const ManifoldRecord& C = catalog_get("C").record;
    LatticeClass K = LatticeClass::generator(C.lattice, "K");
    CHECK(pair(K, C.sigma) == Rat(2));
    CHECK(pair(K, C.named_class("D")) == Rat(2));
    CHECK(pair(K, K) == Rat(4));
    CHECK(pair(K, C.named_class("DC")) == Rat(0));
    CHECK(pair(C.named_class("DC"), C.named_class("DC")) == Rat(0));
    CHECK(pair(C.named_class("Dcap"), C.named_class("Dcap")) == Rat(0));
    CHECK(pair(K, C.named_class("Dcap")) == Rat(1));

    const ManifoldRecord& C2 = catalog_get("C2").record;
    LatticeClass K2 = LatticeClass::generator(C2.lattice, "K2");
    CHECK(pair(K2, C2.sigma) == Rat(2));
    CHECK(pair(K2, C2.named_class("D2")) == Rat(2));
    CHECK(pair(K2, C2.named_class("Dcap")) == Rat(1));
    CHECK(pair(K2, C2.named_class("capD")) == Rat(3));
    CHECK(pair(C2.named_class("capD"), C2.named_class("capD")) == Rat(0));
}

TEST_CASE("C is regenerated from B alone through the gluing pipeline") {
    GluingConfig cfg = catalog_glue_config("BB");
    ManifoldRecord glued = glued_record(cfg, cfg.x1.named_class("w"), cfg.x2.named_class("w"));
    const ManifoldRecord& C = catalog_get("C").record;
    CHECK(invariant_profile_compare(build_dseries(glued, glued.named_class("w")), glued.sigma,
                                    build_dseries(C, C.named_class("w")), C.sigma));
    CHECK(glued.b_plus == C.b_plus);
    // The recovered classes pair with the glued D exactly as K pairs with D.
    for (const auto& e : glued.structure.entries)
        CHECK(abs(pair(e.k, glued.named_class("D"))) == Rat(2));
}

TEST_CASE("C2 is regenerated from the (C, B) gluing") {
    GluingConfig cfg = catalog_glue_config("CB");
    ManifoldRecord glued = glued_record(cfg, cfg.x1.named_class("w"), cfg.x2.named_class("w"));
    const ManifoldRecord& C2 = catalog_get("C2").record;
    CHECK(invariant_profile_compare(build_dseries(glued, glued.named_class("w")), glued.sigma,
                                    build_dseries(C2, C2.named_class("w")), C2.sigma));
    CHECK(glued.b_plus == C2.b_plus);
}
