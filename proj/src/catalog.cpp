#include "donaldson/catalog.hpp"

#include <map>

namespace donaldson {

namespace {

LatticeClass cls(const LatticePtr& lat, std::vector<Rat> coords) {
    return LatticeClass(lat, std::move(coords));
}

CatalogEntry make_k3() {
    // Minimal sublattice: the tight genus-2 surface S (S² = 2) and a dual
    // disk-section class D (D² = 0, S·D = 1). The distinguished Σ is the
    // genus-2 surface of self-intersection zero, i.e. the D slot here.
    LatticePtr lat = make_lattice("K3", {"S", "D"}, {{Rat(2), Rat(1)}, {Rat(1), Rat(0)}});
    ManifoldRecord X;
    X.name = "K3";
    X.b1 = 0;
    X.b_plus = 3;
    X.lattice = lat;
    X.sigma = cls(lat, {Rat(0), Rat(1)});
    X.simple_type = true;
    X.finite_type_order = 1;
    X.structure.entries = {{cls(lat, {Rat(0), Rat(0)}), Rat(1)}};
    X.named_classes = {
        {"w", cls(lat, {Rat(1), Rat(-1)})},   // S - D, w² = 0
        {"wS", cls(lat, {Rat(1), Rat(0)})},   // S itself, w² = 2
        {"S", cls(lat, {Rat(1), Rat(0)})},
        {"D", cls(lat, {Rat(0), Rat(1)})},
    };
    CatalogEntry e;
    e.record = std::move(X);
    e.notes =
        "single basic class 0 with coefficient 1, back-derived from "
        "D^{(w,Sigma)}(e^{sS+tD}) = -e^{-ts} via the inverse transform; Sigma is a tight torus "
        "with an added trivial handle (genus 2, square 0).";
    return e;
}

CatalogEntry make_b() {
    // K3 blown up in two points; E1, E2 exceptional, F a fiber-like class from
    // the K3 with F·S = 1, Sigma = S - E1 - E2 the proper transform.
    LatticePtr lat = make_lattice("B", {"S", "E1", "E2", "F"},
                                  {{Rat(2), Rat(0), Rat(0), Rat(1)},
                                   {Rat(0), Rat(-1), Rat(0), Rat(0)},
                                   {Rat(0), Rat(0), Rat(-1), Rat(0)},
                                   {Rat(1), Rat(0), Rat(0), Rat(0)}});
    ManifoldRecord X;
    X.name = "B";
    X.b1 = 0;
    X.b_plus = 3;
    X.lattice = lat;
    X.sigma = cls(lat, {Rat(1), Rat(-1), Rat(-1), Rat(0)});
    X.simple_type = true;
    X.finite_type_order = 1;
    // sinh(E1·α)·sinh(E2·α): coefficients ±1/4 on ±E1±E2.
    X.structure.entries = {
        {cls(lat, {Rat(0), Rat(1), Rat(1), Rat(0)}), Rat(1, 4)},
        {cls(lat, {Rat(0), Rat(1), Rat(-1), Rat(0)}), Rat(-1, 4)},
        {cls(lat, {Rat(0), Rat(-1), Rat(1), Rat(0)}), Rat(-1, 4)},
        {cls(lat, {Rat(0), Rat(-1), Rat(-1), Rat(0)}), Rat(1, 4)},
    };
    X.named_classes = {
        {"w", cls(lat, {Rat(0), Rat(0), Rat(0), Rat(1)})},     // F: w·E1 = w·E2 = 0, w² = 0
        {"F", cls(lat, {Rat(0), Rat(0), Rat(0), Rat(1)})},
        {"wE1", cls(lat, {Rat(0), Rat(1), Rat(0), Rat(0)})},   // the blow-up w
        {"wK3", cls(lat, {Rat(1), Rat(0), Rat(0), Rat(-1)})},  // S - F: from the K3, w·S = 1, w² = 0
    };
    CatalogEntry e;
    e.record = std::move(X);
    e.notes =
        "D-series e^{Q/2} sinh(E1.a) sinh(E2.a); exceptional divisors have square -1; "
        "F is the elliptic-fiber class with F·Sigma = 1.";
    return e;
}

CatalogEntry make_c() {
    // C = B #_Sigma B. Named generators: D the double fiber (two B-fibers
    // pieced together), K the unique positive basic class (declared pairings
    // K·Sigma = K·D = 2, K² = 4), DC the K-normalized double-capping class
    // (K·DC = 0, Sigma·DC = 1, DC² = 0) used by capped match manifests.
    LatticePtr lat = make_lattice("C", {"D", "Sigma", "K", "DC"},
                                  {{Rat(0), Rat(1), Rat(2), Rat(0)},
                                   {Rat(1), Rat(0), Rat(2), Rat(1)},
                                   {Rat(2), Rat(2), Rat(4), Rat(0)},
                                   {Rat(0), Rat(1), Rat(0), Rat(0)}});
    ManifoldRecord X;
    X.name = "C";
    X.b1 = 0;
    X.b_plus = 9;
    X.lattice = lat;
    X.sigma = cls(lat, {Rat(0), Rat(1), Rat(0), Rat(0)});
    X.simple_type = true;
    X.finite_type_order = 1;
    X.structure.entries = {
        {cls(lat, {Rat(0), Rat(0), Rat(1), Rat(0)}), Rat(2)},
        {cls(lat, {Rat(0), Rat(0), Rat(-1), Rat(0)}), Rat(-2)},
    };
    X.named_classes = {
        {"w", cls(lat, {Rat(1), Rat(0), Rat(0), Rat(0)})},  // P.D.[D]
        {"D", cls(lat, {Rat(1), Rat(0), Rat(0), Rat(0)})},
        {"DC", cls(lat, {Rat(0), Rat(0), Rat(0), Rat(1)})},
        {"Dcap", cls(lat, {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)})},  // capping of a single-fiber chain
    };
    CatalogEntry e;
    e.record = std::move(X);
    e.notes =
        "D^{(w,Sigma)}(e^a) = -4 e^{Q/2} sinh(K.a), w-signed coefficients (-2, +2), stored "
        "unsigned as (+2, -2) for w = D; b+ = 9 so d0(C, D) = -15 (odd); DC is the class the "
        "capping normalization D_B.K = 0 produces, Dcap = (D+DC)/2 its single-fiber analogue "
        "with K·Dcap = 1.";
    return e;
}

CatalogEntry make_c2() {
    LatticePtr lat = make_lattice("C2", {"D2", "Sigma", "K2", "DC2"},
                                  {{Rat(0), Rat(1), Rat(2), Rat(0)},
                                   {Rat(1), Rat(0), Rat(2), Rat(1)},
                                   {Rat(2), Rat(2), Rat(6), Rat(0)},
                                   {Rat(0), Rat(1), Rat(0), Rat(0)}});
    ManifoldRecord X;
    X.name = "C2";
    X.b1 = 0;
    X.b_plus = 15;
    X.lattice = lat;
    X.sigma = cls(lat, {Rat(0), Rat(1), Rat(0), Rat(0)});
    X.simple_type = true;
    X.finite_type_order = 1;
    X.structure.entries = {
        {cls(lat, {Rat(0), Rat(0), Rat(1), Rat(0)}), Rat(-16)},
        {cls(lat, {Rat(0), Rat(0), Rat(-1), Rat(0)}), Rat(-16)},
    };
    X.named_classes = {
        {"w", cls(lat, {Rat(1), Rat(0), Rat(0), Rat(0)})},
        {"D2", cls(lat, {Rat(1), Rat(0), Rat(0), Rat(0)})},
        {"DC2", cls(lat, {Rat(0), Rat(0), Rat(0), Rat(1)})},
        {"Dcap", cls(lat, {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)})},   // K2·Dcap = 1, single-fiber capping
        {"capD", cls(lat, {Rat(3, 2), Rat(0), Rat(0), Rat(-1, 2)})},  // K2·capD = 3, double-fiber capping
    };
    CatalogEntry e;
    e.record = std::move(X);
    e.notes =
        "D^{(w,Sigma)}(e^a) = 32 e^{Q/2} cosh(K2.a), w-signed coefficients (16, 16), stored "
        "unsigned as (-16, -16) for w = D2; K2² = 6 declared (2 per B-piece), unused by any "
        "operation; DC2 is the normalized double-capping, Dcap = (D2 + DC2)/2 and "
        "capD = (3 D2 - DC2)/2 the cappings of a single-fiber and of the C-side double-fiber piece.";
    return e;
}

CatalogEntry make_sigma_cp1() {
    LatticePtr lat =
        make_lattice("SigmaCP1", {"Sigma", "CP1"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    ManifoldRecord X;
    X.name = "SigmaCP1";
    X.b1 = 4;  // b1 of a genus-2 surface times CP1
    X.b_plus = 1;
    X.lattice = lat;
    X.sigma = cls(lat, {Rat(1), Rat(0)});
    X.simple_type = false;
    X.finite_type_order = 2;
    X.chamber = "sigma";
    X.monomials = {{0, Rat(0)}, {1, Rat(0)},     {2, Rat(0)}, {3, Rat(-1, 2)},
                   {4, Rat(0)}, {5, Rat(-2)},    {6, Rat(0)}};
    X.named_classes = {
        {"w", cls(lat, {Rat(0), Rat(1)})},  // P.D.[CP1]
        {"CP1", cls(lat, {Rat(0), Rat(1)})},
    };
    X.extra_constants = {
        {"epsilon_s_w", Rat(-1)},            // the orientation factor folded into the stored values
        {"gamma_pairing_coefficient", Rat(-1)},  // D(γ₁γ₂) = ε(w)·γ₁·γ₂ with ε(w) = -1
    };
    CatalogEntry e;
    e.record = std::move(X);
    e.notes =
        "b+ = 1, invariants taken in the chamber of Sigma; full series never constructed. "
        "Monomial table D^{(w,Sigma)}(Sigma^d): d=3 -> -1/2 (six-dimensional moduli space, "
        "complex orientation corrected by epsilon = -1), d=5 -> -2 (wall-crossing value), "
        "even degrees and d=1 vanish; d0(S, CP1) = 3.";
    return e;
}

} // namespace

const CatalogEntry& catalog_get(const std::string& name) {
    static const std::map<std::string, CatalogEntry> entries = [] {
        std::map<std::string, CatalogEntry> m;
        m.emplace("K3", make_k3());
        m.emplace("B", make_b());
        m.emplace("C", make_c());
        m.emplace("C2", make_c2());
        m.emplace("SigmaCP1", make_sigma_cp1());
        return m;
    }();
    auto it = entries.find(name);
    if (it == entries.end())
        fail(ErrorKind::precondition,
             "unknown catalog entry '" + name + "' (have: K3, B, C, C2, SigmaCP1)");
    return it->second;
}

std::vector<std::string> catalog_names() { return {"K3", "B", "C", "C2", "SigmaCP1"}; }

} // namespace donaldson
