#include "donaldson/gluing.hpp"

#include <algorithm>
#include <map>

namespace donaldson {

namespace {

// Exact solve G x = b by Gaussian elimination; throws if G is singular.
std::vector<Rat> solve(std::vector<std::vector<Rat>> G, std::vector<Rat> b, const std::string& what) {
    const std::size_t n = G.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && G[piv][col] == 0) ++piv;
        if (piv == n)
            fail(ErrorKind::precondition,
                 "glued intersection form is degenerate; cannot solve for " + what);
        std::swap(G[piv], G[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || G[row][col] == 0) continue;
            Rat f = G[row][col] / G[col][col];
            for (std::size_t j = col; j < n; ++j) G[row][j] -= f * G[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / G[i][i];
    return x;
}

void check_config(const GluingConfig& cfg) {
    if (cfg.matched.empty()) fail(ErrorKind::precondition, "gluing: no matched classes");
    for (const auto& m : cfg.matched) {
        if (m.name == glued_sigma_name())
            fail(ErrorKind::precondition, "gluing: matched class may not be named 'Sigma'");
        if (*m.d1.lattice != *cfg.x1.lattice || *m.d2.lattice != *cfg.x2.lattice)
            fail(ErrorKind::precondition, "gluing: matched class '" + m.name +
                                              "' has pieces on the wrong lattices");
        Rat k1 = pair(cfg.x1.sigma, m.d1);
        Rat k2 = pair(cfg.x2.sigma, m.d2);
        if (k1 != k2)
            fail(ErrorKind::precondition, "gluing: Σ₁·d1 = " + rat_to_string(k1) + " but Σ₂·d2 = " +
                                              rat_to_string(k2) + " for matched class '" + m.name + "'");
        if (m.boundary == BoundaryKind::multiple_of_circle && m.circle_k != k1)
            fail(ErrorKind::precondition, "gluing: declared circle multiple k = " +
                                              rat_to_string(m.circle_k) + " but Σ·D = " +
                                              rat_to_string(k1) + " for '" + m.name + "'");
        if (m.boundary == BoundaryKind::curve_in_sigma && k1 != 0)
            fail(ErrorKind::precondition, "gluing: curve-in-Σ class '" + m.name +
                                              "' must have Σ·D = 0, got " + rat_to_string(k1));
    }
    for (const ManifoldRecord* X : {&cfg.x1, &cfg.x2}) {
        if (X->b1 != 0)
            fail(ErrorKind::precondition, "gluing: factor '" + X->name + "' has b1 != 0");
        if (X->b_plus <= 1)
            fail(ErrorKind::precondition, "gluing: factor '" + X->name + "' has b+ <= 1");
        if (!X->simple_type)
            fail(ErrorKind::precondition, "gluing: factor '" + X->name + "' is not of simple type");
    }
    if (cfg.mode == GlueMode::direct)
        for (const auto& m : cfg.matched)
            if (m.boundary != BoundaryKind::multiple_of_circle)
                fail(ErrorKind::precondition,
                     "gluing: direct mode requires every matched class to bound a multiple of the circle");
}

void check_w(const ManifoldRecord& X, const LatticeClass& w, const char* which) {
    if (!validate_allowable(w, X.sigma))
        fail(ErrorKind::precondition, std::string("gluing: (") + which + ", Σ) is not allowable on '" +
                                          X.name + "'");
}

struct SectorTerms {
    // Entries of one factor with K·Σ = +2 / −2, coefficients w-signed.
    std::vector<std::pair<const BasicClassEntry*, Rat>> plus, minus;
};

SectorTerms split_sectors(const ManifoldRecord& X, const LatticeClass& w) {
    SectorTerms out;
    for (const auto& e : X.structure.entries) {
        Rat ks = pair(e.k, X.sigma);
        if (!is_integer(ks) || is_odd(ks))
            fail(ErrorKind::precondition, "gluing: basic class with K·Σ odd on '" + X.name + "'");
        Rat signed_a = w_sign(e.k, w) * e.a;
        if (ks == 2) out.plus.emplace_back(&e, signed_a);
        else if (ks == -2) out.minus.emplace_back(&e, signed_a);
    }
    return out;
}

// Shared core of both gluing formulas. The output frequency class κ is solved
// from its pairings against every glued generator: κ·D_a = K·d1_a + L·d2_a
// (+ sector·2Σ·D_a in direct mode), κ·Σ = sector·2.
DSeries glue(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2,
             GlueMode mode) {
    check_config(cfg);
    if (cfg.mode != mode)
        fail(ErrorKind::precondition, "gluing: config mode does not match the formula requested");
    check_w(cfg.x1, w1, "w1");
    check_w(cfg.x2, w2, "w2");

    LatticePtr glat = glued_form(cfg);
    const std::size_t n = cfg.matched.size();

    SectorTerms s1 = split_sectors(cfg.x1, w1);
    SectorTerms s2 = split_sectors(cfg.x2, w2);

    std::vector<ExpTerm> terms;
    auto emit = [&](const BasicClassEntry& K, const Rat& a, const BasicClassEntry& L, const Rat& b,
                    int sector) {
        std::vector<Rat> pairings(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            pairings[i] = pair(K.k, cfg.matched[i].d1) + pair(L.k, cfg.matched[i].d2);
            if (mode == GlueMode::direct)
                pairings[i] += Rat(2 * sector) * pair(cfg.x1.sigma, cfg.matched[i].d1);
        }
        pairings[n] = Rat(2 * sector);
        std::vector<Rat> coords = solve(glat->gram(), pairings, "a glued basic class");
        ExpTerm t;
        t.q = 1;
        t.freq.assign(coords.begin(), coords.end());
        Rat magnitude = (mode == GlueMode::direct) ? Rat(32) : Rat(1, 2);
        t.coeff = GaussianRational(Rat(-sector) * magnitude * a * b);
        terms.push_back(std::move(t));
    };

    for (const auto& [K, a] : s1.plus)
        for (const auto& [L, b] : s2.plus) emit(*K, a, *L, b, +1);
    for (const auto& [K, a] : s1.minus)
        for (const auto& [L, b] : s2.minus) emit(*K, a, *L, b, -1);
    return DSeries(glat, std::move(terms));
}

} // namespace

LatticePtr glued_form(const GluingConfig& cfg) {
    check_config(cfg);
    const std::size_t n = cfg.matched.size();
    std::vector<std::string> gens;
    gens.reserve(n + 1);
    for (const auto& m : cfg.matched) gens.push_back(m.name);
    gens.push_back(glued_sigma_name());

    std::vector<std::vector<Rat>> gram(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = pair(cfg.matched[i].d1, cfg.matched[j].d1) +
                         pair(cfg.matched[i].d2, cfg.matched[j].d2);
        gram[i][n] = gram[n][i] = pair(cfg.x1.sigma, cfg.matched[i].d1);
    }
    std::string name = cfg.glued_name.empty() ? cfg.x1.name + "#" + cfg.x2.name : cfg.glued_name;
    return make_lattice(std::move(name), std::move(gens), std::move(gram));
}

DSeries glue_direct(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2) {
    return glue(cfg, w1, w2, GlueMode::direct);
}

DSeries glue_via_B(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2) {
    return glue(cfg, w1, w2, GlueMode::via_B);
}

ManifoldRecord glued_record(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2) {
    DSeries series = glue(cfg, w1, w2, cfg.mode);
    LatticePtr glat = series.lattice();

    ManifoldRecord X;
    X.name = cfg.glued_name.empty() ? cfg.x1.name + "#" + cfg.x2.name : cfg.glued_name;
    X.b1 = 0;
    // b+ additivity from the Euler-characteristic identity at genus 2. In via-B
    // mode the config holds the capped records X̃ᵢ = Xᵢ#B with b+(X̃ᵢ) = b+(Xᵢ)+6,
    // so b+(X) = b+(X̃₁) + b+(X̃₂) − 9.
    long b_plus = (cfg.mode == GlueMode::direct)
                      ? static_cast<long>(cfg.x1.b_plus) + cfg.x2.b_plus + 3
                      : static_cast<long>(cfg.x1.b_plus) + cfg.x2.b_plus - 9;
    if (b_plus <= 1)
        fail(ErrorKind::precondition,
             "gluing: via-B factors must be capped records (b+ at least 7 each)");
    X.b_plus = static_cast<unsigned>(b_plus);
    X.lattice = glat;
    X.sigma = LatticeClass::generator(glat, glued_sigma_name());
    X.simple_type = true;
    X.finite_type_order = 1;

    std::vector<Rat> wc(glat->rank(), Rat(0));
    for (const auto& [gen, c] : cfg.glued_w) wc[glat->index_of(gen)] = c;
    LatticeClass w(glat, std::move(wc));
    if (w.is_zero() || !validate_allowable(w, X.sigma))
        fail(ErrorKind::precondition, "gluing: manifest must declare a glued w with w·Σ odd");
    X.named_classes.emplace("w", w);
    for (const auto& m : cfg.matched)
        X.named_classes.emplace(m.name, LatticeClass::generator(glat, m.name));

    X.structure = from_DwS(dws_from_signed(series, X.sigma, d_zero(X, w)), X.sigma, d_zero(X, w), w);
    return X;
}

Rat pair_coefficient_sum(const ManifoldRecord& x1, const ManifoldRecord& x2, const LatticeClass& K,
                         const LatticeClass& L, const LatticeClass& w1, const LatticeClass& w2,
                         const std::vector<MatchedClass>& matched) {
    Rat ks = pair(K, x1.sigma);
    Rat ls = pair(L, x2.sigma);
    if (!(ks == ls && (ks == 2 || ks == -2))) return Rat(0);

    // Restriction to X° is approximated by the pairing signature against Σ and
    // every matched piece.
    auto signature1 = [&](const LatticeClass& k) {
        std::vector<Rat> sig{pair(k, x1.sigma)};
        for (const auto& m : matched) sig.push_back(pair(k, m.d1));
        return sig;
    };
    auto signature2 = [&](const LatticeClass& l) {
        std::vector<Rat> sig{pair(l, x2.sigma)};
        for (const auto& m : matched) sig.push_back(pair(l, m.d2));
        return sig;
    };

    Rat sum_a(0), sum_b(0);
    const auto want1 = signature1(K);
    for (const auto& e : x1.structure.entries)
        if (signature1(e.k) == want1) sum_a += w_sign(e.k, w1) * e.a;
    const auto want2 = signature2(L);
    for (const auto& e : x2.structure.entries)
        if (signature2(e.k) == want2) sum_b += w_sign(e.k, w2) * e.a;

    return Rat(ks == 2 ? -32 : 32) * sum_a * sum_b;
}

bool sigma_zero_check(const DSeries& s, const LatticeClass& sigma) {
    for (const auto& t : s.terms()) {
        if (t.q != 1) fail(ErrorKind::precondition, "sigma_zero_check: series is not in 𝔻-form");
        std::vector<Rat> coords;
        for (const auto& f : t.freq) {
            if (!f.is_real()) fail(ErrorKind::precondition, "sigma_zero_check: non-real frequency");
            coords.push_back(f.re);
        }
        if (pair(LatticeClass(s.lattice(), std::move(coords)), sigma) == 0) return false;
    }
    return true;
}

bool invariant_profile_compare(const DSeries& a, const LatticeClass& sigma_a, const DSeries& b,
                               const LatticeClass& sigma_b) {
    auto profile = [](const DSeries& s, const LatticeClass& sigma) {
        std::vector<std::pair<Rat, Rat>> out;  // (Σ-pairing, coefficient) multiset
        for (const auto& t : s.terms()) {
            if (t.q != 1 || !t.coeff.is_real())
                fail(ErrorKind::precondition, "invariant_profile_compare: series is not in 𝔻-form");
            std::vector<Rat> coords;
            for (const auto& f : t.freq) {
                if (!f.is_real())
                    fail(ErrorKind::precondition, "invariant_profile_compare: non-real frequency");
                coords.push_back(f.re);
            }
            Rat ks = pair(LatticeClass(s.lattice(), std::move(coords)), sigma);
            out.emplace_back(ks, t.coeff.re);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return profile(a, sigma_a) == profile(b, sigma_b);
}

} // namespace donaldson
