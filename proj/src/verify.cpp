#include "donaldson/verify.hpp"

#include <functional>
#include <sstream>

#include "donaldson/expansion.hpp"
#include "donaldson/floer.hpp"

namespace donaldson {

namespace {

// ---------------------------------------------------------------------------
// Expected-value builders
// ---------------------------------------------------------------------------

// Model lattice {Dm, Sm} with Dm² = Sm² = 0, Dm·Sm = 1, so that
// Q(t·Dm + s·Sm)/2 = ts. Expected closed forms c·e^{q·ts + at + bs} become
// series terms on it.
LatticePtr model_lattice() {
    static LatticePtr lat = make_lattice("model", {"Dm", "Sm"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    return lat;
}

struct ModelTerm {
    Rat q;      // coefficient of ts
    Rat a;      // coefficient of t
    Rat b;      // coefficient of s
    Rat coeff;
};

DSeries model_series(const std::vector<ModelTerm>& terms) {
    LatticePtr lat = model_lattice();
    std::vector<ExpTerm> out;
    for (const auto& m : terms) {
        // freq f with f·Dm = a, f·Sm = b means f = b·Dm + a·Sm.
        out.push_back(ExpTerm{m.q, {GaussianRational(m.b), GaussianRational(m.a)}, GaussianRational(m.coeff)});
    }
    return DSeries(lat, std::move(out));
}

ExpansionTable model_table(const std::vector<ModelTerm>& terms, unsigned degree) {
    LatticePtr lat = model_lattice();
    return expand(model_series(terms), {{"t", LatticeClass::generator(lat, "Dm")},
                                        {"s", LatticeClass::generator(lat, "Sm")}},
                  degree);
}

// ---------------------------------------------------------------------------
// Small helpers over catalog data
// ---------------------------------------------------------------------------

const ManifoldRecord& rec(const std::string& name) { return catalog_get(name).record; }

// The w classes each catalog record is exercised with.
std::vector<std::string> ws_for(const std::string& name) {
    if (name == "K3") return {"w", "wS"};
    if (name == "B") return {"w", "wE1", "wK3"};
    return {"w"};
}

std::vector<std::string> simple_type_entries() { return {"K3", "B", "C", "C2"}; }

ExpansionTable expand_ts(const DSeries& s, const LatticeClass& t_dir, const LatticeClass& s_dir,
                         unsigned degree) {
    return expand(s, {{"t", t_dir}, {"s", s_dir}}, degree);
}

// D^{(w,Σ)} view of a glued configuration, with its record and ray direction.
struct GluedView {
    ManifoldRecord record;
    DSeries dws;          // equals the 𝔻 series when no K·Σ = 0 classes occur
    LatticeClass d_gen;   // the first matched generator on the glued lattice
    LatticeClass sigma;
};

GluedView glued_view(const std::string& key, const LatticeClass* w1 = nullptr,
                     const LatticeClass* w2 = nullptr) {
    GluingConfig cfg = catalog_glue_config(key);
    const LatticeClass& u1 = w1 ? *w1 : cfg.x1.named_class("w");
    const LatticeClass& u2 = w2 ? *w2 : cfg.x2.named_class("w");
    ManifoldRecord record = glued_record(cfg, u1, u2);
    DSeries series = (cfg.mode == GlueMode::direct) ? glue_direct(cfg, u1, u2) : glue_via_B(cfg, u1, u2);
    DSeries dws = dws_from_signed(series, record.sigma, d_zero(record, record.named_class("w")));
    LatticeClass d_gen = LatticeClass::generator(record.lattice, cfg.matched.front().name);
    LatticeClass sigma = record.sigma;
    return GluedView{std::move(record), std::move(dws), std::move(d_gen), std::move(sigma)};
}

std::string table_diff(const ExpansionTable& got, const ExpansionTable& expected) {
    std::ostringstream os;
    os << "expected:\n" << expected.to_string() << "got:\n" << got.to_string();
    return os.str();
}

// Multiset of (coefficient, K·Σ, K·D) triples of a 𝔻-form series; the
// rename-insensitive comparison used for catalog regeneration.
std::vector<std::array<Rat, 3>> structure_profile(const DSeries& s, const LatticeClass& sigma,
                                                  const LatticeClass& D) {
    std::vector<std::array<Rat, 3>> out;
    for (const auto& t : s.terms()) {
        std::vector<Rat> coords;
        for (const auto& f : t.freq) coords.push_back(f.re);
        LatticeClass K(s.lattice(), std::move(coords));
        out.push_back({t.coeff.re, pair(K, sigma), pair(K, D)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Built-in gluing configurations
// ---------------------------------------------------------------------------

GluingConfig catalog_glue_config(const std::string& key) {
    auto make = [](const std::string& x1, const std::string& x2, const std::string& d1_expr,
                   const std::string& d2_expr, GlueMode mode, const std::string& name,
                   const std::string& matched_name) {
        GluingConfig cfg;
        cfg.x1 = rec(x1);
        cfg.x2 = rec(x2);
        MatchedClass m;
        m.name = matched_name;
        m.d1 = cfg.x1.named_class(d1_expr);
        m.d2 = cfg.x2.named_class(d2_expr);
        m.boundary = BoundaryKind::multiple_of_circle;
        m.circle_k = pair(cfg.x1.sigma, m.d1);
        cfg.matched.push_back(std::move(m));
        cfg.mode = mode;
        cfg.glued_name = name;
        cfg.glued_w = {{matched_name, Rat(1)}};
        return cfg;
    };
    if (key == "BB") return make("B", "B", "F", "F", GlueMode::direct, "C", "D");
    if (key == "CB") return make("C", "B", "DC", "F", GlueMode::direct, "C2", "D2");
    if (key == "BC") return make("B", "C", "F", "D", GlueMode::direct, "BC", "D");
    if (key == "CC") return make("C", "C", "D", "D", GlueMode::direct, "CC", "D");
    if (key == "K3B") return make("K3", "B", "S", "F", GlueMode::direct, "K3B", "D");
    if (key == "BB-viaB") return make("C", "C", "Dcap", "Dcap", GlueMode::via_B, "C", "D");
    if (key == "BC-viaB") return make("C", "C2", "Dcap", "capD", GlueMode::via_B, "BC", "D");
    if (key == "CB-viaB") return make("C2", "C", "Dcap", "Dcap", GlueMode::via_B, "C2", "D2");
    if (key == "CC-viaB") return make("C2", "C2", "capD", "capD", GlueMode::via_B, "CC", "D");
    fail(ErrorKind::precondition, "unknown gluing configuration '" + key + "'");
}

std::vector<std::string> catalog_glue_config_names() {
    return {"BB", "CB", "BC", "CC", "K3B", "BB-viaB", "BC-viaB", "CB-viaB", "CC-viaB"};
}

// ---------------------------------------------------------------------------
// The checks
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_paper_checks() {
    std::vector<CheckResult> results;
    auto check = [&](const std::string& id, const std::string& label,
                     const std::function<std::string()>& body) {
        CheckResult r;
        r.id = id;
        r.label = label;
        try {
            r.detail = body();  // empty string = pass
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };

    // 1. Gram reconstruction from the SigmaCP1 monomial table.
    check("1", "N rebuilt from SigmaCP1 monomial table, all 16 entries", [] {
        RatMatrix got = gram_from_monomials(rec("SigmaCP1").monomials);
        if (got != gram_v4()) return std::string("rebuilt matrix differs from N");
        return std::string();
    });

    // 2. The l = -32 pipeline.
    check("2", "pair_v4((1/2,0,2,0),(0,2,0,8)) = -8 and verify_l() = -32", [] {
        DSeries d = pair_v4(relvec_from_constants({Rat(1, 2), Rat(0), Rat(2), Rat(0)}),
                            relvec_from_constants({Rat(0), Rat(2), Rat(0), Rat(8)}));
        DSeries expected = DSeries::term(ray_lattice(), Rat(0), {GaussianRational()},
                                         GaussianRational(Rat(-8)));
        if (d != expected) return "pairing gave " + d.to_string();
        if (verify_l() != -32) return std::string("verify_l drifted");
        return std::string();
    });

    // 3. The two-sector series for B at the fiber w.
    check("3", "D^{(w,S)}_B = e^{Q/2} (1/2)cosh((E1+E2)a) + e^{-Q/2} (1/2)cos((E1-E2)a)", [] {
        const ManifoldRecord& B = rec("B");
        DSeries got = to_DwS(B, B.named_class("w"));
        LatticePtr lat = B.lattice;
        auto K = [&](Rat e1, Rat e2) {
            return LatticeClass(lat, {Rat(0), std::move(e1), std::move(e2), Rat(0)});
        };
        auto iK = [&](Rat e1, Rat e2) {
            return std::vector<GaussianRational>{GaussianRational(), GaussianRational(Rat(0), e1),
                                                 GaussianRational(Rat(0), e2), GaussianRational()};
        };
        GaussianRational quarter(Rat(1, 4));
        DSeries expected = DSeries::term(lat, Rat(1), K(1, 1), quarter) +
                           DSeries::term(lat, Rat(1), K(-1, -1), quarter) +
                           DSeries::term(lat, Rat(-1), iK(1, -1), quarter) +
                           DSeries::term(lat, Rat(-1), iK(-1, 1), quarter);
        if (got != expected)
            return "got " + got.to_string() + "\nexpected " + expected.to_string();
        return std::string();
    });

    // 4. The three worked example expansions.
    check("4a", "to_DwS(B, w=E1) along (t,s) = -e^{ts}(e^{2s} - e^{-2s})/4, degree 6", [] {
        const ManifoldRecord& B = rec("B");
        ExpansionTable got =
            expand_ts(to_DwS(B, B.named_class("wE1")), B.named_class("F"), B.sigma, 6);
        ExpansionTable expected = model_table({{Rat(1), Rat(0), Rat(2), Rat(-1, 4)},
                                               {Rat(1), Rat(0), Rat(-2), Rat(1, 4)}},
                                              6);
        if (got != expected) return table_diff(got, expected);
        return std::string();
    });
    check("4b", "to_DwS(B, w from K3, w^2 = 0) along (t,s) = e^{ts}(e^{2s}+e^{-2s})/4 + (1/2)e^{-ts}", [] {
        const ManifoldRecord& B = rec("B");
        ExpansionTable got =
            expand_ts(to_DwS(B, B.named_class("wK3")), B.named_class("F"), B.sigma, 6);
        // Literal transform output; the printed bullet's tail sign is
        // inconsistent with the same paper's (::) display, see README.
        ExpansionTable expected = model_table({{Rat(1), Rat(0), Rat(2), Rat(1, 4)},
                                               {Rat(1), Rat(0), Rat(-2), Rat(1, 4)},
                                               {Rat(-1), Rat(0), Rat(0), Rat(1, 2)}},
                                              6);
        if (got != expected) return table_diff(got, expected);
        return std::string();
    });
    check("4c", "to_DwS(K3, w^2 = 0) along (t,s) = -e^{-ts}, degree 6", [] {
        const ManifoldRecord& K3 = rec("K3");
        LatticeClass D = K3.named_class("S") - K3.named_class("D");  // D·Σ = 1, D² = 0
        ExpansionTable got = expand_ts(to_DwS(K3, K3.named_class("w")), D, K3.sigma, 6);
        ExpansionTable expected = model_table({{Rat(-1), Rat(0), Rat(0), Rat(-1)}}, 6);
        if (got != expected) return table_diff(got, expected);
        return std::string();
    });

    // 5. The doubled manifold C = B#B.
    check("5", "to_DwS(glue_direct(B,B)) along (t,s) = -e^{ts}(2e^{2s+2t} - 2e^{-2s-2t}), t<->s symmetric", [] {
        GluedView v = glued_view("BB");
        ExpansionTable got = expand_ts(v.dws, v.d_gen, v.sigma, 8);
        ExpansionTable expected = model_table({{Rat(1), Rat(2), Rat(2), Rat(-2)},
                                               {Rat(1), Rat(-2), Rat(-2), Rat(2)}},
                                              8);
        if (got != expected) return table_diff(got, expected);
        for (const auto& [multi, c] : got.coefficients) {
            std::vector<unsigned> swapped{multi[1], multi[0]};
            if (got.coefficient(swapped) != c) return std::string("table not symmetric under t<->s");
        }
        return std::string();
    });

    // 6. C2 = C#B along the normalized capping class.
    check("6", "to_DwS(glue_direct(C,B)) along (t,s) = e^{ts}(16e^{2s+2t} + 16e^{-2s-2t})", [] {
        GluedView v = glued_view("CB");
        ExpansionTable got = expand_ts(v.dws, v.d_gen, v.sigma, 8);
        ExpansionTable expected = model_table({{Rat(1), Rat(2), Rat(2), Rat(16)},
                                               {Rat(1), Rat(-2), Rat(-2), Rat(16)}},
                                              8);
        if (got != expected) return table_diff(got, expected);
        return std::string();
    });

    // 7. Cross-formula consistency on every pair with capped records.
    check("7", "glue_via_B = glue_direct as canonical series: (B,B), (B,C), (C,B), (C,C)", [] {
        for (auto [direct, via] : {std::pair{"BB", "BB-viaB"}, {"BC", "BC-viaB"},
                                   {"CB", "CB-viaB"}, {"CC", "CC-viaB"}}) {
            GluingConfig dcfg = catalog_glue_config(direct);
            GluingConfig vcfg = catalog_glue_config(via);
            DSeries ds = glue_direct(dcfg, dcfg.x1.named_class("w"), dcfg.x2.named_class("w"));
            DSeries vs = glue_via_B(vcfg, vcfg.x1.named_class("w"), vcfg.x2.named_class("w"));
            if (ds != vs)
                return std::string(direct) + ": direct " + ds.to_string() + " vs via-B " + vs.to_string();
        }
        return std::string();
    });

    // 8. No Σ-orthogonal basic classes in any capped gluing output.
    check("8", "sigma_zero_check passes on every glue_via_B output", [] {
        for (const char* key : {"BB-viaB", "BC-viaB", "CB-viaB", "CC-viaB"}) {
            GluingConfig cfg = catalog_glue_config(key);
            DSeries s = glue_via_B(cfg, cfg.x1.named_class("w"), cfg.x2.named_class("w"));
            LatticeClass sigma = LatticeClass::generator(s.lattice(), glued_sigma_name());
            if (!sigma_zero_check(s, sigma)) return std::string(key) + " has a K with K·Σ = 0";
        }
        return std::string();
    });

    // 9. Property suites.
    check("9a", "from_DwS ∘ to_DwS is the identity on every catalog structure and w", [] {
        for (const auto& name : simple_type_entries()) {
            const ManifoldRecord& X = rec(name);
            for (const auto& wname : ws_for(name)) {
                const LatticeClass& w = X.named_class(wname);
                SimpleTypeStructure got = from_DwS(to_DwS(X, w), X.sigma, d_zero(X, w), w);
                if (got.entries.size() != X.structure.entries.size())
                    return name + "/" + wname + ": class count changed";
                for (const auto& e : X.structure.entries) {
                    auto a = got.coefficient_of(e.k);
                    if (!a || *a != e.a)
                        return name + "/" + wname + ": coefficient mismatch at K = " + e.k.to_string();
                }
            }
        }
        return std::string();
    });
    check("9b", "splitting ambiguity (d1 - rΣ, d2 + rΣ) leaves glue outputs unchanged", [] {
        for (const char* key : {"BB", "CB", "BC", "CC", "BB-viaB", "BC-viaB"}) {
            GluingConfig cfg = catalog_glue_config(key);
            auto out = [&](const GluingConfig& c) {
                return c.mode == GlueMode::direct
                           ? glue_direct(c, c.x1.named_class("w"), c.x2.named_class("w"))
                           : glue_via_B(c, c.x1.named_class("w"), c.x2.named_class("w"));
            };
            DSeries base = out(cfg);
            for (const Rat& r : {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(3)}) {
                GluingConfig shifted = cfg;
                for (auto& m : shifted.matched) {
                    m.d1 = m.d1 - r * shifted.x1.sigma;
                    m.d2 = m.d2 + r * shifted.x2.sigma;
                }
                if (out(shifted) != base)
                    return std::string(key) + ": output changed under r = " + rat_to_string(r);
            }
        }
        return std::string();
    });
    check("9c", "to_DwS(X, w) = to_DwS(X, w + 2Σ) on every catalog entry and w", [] {
        for (const auto& name : simple_type_entries()) {
            const ManifoldRecord& X = rec(name);
            for (const auto& wname : ws_for(name)) {
                const LatticeClass& w = X.named_class(wname);
                if (to_DwS(X, w) != to_DwS(X, w + Rat(2) * X.sigma))
                    return name + "/" + wname + ": not 2Σ-periodic";
            }
        }
        return std::string();
    });
    check("9d", "D^w support lies in degrees ≡ d0 (mod 4), to degree 9", [] {
        for (const auto& name : simple_type_entries()) {
            const ManifoldRecord& X = rec(name);
            std::vector<LatticeClass> dirs;
            for (const auto& g : X.lattice->generators())
                dirs.push_back(LatticeClass::generator(X.lattice, g));
            LatticeClass sum = LatticeClass::zero(X.lattice);
            for (const auto& d : dirs) sum = sum + d;
            dirs.push_back(sum);
            for (const auto& wname : ws_for(name)) {
                const LatticeClass& w = X.named_class(wname);
                long d0 = d_zero(X, w);
                int residue = static_cast<int>(((d0 % 4) + 4) % 4);
                DSeries dw = project_parity(build_dseries(X, w), d0, +1);
                for (const auto& A : dirs) {
                    ExpansionTable t = expand(dw, {{"u", A}}, 9);
                    for (const auto& [multi, c] : t.coefficients)
                        if (static_cast<int>(multi[0] % 4) != residue)
                            return name + "/" + wname + ": degree " + std::to_string(multi[0]) +
                                   " term, expected support ≡ " + std::to_string(residue) + " (mod 4)";
                }
            }
        }
        return std::string();
    });
    check("9e", "±K symmetry with the (-1)^{d0} sign on every structure and series", [] {
        for (const auto& name : simple_type_entries()) {
            const ManifoldRecord& X = rec(name);
            auto violations = validate_structure(X);
            if (!violations.empty()) return name + ": " + violations.front();
            for (const auto& wname : ws_for(name)) {
                const LatticeClass& w = X.named_class(wname);
                Rat sign = minus_one_pow(Rat(d_zero(X, w)));
                DSeries s = build_dseries(X, w);
                for (const auto& t : s.terms()) {
                    ExpTerm mirror{t.q, {}, GaussianRational()};
                    for (const auto& f : t.freq) mirror.freq.push_back(-f);
                    bool found = false;
                    for (const auto& u : s.terms())
                        if (compare_terms(u, mirror) == 0) {
                            found = (u.coeff == t.coeff * GaussianRational(sign));
                            break;
                        }
                    if (!found) return name + "/" + wname + ": series coefficient symmetry broken";
                }
            }
        }
        return std::string();
    });
    check("9f", "adjunction: every catalog basic class satisfies the genus-2 bound, |K·Σ| ≤ 2", [] {
        for (const auto& name : simple_type_entries()) {
            const ManifoldRecord& X = rec(name);
            for (const auto& e : X.structure.entries) {
                if (!adjunction_check(e.k, X.sigma, 2))
                    return name + ": adjunction fails for K = " + e.k.to_string();
                if (abs(pair(e.k, X.sigma)) > 2)
                    return name + ": |K·Σ| > 2 for K = " + e.k.to_string();
            }
        }
        return std::string();
    });

    // 10. Path independence of the pairing model.
    check("10a", "pair_via_M equals the t-ray of the glued series for (B,B) and (C,B)", [] {
        PairingMatrixM M;
        {
            const ManifoldRecord& B = rec("B");
            CoefficientTriple c = coefficients_from_structure(B, B.named_class("w"), B.named_class("F"));
            DSeries got = pair_via_M(c, c, M, Rat(1));
            GluedView v = glued_view("BB");
            if (got != restrict_to_ray(v.dws, v.d_gen))
                return "B#B: " + got.to_string() + " vs ray " + restrict_to_ray(v.dws, v.d_gen).to_string();
        }
        {
            const ManifoldRecord& C = rec("C");
            const ManifoldRecord& B = rec("B");
            CoefficientTriple cl = coefficients_from_structure(C, C.named_class("w"), C.named_class("DC"));
            CoefficientTriple cr = coefficients_from_structure(B, B.named_class("w"), B.named_class("F"));
            DSeries got = pair_via_M(cl, cr, M, Rat(1));
            GluedView v = glued_view("CB");
            if (got != restrict_to_ray(v.dws, v.d_gen))
                return "C#B: " + got.to_string() + " vs ray " + restrict_to_ray(v.dws, v.d_gen).to_string();
        }
        return std::string();
    });
    check("10b", "a K3 factor pairs to zero through M33 = 0", [] {
        const ManifoldRecord& K3 = rec("K3");
        const ManifoldRecord& B = rec("B");
        CoefficientTriple cl = coefficients_from_structure(K3, K3.named_class("w"), K3.named_class("S"));
        CoefficientTriple cr = coefficients_from_structure(B, B.named_class("w"), B.named_class("F"));
        if (cl.c3.is_zero()) return std::string("K3 coefficient c3 unexpectedly zero");
        DSeries got = pair_via_M(cl, cr, PairingMatrixM{}, Rat(1));
        if (!got.is_zero()) return "expected 0, got " + got.to_string();
        GluingConfig cfg = catalog_glue_config("K3B");
        if (!glue_direct(cfg, cfg.x1.named_class("w"), cfg.x2.named_class("w")).is_zero())
            return std::string("glue_direct(K3,B) is not the zero series");
        return std::string();
    });
    check("10c", "the M̃ path equals glue_via_B on the same ray for (B,B) and (B,C)", [] {
        const ManifoldRecord& C = rec("C");
        const ManifoldRecord& C2 = rec("C2");
        {
            CoefficientPair c = capped_coefficients(C, C.named_class("w"), C.named_class("Dcap"));
            GluedView v = glued_view("BB-viaB");
            Rat qcorr = pair(v.d_gen, v.d_gen) - pair(C.named_class("Dcap"), C.named_class("Dcap")) -
                        pair(C.named_class("Dcap"), C.named_class("Dcap"));
            DSeries got = pair_via_Mtilde(c, c, PairingMatrixMtilde{qcorr});
            if (got != restrict_to_ray(v.dws, v.d_gen))
                return "B#B: " + got.to_string() + " vs " + restrict_to_ray(v.dws, v.d_gen).to_string();
        }
        {
            CoefficientPair cl = capped_coefficients(C, C.named_class("w"), C.named_class("Dcap"));
            CoefficientPair cr = capped_coefficients(C2, C2.named_class("w"), C2.named_class("capD"));
            GluedView v = glued_view("BC-viaB");
            Rat qcorr = pair(v.d_gen, v.d_gen) - pair(C.named_class("Dcap"), C.named_class("Dcap")) -
                        pair(C2.named_class("capD"), C2.named_class("capD"));
            DSeries got = pair_via_Mtilde(cl, cr, PairingMatrixMtilde{qcorr});
            if (got != restrict_to_ray(v.dws, v.d_gen))
                return "B#C: " + got.to_string() + " vs " + restrict_to_ray(v.dws, v.d_gen).to_string();
        }
        return std::string();
    });

    // Catalog coherence (regeneration and bookkeeping).
    check("11a", "catalog C and C2 are regenerated by the gluing pipeline", [] {
        {
            GluedView v = glued_view("BB");
            const ManifoldRecord& C = rec("C");
            DSeries catalog_series = build_dseries(C, C.named_class("w"));
            if (structure_profile(v.dws, v.sigma, v.d_gen) !=
                structure_profile(catalog_series, C.sigma, C.named_class("D")))
                return std::string("C: glued profile differs from catalog");
        }
        {
            GluedView v = glued_view("CB");
            const ManifoldRecord& C2 = rec("C2");
            DSeries catalog_series = build_dseries(C2, C2.named_class("w"));
            if (structure_profile(v.dws, v.sigma, v.d_gen) !=
                structure_profile(catalog_series, C2.sigma, C2.named_class("D2")))
                return std::string("C2: glued profile differs from catalog");
        }
        return std::string();
    });
    check("11b", "every catalog record passes validate_structure", [] {
        for (const auto& name : catalog_names()) {
            auto violations = validate_structure(rec(name));
            if (!violations.empty()) return name + ": " + violations.front();
        }
        return std::string();
    });
    check("11c", "d0 bookkeeping: d0(X, w) ≡ d0(X1, w1) + d0(X2, w2) + 1 (mod 2) on glued records", [] {
        for (const char* key : {"BB", "CB", "BC", "CC"}) {
            GluingConfig cfg = catalog_glue_config(key);
            ManifoldRecord X = glued_record(cfg, cfg.x1.named_class("w"), cfg.x2.named_class("w"));
            long lhs = d_zero(X, X.named_class("w"));
            long rhs = d_zero(cfg.x1, cfg.x1.named_class("w")) +
                       d_zero(cfg.x2, cfg.x2.named_class("w")) + 1;
            if (((lhs - rhs) % 2 + 2) % 2 != 0)
                return std::string(key) + ": d0 parity relation broken (" + std::to_string(lhs) +
                       " vs " + std::to_string(rhs) + ")";
        }
        return std::string();
    });

    return results;
}

} // namespace donaldson
