// Batch CLI over JSON manifests: series construction, the D^{(w,Σ)} transform,
// the two gluing formulas, exact expansions, the V4 pairing pipelines, and the
// verify-paper regression suite.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "donaldson/catalog.hpp"
#include "donaldson/expansion.hpp"
#include "donaldson/floer.hpp"
#include "donaldson/manifest.hpp"
#include "donaldson/verify.hpp"

namespace {

using namespace donaldson;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return 3;
        default: return 1;
    }
}

const char* error_tag(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::validation: return "validation";
        case ErrorKind::precondition: return "precondition";
        default: return "internal";
    }
}

void write_output(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::parse, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::vector<Direction> parse_along(const std::string& along, const LatticePtr& lattice) {
    std::vector<Direction> dirs;
    std::size_t pos = 0;
    while (pos <= along.size()) {
        std::size_t comma = along.find(',', pos);
        std::string item = along.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos || colon == 0)
            fail(ErrorKind::parse, "--along expects name:class[,name:class...], got '" + along + "'");
        dirs.emplace_back(item.substr(0, colon), parse_class_expr(item.substr(colon + 1), lattice));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (dirs.empty()) fail(ErrorKind::parse, "--along needs at least one direction");
    return dirs;
}

std::vector<DSeries> parse_relvec(const std::string& text) {
    std::vector<DSeries> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Rat v = rat_from_string(item);
        if (v == 0) coords.push_back(DSeries(ray_lattice()));
        else
            coords.push_back(DSeries::term(ray_lattice(), Rat(0), {GaussianRational()}, GaussianRational(v)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return coords;
}

int run(CLI::App& app, int argc, char** argv) {
    std::string manifest_path, manifest2_path, match_path, w_expr, w1_expr, w2_expr;
    std::string along = "t:D,s:Sigma";
    std::string out_path, series_path, mode, u_text, v_text;
    unsigned degree = 8;
    bool invert = false;

    auto* validate = app.add_subcommand("validate", "check a manifest against every record invariant");
    validate->add_option("manifest", manifest_path, "manifest JSON path")->required();

    auto* series = app.add_subcommand("series", "print the Donaldson series D^w in canonical form");
    series->add_option("manifest", manifest_path)->required();
    series->add_option("--w", w_expr, "class expression for w, e.g. E1 or S-E1-E2")->required();
    series->add_option("--out", out_path, "also write the series as JSON");

    auto* transform = app.add_subcommand("transform", "print D^{(w,Sigma)}; with --invert, the recovered basic classes");
    transform->add_option("manifest", manifest_path)->required();
    transform->add_option("--w", w_expr)->required();
    transform->add_flag("--invert", invert, "apply the inverse transform to the result and print (K, a) pairs");
    transform->add_option("--out", out_path);

    auto* glue = app.add_subcommand("glue", "glue two manifests along Sigma and print the resulting series");
    glue->add_option("m1", manifest_path)->required();
    glue->add_option("m2", manifest2_path)->required();
    glue->add_option("--match", match_path, "match manifest JSON path")->required();
    glue->add_option("--mode", mode, "direct or via-b; must agree with the match manifest");
    glue->add_option("--w1", w1_expr)->required();
    glue->add_option("--w2", w2_expr)->required();
    glue->add_option("--out", out_path);

    auto* expand_cmd = app.add_subcommand("expand", "exact Taylor table of a series file along directions");
    expand_cmd->add_option("series", series_path, "series JSON (from --out)")->required();
    expand_cmd->add_option("--along", along, "comma-separated name:class list")->required();
    expand_cmd->add_option("--degree", degree, "total degree bound")->default_val(8);

    auto* pairv4 = app.add_subcommand("pair-v4", "pair two V4 vectors through N^{-1}");
    pairv4->add_option("--u", u_text, "four comma-separated rationals")->required();
    pairv4->add_option("--v", v_text, "four comma-separated rationals")->required();

    std::string catalog_name;
    auto* catalog_cmd = app.add_subcommand("catalog", "print a built-in record in manifest format");
    catalog_cmd->add_option("name", catalog_name, "K3, B, C, C2 or SigmaCP1")->required();
    catalog_cmd->add_option("--out", out_path);

    app.add_subcommand("verify-l", "recompute l from the V4 pairing of the capped vectors");
    app.add_subcommand("verify-paper", "run the full regression suite; exit 0 iff every check passes");

    app.require_subcommand(1);
    app.parse(argc, argv);

    if (validate->parsed()) {
        ManifoldRecord X = parse_manifest_file_unchecked(manifest_path);
        auto violations = validate_structure(X);
        for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        if (violations.empty()) std::cout << "ok: " << X.name << " passes validation\n";
        return violations.empty() ? 0 : 1;
    }
    if (series->parsed()) {
        ManifoldRecord X = parse_manifest_file(manifest_path);
        DSeries s = build_dseries(X, parse_class_expr(w_expr, X.lattice));
        std::cout << s.to_string() << "\n";
        if (!out_path.empty()) write_output(out_path, serialize_series(s));
        return 0;
    }
    if (transform->parsed()) {
        ManifoldRecord X = parse_manifest_file(manifest_path);
        LatticeClass w = parse_class_expr(w_expr, X.lattice);
        DSeries s = to_DwS(X, w);
        if (invert) {
            SimpleTypeStructure st = from_DwS(s, X.sigma, d_zero(X, w), w);
            std::vector<std::string> lines;
            for (const auto& e : st.entries)
                lines.push_back("K = " + e.k.to_string() + ", a = " + rat_to_string(e.a));
            std::sort(lines.begin(), lines.end());
            for (const auto& l : lines) std::cout << l << "\n";
        } else {
            std::cout << s.to_string() << "\n";
        }
        if (!out_path.empty()) write_output(out_path, serialize_series(s));
        return 0;
    }
    if (glue->parsed()) {
        ManifoldRecord x1 = parse_manifest_file(manifest_path);
        ManifoldRecord x2 = parse_manifest_file(manifest2_path);
        GluingConfig cfg = parse_match_file(match_path, x1, x2);
        if (!mode.empty()) {
            GlueMode requested;
            if (mode == "direct") requested = GlueMode::direct;
            else if (mode == "via-b") requested = GlueMode::via_B;
            else fail(ErrorKind::parse, "--mode must be direct or via-b, got '" + mode + "'");
            if (requested != cfg.mode)
                fail(ErrorKind::precondition,
                     "--mode " + mode + " contradicts the mode declared in " + match_path);
        }
        LatticeClass w1 = parse_class_expr(w1_expr, x1.lattice);
        LatticeClass w2 = parse_class_expr(w2_expr, x2.lattice);
        DSeries s = (cfg.mode == GlueMode::direct) ? glue_direct(cfg, w1, w2) : glue_via_B(cfg, w1, w2);
        std::cout << s.to_string() << "\n";
        if (!out_path.empty()) write_output(out_path, serialize_series(s));
        return 0;
    }
    if (expand_cmd->parsed()) {
        DSeries s = parse_series_file(series_path);
        ExpansionTable t = expand(s, parse_along(along, s.lattice()), degree);
        std::cout << t.to_string();
        return 0;
    }
    if (pairv4->parsed()) {
        auto u = parse_relvec(u_text);
        auto v = parse_relvec(v_text);
        DSeries d = pair_v4(relvec_from_monomials(u), relvec_from_monomials(v));
        if (d.is_zero()) std::cout << "0\n";
        else if (d.size() == 1 && d.terms()[0].q == 0 && d.terms()[0].freq[0].is_zero())
            std::cout << gq_to_string(d.terms()[0].coeff) << "\n";
        else
            std::cout << d.to_string() << "\n";
        return 0;
    }
    if (catalog_cmd->parsed()) {
        Json j = serialize_manifest(catalog_get(catalog_name).record);
        std::cout << j.dump(2) << "\n";
        if (!out_path.empty()) write_output(out_path, j);
        return 0;
    }
    if (app.get_subcommand("verify-l")->parsed()) {
        std::cout << rat_to_string(verify_l()) << "\n";
        return 0;
    }
    if (app.get_subcommand("verify-paper")->parsed()) {
        auto results = run_paper_checks();
        bool all = true;
        for (const auto& r : results) {
            std::string head = "[" + r.id + "] " + r.label + " ";
            std::string pad(head.size() < 76 ? 76 - head.size() : 1, '.');
            std::cout << head << pad << (r.pass ? " PASS" : " FAIL") << "\n";
            if (!r.pass) {
                all = false;
                std::cout << "    " << r.detail << "\n";
            }
        }
        std::cout << (all ? "verify-paper: all checks passed\n" : "verify-paper: FAILURES above\n");
        return all ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Donaldson-series calculator for genus-2 fiber sums"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error[usage]: " << e.what() << "\n";
        return 2;
    } catch (const donaldson::Error& e) {
        std::cerr << "error[" << error_tag(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}
