#include "donaldson/manifest.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace donaldson {

namespace {

[[noreturn]] void parse_fail(const std::string& context, const std::string& message) {
    fail(ErrorKind::parse, context + ": " + message);
}

Rat rat_from_json(const Json& v, const std::string& context) {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    parse_fail(context, "expected a rational as \"p/q\" string or integer, got " + v.dump());
}

const Json& field(const Json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(context, std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::parse, path + ": " + e.what());
    }
}

LatticeClass parse_sparse_class(const Json& j, const LatticePtr& lattice, const std::string& context) {
    if (!j.is_object()) parse_fail(context, "expected an object mapping generators to rationals");
    std::vector<Rat> coords(lattice->rank(), Rat(0));
    for (const auto& [key, value] : j.items()) {
        if (!lattice->has_generator(key))
            parse_fail(context, "unknown generator '" + key + "' on lattice '" + lattice->name() + "'");
        coords[lattice->index_of(key)] = rat_from_json(value, context + "." + key);
    }
    return LatticeClass(lattice, std::move(coords));
}

LatticeClass parse_class_expr(const std::string& expr, const LatticePtr& lattice) {
    std::vector<Rat> coords(lattice->rank(), Rat(0));
    std::size_t i = 0;
    const std::size_t n = expr.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
    skip_ws();
    if (i == n) fail(ErrorKind::parse, "empty class expression");
    bool first = true;
    while (i < n) {
        Rat sign(1);
        skip_ws();
        if (expr[i] == '+' || expr[i] == '-') {
            if (expr[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            fail(ErrorKind::parse, "expected '+' or '-' at position " + std::to_string(i) + " in '" + expr + "'");
        }
        first = false;
        skip_ws();
        // optional coefficient p or p/q
        Rat coeff(1);
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
        if (i > start) {
            std::string num = expr.substr(start, i - start);
            if (i < n && expr[i] == '/') {
                ++i;
                std::size_t dstart = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
                if (i == dstart) fail(ErrorKind::parse, "malformed coefficient in '" + expr + "'");
                coeff = rat_from_string(num + "/" + expr.substr(dstart, i - dstart));
            } else {
                coeff = rat_from_string(num);
            }
            skip_ws();
            if (i < n && expr[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        // generator name
        start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_')) ++i;
        if (i == start)
            fail(ErrorKind::parse, "expected a generator name at position " + std::to_string(start) +
                                       " in '" + expr + "'");
        std::string gen = expr.substr(start, i - start);
        if (!lattice->has_generator(gen))
            fail(ErrorKind::parse, "unknown generator '" + gen + "' in '" + expr + "' (lattice '" +
                                       lattice->name() + "')");
        coords[lattice->index_of(gen)] += sign * coeff;
        skip_ws();
    }
    return LatticeClass(lattice, std::move(coords));
}

ManifoldRecord parse_manifest_json_unchecked(const Json& j, const std::string& context) {
    if (!j.is_object()) parse_fail(context, "manifest must be a JSON object");
    ManifoldRecord X;
    X.name = field(j, "name", context).get<std::string>();
    const std::string ctx = context + " (" + X.name + ")";
    X.b1 = field(j, "b1", ctx).get<unsigned>();
    X.b_plus = field(j, "b_plus", ctx).get<unsigned>();
    X.simple_type = field(j, "simple_type", ctx).get<bool>();
    if (j.contains("finite_type_order")) X.finite_type_order = j["finite_type_order"].get<unsigned>();
    if (j.contains("chamber")) X.chamber = j["chamber"].get<std::string>();

    const Json& jg = field(j, "generators", ctx);
    if (!jg.is_array() || jg.empty()) parse_fail(ctx, "'generators' must be a non-empty array");
    std::vector<std::string> gens = jg.get<std::vector<std::string>>();

    const Json& jm = field(j, "gram", ctx);
    if (!jm.is_array() || jm.size() != gens.size()) parse_fail(ctx, "'gram' must be a rank-sized matrix");
    std::vector<std::vector<Rat>> gram;
    for (const auto& row : jm) {
        if (!row.is_array() || row.size() != gens.size()) parse_fail(ctx, "'gram' must be square");
        std::vector<Rat> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) parse_fail(ctx, "gram entries must be integers, got " + v.dump());
            r.emplace_back(v.get<long long>());
        }
        gram.push_back(std::move(r));
    }
    try {
        X.lattice = make_lattice(X.name, std::move(gens), std::move(gram));
    } catch (const Error& e) {
        parse_fail(ctx, e.what());
    }

    X.sigma = parse_sparse_class(field(j, "sigma", ctx), X.lattice, ctx + ".sigma");

    if (j.contains("basic_classes")) {
        for (const auto& b : j["basic_classes"]) {
            BasicClassEntry e;
            e.k = parse_sparse_class(field(b, "k", ctx), X.lattice, ctx + ".basic_classes.k");
            e.a = rat_from_json(field(b, "a", ctx), ctx + ".basic_classes.a");
            if (e.a == 0) parse_fail(ctx, "zero coefficient for basic class " + e.k.to_string());
            X.structure.entries.push_back(std::move(e));
        }
    }
    if (j.contains("named_classes"))
        for (const auto& [name, v] : j["named_classes"].items())
            X.named_classes.emplace(name,
                                    parse_sparse_class(v, X.lattice, ctx + ".named_classes." + name));
    if (j.contains("monomials"))
        for (const auto& [deg, v] : j["monomials"].items()) {
            Rat d = rat_from_string(deg);
            if (!is_integer(d) || d < 0) parse_fail(ctx, "monomial degree '" + deg + "' is not a nonnegative integer");
            X.monomials.emplace(static_cast<unsigned>(to_long(d)),
                                rat_from_json(v, ctx + ".monomials." + deg));
        }
    if (j.contains("extra_constants"))
        for (const auto& [name, v] : j["extra_constants"].items())
            X.extra_constants.emplace(name, rat_from_json(v, ctx + ".extra_constants." + name));
    return X;
}

ManifoldRecord parse_manifest_json(const Json& j, const std::string& context) {
    ManifoldRecord X = parse_manifest_json_unchecked(j, context);
    std::vector<std::string> violations = validate_structure(X);
    if (!violations.empty()) {
        std::string msg = context + " (" + X.name + "): record fails validation:";
        for (const auto& v : violations) msg += "\n  - " + v;
        fail(ErrorKind::validation, msg);
    }
    return X;
}

ManifoldRecord parse_manifest_file(const std::string& path) {
    return parse_manifest_json(load_json_file(path), path);
}

ManifoldRecord parse_manifest_file_unchecked(const std::string& path) {
    return parse_manifest_json_unchecked(load_json_file(path), path);
}

Json serialize_manifest(const ManifoldRecord& X) {
    Json j;
    j["name"] = X.name;
    j["b1"] = X.b1;
    j["b_plus"] = X.b_plus;
    j["simple_type"] = X.simple_type;
    if (X.finite_type_order) j["finite_type_order"] = *X.finite_type_order;
    if (X.chamber) j["chamber"] = *X.chamber;
    j["generators"] = X.lattice->generators();
    Json gram = Json::array();
    for (const auto& row : X.lattice->gram()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(static_cast<long long>(to_long(v)));
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);

    auto sparse = [&](const LatticeClass& c) {
        Json out = Json::object();
        for (std::size_t i = 0; i < c.coords.size(); ++i)
            if (c.coords[i] != 0) out[X.lattice->generators()[i]] = rat_to_string(c.coords[i]);
        return out;
    };
    j["sigma"] = sparse(X.sigma);
    if (!X.structure.entries.empty()) {
        Json arr = Json::array();
        for (const auto& e : X.structure.entries)
            arr.push_back(Json{{"k", sparse(e.k)}, {"a", rat_to_string(e.a)}});
        j["basic_classes"] = std::move(arr);
    }
    if (!X.named_classes.empty()) {
        Json named = Json::object();
        for (const auto& [name, c] : X.named_classes) named[name] = sparse(c);
        j["named_classes"] = std::move(named);
    }
    if (!X.monomials.empty()) {
        Json mono = Json::object();
        for (const auto& [deg, v] : X.monomials) mono[std::to_string(deg)] = rat_to_string(v);
        j["monomials"] = std::move(mono);
    }
    if (!X.extra_constants.empty()) {
        Json extra = Json::object();
        for (const auto& [name, v] : X.extra_constants) extra[name] = rat_to_string(v);
        j["extra_constants"] = std::move(extra);
    }
    return j;
}

GluingConfig parse_match_json(const Json& j, const ManifoldRecord& x1, const ManifoldRecord& x2,
                              const std::string& context) {
    if (!j.is_object()) parse_fail(context, "match manifest must be a JSON object");
    GluingConfig cfg;
    cfg.x1 = x1;
    cfg.x2 = x2;
    if (j.contains("name")) cfg.glued_name = j["name"].get<std::string>();
    if (j.contains("mode")) {
        std::string mode = j["mode"].get<std::string>();
        if (mode == "direct") cfg.mode = GlueMode::direct;
        else if (mode == "via-b") cfg.mode = GlueMode::via_B;
        else parse_fail(context, "unknown mode '" + mode + "' (expected direct or via-b)");
    }
    const Json& classes = field(j, "classes", context);
    if (!classes.is_array() || classes.empty()) parse_fail(context, "'classes' must be a non-empty array");
    for (const auto& c : classes) {
        MatchedClass m;
        m.name = field(c, "name", context).get<std::string>();
        m.d1 = parse_sparse_class(field(c, "d1", context), x1.lattice, context + "." + m.name + ".d1");
        m.d2 = parse_sparse_class(field(c, "d2", context), x2.lattice, context + "." + m.name + ".d2");
        std::string boundary = field(c, "boundary", context).get<std::string>();
        if (boundary == "curve") {
            m.boundary = BoundaryKind::curve_in_sigma;
        } else if (boundary.rfind("circle:", 0) == 0) {
            m.boundary = BoundaryKind::multiple_of_circle;
            m.circle_k = rat_from_string(boundary.substr(7));
        } else {
            parse_fail(context, "boundary must be \"circle:k\" or \"curve\", got '" + boundary + "'");
        }
        cfg.matched.push_back(std::move(m));
    }
    for (const auto& [gen, v] : field(j, "w", context).items())
        cfg.glued_w.emplace(gen, rat_from_json(v, context + ".w." + gen));
    return cfg;
}

GluingConfig parse_match_file(const std::string& path, const ManifoldRecord& x1,
                              const ManifoldRecord& x2) {
    return parse_match_json(load_json_file(path), x1, x2, path);
}

Json serialize_series(const DSeries& s) {
    Json j;
    j["generators"] = s.lattice()->generators();
    Json gram = Json::array();
    for (const auto& row : s.lattice()->gram()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rat_to_string(v));
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    j["lattice_name"] = s.lattice()->name();
    Json terms = Json::array();
    for (const auto& t : s.terms()) {
        Json freq = Json::array();
        for (const auto& f : t.freq)
            freq.push_back(Json::array({rat_to_string(f.re), rat_to_string(f.im)}));
        terms.push_back(Json{{"q", rat_to_string(t.q)},
                             {"freq", std::move(freq)},
                             {"coeff", Json::array({rat_to_string(t.coeff.re), rat_to_string(t.coeff.im)})}});
    }
    j["terms"] = std::move(terms);
    return j;
}

DSeries parse_series_json(const Json& j, const std::string& context) {
    std::vector<std::string> gens = field(j, "generators", context).get<std::vector<std::string>>();
    const Json& jm = field(j, "gram", context);
    std::vector<std::vector<Rat>> gram;
    for (const auto& row : jm) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_json(v, context + ".gram"));
        gram.push_back(std::move(r));
    }
    std::string name = j.contains("lattice_name") ? j["lattice_name"].get<std::string>() : "series";
    LatticePtr lat;
    try {
        lat = make_lattice(name, std::move(gens), std::move(gram));
    } catch (const Error& e) {
        parse_fail(context, e.what());
    }
    std::vector<ExpTerm> terms;
    for (const auto& t : field(j, "terms", context)) {
        ExpTerm term;
        term.q = rat_from_json(field(t, "q", context), context + ".q");
        const Json& freq = field(t, "freq", context);
        if (!freq.is_array() || freq.size() != lat->rank())
            parse_fail(context, "term frequency must have one [re, im] entry per generator");
        for (const auto& f : freq) {
            if (!f.is_array() || f.size() != 2) parse_fail(context, "frequency entries are [re, im] pairs");
            term.freq.push_back(GaussianRational(rat_from_json(f[0], context), rat_from_json(f[1], context)));
        }
        const Json& c = field(t, "coeff", context);
        if (!c.is_array() || c.size() != 2) parse_fail(context, "coeff is an [re, im] pair");
        term.coeff = GaussianRational(rat_from_json(c[0], context), rat_from_json(c[1], context));
        terms.push_back(std::move(term));
    }
    return DSeries(std::move(lat), std::move(terms));
}

DSeries parse_series_file(const std::string& path) {
    return parse_series_json(load_json_file(path), path);
}

} // namespace donaldson
