#include "donaldson/expansion.hpp"

#include <algorithm>

namespace donaldson {

namespace {

// Truncated polynomial in n variables with Gaussian-rational coefficients.
using Poly = std::map<std::vector<unsigned>, GaussianRational>;

unsigned total_degree(const std::vector<unsigned>& multi) {
    unsigned d = 0;
    for (unsigned e : multi) d += e;
    return d;
}

void poly_add_term(Poly& p, const std::vector<unsigned>& multi, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(multi, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned degree) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        unsigned da = total_degree(ma);
        for (const auto& [mb, cb] : b) {
            if (da + total_degree(mb) > degree) continue;
            std::vector<unsigned> m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            poly_add_term(out, m, ca * cb);
        }
    }
    return out;
}

} // namespace

GaussianRational ExpansionTable::coefficient(const std::vector<unsigned>& multi) const {
    auto it = coefficients.find(multi);
    return it == coefficients.end() ? GaussianRational() : it->second;
}

bool ExpansionTable::all_real() const {
    for (const auto& [multi, c] : coefficients)
        if (!c.is_real()) return false;
    return true;
}

std::string ExpansionTable::to_string() const {
    std::vector<std::pair<std::vector<unsigned>, GaussianRational>> rows(coefficients.begin(),
                                                                         coefficients.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        unsigned da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [multi, c] : rows) {
        std::string mono;
        for (std::size_t i = 0; i < multi.size(); ++i) {
            if (multi[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[i];
            if (multi[i] > 1) mono += "^" + std::to_string(multi[i]);
        }
        if (mono.empty()) mono = "1";
        out += mono + ": " + gq_to_string(c) + "\n";
    }
    return out;
}

ExpansionTable expand(const DSeries& s, const std::vector<Direction>& directions, unsigned degree) {
    const std::size_t n = directions.size();
    ExpansionTable table;
    table.degree = degree;
    for (const auto& [name, cls] : directions) {
        table.variables.push_back(name);
        if (*cls.lattice != *s.lattice())
            fail(ErrorKind::precondition, "expand: direction '" + name + "' lives on a different lattice");
    }

    // Pairings Q(A_i, A_j) are shared by every term.
    std::vector<std::vector<Rat>> pairings(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pairings[i][j] = pair(directions[i].second, directions[j].second);

    for (const auto& t : s.terms()) {
        // Exponent polynomial P(t_1..t_n) of this term along the ray.
        Poly P;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Rat quad = t.q * pairings[i][j];
                if (i == j) quad /= 2;
                if (quad == 0) continue;
                std::vector<unsigned> m(n, 0);
                m[i] += 1;
                m[j] += 1;
                poly_add_term(P, m, GaussianRational(quad));
            }
            GaussianRational lin = s.term_frequency_on(t, directions[i].second);
            if (!lin.is_zero()) {
                std::vector<unsigned> m(n, 0);
                m[i] = 1;
                poly_add_term(P, m, lin);
            }
        }
        // exp(P) = Σ P^k / k!, truncated: P has no constant term, so P^k only
        // contributes from total degree k on.
        Poly power;
        poly_add_term(power, std::vector<unsigned>(n, 0), GaussianRational(Rat(1)));
        Rat k_factorial(1);
        for (unsigned k = 0; k <= degree; ++k) {
            if (k > 0) {
                power = poly_mul(power, P, degree);
                k_factorial *= k;
                if (power.empty()) break;
            }
            GaussianRational inv_fact(Rat(1) / k_factorial);
            for (const auto& [multi, c] : power) {
                GaussianRational contribution = t.coeff * c * inv_fact;
                if (contribution.is_zero()) continue;
                auto [it, inserted] = table.coefficients.emplace(multi, contribution);
                if (!inserted) {
                    it->second += contribution;
                    if (it->second.is_zero()) table.coefficients.erase(it);
                }
            }
        }
    }
    return table;
}

GaussianRational evaluate_monomial(const DSeries& s, const LatticeClass& A, unsigned d) {
    ExpansionTable t = expand(s, {{"u", A}}, d);
    return GaussianRational(factorial(d)) * t.coefficient({d});
}

LatticePtr ray_lattice() {
    static LatticePtr lat = make_lattice("ray", {"T"}, {{Rat(1)}});
    return lat;
}

DSeries restrict_to_ray(const DSeries& s, const LatticeClass& A) {
    if (*A.lattice != *s.lattice())
        fail(ErrorKind::precondition, "restrict_to_ray: class lives on a different lattice");
    Rat a2 = pair(A, A);
    std::vector<ExpTerm> out;
    out.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        ExpTerm ray;
        ray.q = t.q * a2;  // q·Q(tA)/2 = (q·A²)·t²/2 and Q(T,T) = 1
        ray.freq = {s.term_frequency_on(t, A)};
        ray.coeff = t.coeff;
        out.push_back(std::move(ray));
    }
    return DSeries(ray_lattice(), std::move(out));
}

} // namespace donaldson
