// Exact finite jets of series along chosen directions: the Taylor coefficients
// of s(t₁A₁ + ... + t_nA_n) through a chosen total degree.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson {

struct ExpansionTable {
    std::vector<std::string> variables;
    unsigned degree = 0;
    // multi-degree (one exponent per variable) -> coefficient; zero entries omitted.
    std::map<std::vector<unsigned>, GaussianRational> coefficients;

    GaussianRational coefficient(const std::vector<unsigned>& multi) const;
    bool all_real() const;

    friend bool operator==(const ExpansionTable& a, const ExpansionTable& b) {
        return a.variables == b.variables && a.degree == b.degree && a.coefficients == b.coefficients;
    }
    friend bool operator!=(const ExpansionTable& a, const ExpansionTable& b) { return !(a == b); }

    // One line per nonzero coefficient, ordered by (total degree, multi-degree),
    // e.g. "t*s^2: -1/2". The constant monomial prints as "1".
    std::string to_string() const;
};

using Direction = std::pair<std::string, LatticeClass>;

// The exponent of a term along the ray is q·Q(Σ tᵢAᵢ)/2 + Σ tᵢ·λ(Aᵢ), a
// quadratic-plus-linear polynomial, exponentiated by exact power series.
ExpansionTable expand(const DSeries& s, const std::vector<Direction>& directions, unsigned degree);

// d! × (coefficient of u^d in expand(s, [(u, A)], d)).
GaussianRational evaluate_monomial(const DSeries& s, const LatticeClass& A, unsigned d);

// Rank-1 lattice {T} with Q(T,T) = 1, housing single-variable restrictions:
// a term c·e^{γt² + βt} is stored as q = 2γ, freq = (β).
LatticePtr ray_lattice();

// The exact restriction s(tA) as a series on ray_lattice().
DSeries restrict_to_ray(const DSeries& s, const LatticeClass& A);

} // namespace donaldson
