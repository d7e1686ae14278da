// Canonical-form arithmetic on finite exponential-quadratic series over
// Gaussian rationals: finite sums of c · exp(q·Q(α)/2 + λ(α)), the value type
// of every Donaldson series here. λ is stored as a frequency class with
// Gaussian-rational coordinates and evaluates through the gram matrix, so
// e^{iK·α} is first-class.
#pragma once

#include <vector>

#include "donaldson/gaussian.hpp"
#include "donaldson/lattice.hpp"

namespace donaldson {

struct ExpTerm {
    Rat q;                                  // multiplier of Q(α)/2
    std::vector<GaussianRational> freq;     // class coordinates of λ
    GaussianRational coeff;                 // nonzero in canonical form
};

// Canonical term order: q descending, then freq lexicographic by (re, im)
// coordinate pairs. No two canonical terms share (q, freq).
int compare_terms(const ExpTerm& a, const ExpTerm& b);

class DSeries {
public:
    explicit DSeries(LatticePtr lattice);  // the zero series
    DSeries(LatticePtr lattice, std::vector<ExpTerm> terms);  // canonicalizes

    const LatticePtr& lattice() const { return lattice_; }
    const std::vector<ExpTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // A real-frequency exponential term c · exp(q·Q/2 + K·α).
    static DSeries term(const LatticePtr& lattice, const Rat& q, const LatticeClass& K,
                        const GaussianRational& coeff);
    // Gaussian-frequency variant; freq given directly in coordinates.
    static DSeries term(const LatticePtr& lattice, const Rat& q,
                        std::vector<GaussianRational> freq, const GaussianRational& coeff);

    DSeries operator-() const;
    friend DSeries operator+(const DSeries& a, const DSeries& b);
    friend DSeries operator-(const DSeries& a, const DSeries& b);
    friend DSeries operator*(const DSeries& a, const DSeries& b);
    DSeries scaled(const GaussianRational& c) const;

    // Structural equality of canonical forms (and of the underlying lattices).
    friend bool operator==(const DSeries& a, const DSeries& b);
    friend bool operator!=(const DSeries& a, const DSeries& b) { return !(a == b); }

    // λ(A) of one term: freq^T · gram · A.
    GaussianRational term_frequency_on(const ExpTerm& t, const LatticeClass& A) const;

    // True if for every term (q, λ, c) the series also contains (q, conj λ, conj c).
    bool has_conjugation_symmetry() const;

    std::string to_string() const;

private:
    LatticePtr lattice_;
    std::vector<ExpTerm> terms_;
    void canonicalize();
};

// Termwise ½(q, λ, c) + ½·sign·(−q, iλ, i^{−d0}·c). With sign +1 this realizes
// D^w = ½(𝔻^w(e^{tα}) + i^{−d0}𝔻^w(e^{itα})); sign −1 gives the w+Σ variant.
DSeries project_parity(const DSeries& s, long d0, int sign);

void require_same_lattice(const DSeries& a, const DSeries& b, const char* op);

} // namespace donaldson
