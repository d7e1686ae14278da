// Manifold records carrying simple-type structures, and the transform between
// the Donaldson series 𝔻^w and the allowable-pair series D^{(w,Σ)}.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson {

struct BasicClassEntry {
    LatticeClass k;  // integral basic class
    Rat a;           // nonzero, stored w-independently
};

struct SimpleTypeStructure {
    std::vector<BasicClassEntry> entries;

    bool empty() const { return entries.empty(); }
    // The coefficient attached to K, or nullopt.
    std::optional<Rat> coefficient_of(const LatticeClass& K) const;
};

struct ManifoldRecord {
    std::string name;
    unsigned b1 = 0;
    unsigned b_plus = 1;
    LatticePtr lattice;
    LatticeClass sigma;  // distinguished genus-2 class: sigma^2 = 0, integral, odd
    bool simple_type = false;
    std::optional<unsigned> finite_type_order;
    SimpleTypeStructure structure;

    // b+ = 1 records: invariants fixed by the chamber of sigma; only the
    // monomial values D^{(w,Sigma)}(Sigma^d) are stored, never a full series.
    std::optional<std::string> chamber;
    std::map<unsigned, Rat> monomials;

    std::map<std::string, LatticeClass> named_classes;
    std::map<std::string, Rat> extra_constants;

    const LatticeClass& named_class(const std::string& name) const;
};

// d0(X, w) = -w^2 - (3/2)(1 - b1 + b+); integral whenever b+ - b1 is odd.
long d_zero(const ManifoldRecord& X, const LatticeClass& w);

// Parity of (3/2)(1 - b1 + b+): decides the w-independent ±K coefficient
// symmetry a(-K) = (-1)^eps a(K).
int structure_symmetry_parity(const ManifoldRecord& X);

// The w-sign (-1)^{(K·w + w^2)/2}; throws if K·w + w^2 is odd.
Rat w_sign(const LatticeClass& K, const LatticeClass& w);

// 𝔻^w_X(e^α) = e^{Q/2} Σ (-1)^{(K·w+w²)/2} a e^{K·α}.
DSeries build_dseries(const ManifoldRecord& X, const LatticeClass& w);

// Sector decomposition of an already w-signed 𝔻 series:
//   e^{Q/2} Σ_{K·Σ≡2 (4)} c e^{K·α}  +  i^{-d0} e^{-Q/2} Σ_{K·Σ≡0 (4)} c e^{iK·α}.
DSeries dws_from_signed(const DSeries& s, const LatticeClass& sigma, long d0);

// D^{(w,Σ)}_X(e^α), requiring (w, Σ) allowable.
DSeries to_DwS(const ManifoldRecord& X, const LatticeClass& w);

// Inverse of to_DwS: recovers the (K, a) pairs from a two-sector series.
SimpleTypeStructure from_DwS(const DSeries& s, const LatticeClass& sigma, long d0,
                             const LatticeClass& w);

// Empty iff the record satisfies every structural invariant: ±K symmetry with
// the parity sign, K·Σ even with |K·Σ| ≤ 2 (adjunction at genus 2), integral
// classes, nonzero coefficients, no duplicates, Σ² = 0, b+ - b1 odd.
std::vector<std::string> validate_structure(const ManifoldRecord& X);

} // namespace donaldson
