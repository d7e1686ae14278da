// The two gluing formulas for X = X₁ #_Σ X₂ and their corollaries. Direct
// mode consumes simple-type factors; via-B mode consumes the capped records
// X̃ᵢ = Xᵢ #_Σ B together with normalized capping classes.
#pragma once

#include "donaldson/manifold.hpp"

namespace donaldson {

enum class BoundaryKind { multiple_of_circle, curve_in_sigma };

struct MatchedClass {
    std::string name;
    LatticeClass d1;  // piece in X₁ (direct) or capping in X̃₁ (via-B)
    LatticeClass d2;
    BoundaryKind boundary = BoundaryKind::multiple_of_circle;
    Rat circle_k;  // the k of D|_Y = k[S¹]; meaningful for multiple_of_circle
};

enum class GlueMode { direct, via_B };

struct GluingConfig {
    ManifoldRecord x1;  // factor records (direct) or capped records (via-B)
    ManifoldRecord x2;
    std::vector<MatchedClass> matched;
    GlueMode mode = GlueMode::direct;
    std::string glued_name;
    // Coordinates of the glued manifold's w over {matched names} ∪ {Sigma}.
    std::map<std::string, Rat> glued_w;
};

// Name of the distinguished surface generator in glued lattices.
inline const char* glued_sigma_name() { return "Sigma"; }

// Lattice on {matched names} ∪ {Sigma} with Q(D_a, D_b) = d1_a·d1_b + d2_a·d2_b,
// Q(D_a, Σ) = Σ₁·d1_a and Q(Σ, Σ) = 0. Validates Σ₁·d1 = Σ₂·d2 per class.
LatticePtr glued_form(const GluingConfig& cfg);

// 𝔻^w_X per the direct gluing formula: terms -32·a_w·b_w over the (2,2)
// sector with frequency pairings K·d1 + L·d2 + 2Σ·D, and +32·a_w·b_w over the
// (-2,-2) sector with K·d1 + L·d2 - 2Σ·D.
DSeries glue_direct(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2);

// 𝔻^w_X per the capped gluing formula: ∓½·ã_w·b̃_w over the (±2,±2) sectors
// with frequency pairings K̃·d1 + L̃·d2.
DSeries glue_via_B(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2);

// The glued ManifoldRecord: b1 = 0, b+ = b+₁ + b+₂ + 3, structure recovered
// through from_DwS with the declared glued w.
ManifoldRecord glued_record(const GluingConfig& cfg, const LatticeClass& w1, const LatticeClass& w2);

// Σ c_κ over basic classes κ restricting to (K, L): ±32(Σ a_i)(Σ b_j) when
// K·Σ = L·Σ = ±2, else 0. Restriction grouping is by pairing signature
// against Σ and every matched d-piece.
Rat pair_coefficient_sum(const ManifoldRecord& x1, const ManifoldRecord& x2,
                         const LatticeClass& K, const LatticeClass& L, const LatticeClass& w1,
                         const LatticeClass& w2, const std::vector<MatchedClass>& matched);

// True iff no term frequency K of the 𝔻-form series s has K·Σ = 0.
bool sigma_zero_check(const DSeries& s, const LatticeClass& sigma);

// True iff the coefficient multisets agree under a frequency bijection
// preserving coefficients and Σ-pairings. Both series must be in 𝔻-form.
bool invariant_profile_compare(const DSeries& a, const LatticeClass& sigma_a, const DSeries& b,
                               const LatticeClass& sigma_b);

} // namespace donaldson
