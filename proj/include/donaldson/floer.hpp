// The finite-dimensional pairing model of relative invariants: V₄ with its
// fixed Gram matrix N, the coefficient systems extracted from simple-type
// structures, the universal diagonal matrices M(t) and M̃(t), and the l = -32
// verification pipeline. Single-variable series live on ray_lattice().
#pragma once

#include <array>
#include <map>

#include "donaldson/expansion.hpp"
#include "donaldson/manifold.hpp"

namespace donaldson {

using RatMatrix = std::vector<std::vector<Rat>>;

// N, the intersection matrix of e_i = φ^w(A, Σ^i), i = 0..3.
const RatMatrix& gram_v4();

// Exact Gauss-Jordan inverse; throws on singular input.
RatMatrix invert(const RatMatrix& m);

// N⁻¹, derived once by exact elimination.
const RatMatrix& gram_v4_inverse();

// Rebuilds (e_i·e_j) from a monomial table D^{(w,Σ)}(Σ^d): entry (i,j) = table[i+j].
RatMatrix gram_from_monomials(const std::map<unsigned, Rat>& table);

enum class RelSpace { V4, V2 };

// Coordinate vector in the dual basis of {e_i}; coordinates are functions of t.
struct RelativeVector {
    RelSpace space = RelSpace::V4;
    std::vector<DSeries> coords;
};

RelativeVector relvec_from_monomials(const std::vector<DSeries>& values);
RelativeVector relvec_from_constants(const std::array<Rat, 4>& values);

// u^T N⁻¹ v with exact rationals; both vectors must be V4.
DSeries pair_v4(const RelativeVector& u, const RelativeVector& v);

// The dual coordinates (pairings against e_0..e_3) of φ^w(X°, z·Σ^shift):
// the monomial evaluations of a D^{(w,Σ)} series against Σ.
RelativeVector phi_vector(const DSeries& dws, const LatticeClass& sigma, unsigned shift);

// c₁, c₂, c₃ of Eq-coefficients form; c₄ is a structural zero for simple type.
struct CoefficientTriple {
    DSeries c1, c2, c3;
};

// c₁ sums w-signed a over K·Σ = 2 into e^{Q(tD₁)/2 + t K·D₁}; c₂ over K·Σ = −2;
// c₃ = e^{−Q(tD₁)/2} Σ_{K·Σ=0} i^{−d0} a_w e^{i t K·D₁}.
CoefficientTriple coefficients_from_structure(const ManifoldRecord& X, const LatticeClass& w,
                                              const LatticeClass& D1);

// The universal diagonal matrix: M₁₁(u) = l·e^{2u}, M₂₂(u) = −l·e^{−2u},
// M₃₃ = 0, with l = −32.
struct PairingMatrixM {
    Rat l{-32};
    DSeries m11(const Rat& sigma_dot_D) const;  // evaluated at u = t·(Σ·D)
    DSeries m22(const Rat& sigma_dot_D) const;
};

// Σᵢ cᵢ(t)·Mᵢᵢ(t·Σ·D)·c'ᵢ(t) = D^{(w,Σ)}_X(e^{tD}).
DSeries pair_via_M(const CoefficientTriple& left, const CoefficientTriple& right,
                   const PairingMatrixM& M, const Rat& sigma_dot_D);

// The capped-pairing diagonal (−½, +½) carrying the quadratic correction
// e^{Q(tD_C)/2} with Q(tD_C) = Q(tD) − Q(tD₁) − Q(tD₂).
struct PairingMatrixMtilde {
    Rat q_correction{0};  // D² − D₁² − D₂²
    DSeries m11() const;
    DSeries m22() const;
};

struct CoefficientPair {
    DSeries c1, c2;
};

// Eq-coefficients for a capped record: c̃ᵢ = e^{Q(tD₁)/2} Σ_{K̃·Σ=±2} ã_w e^{t K̃·D₁}.
CoefficientPair capped_coefficients(const ManifoldRecord& Xtilde, const LatticeClass& w,
                                    const LatticeClass& D1);

DSeries pair_via_Mtilde(const CoefficientPair& left, const CoefficientPair& right,
                        const PairingMatrixMtilde& M);

// Computes D^{(w,Σ)}_C(Σ) = pair_v4((1/2,0,2,0), (0,2,0,8)) = −8 and returns
// l = 4·(−8) = −32; throws if the result drifts from the stored constant.
Rat verify_l();

} // namespace donaldson
