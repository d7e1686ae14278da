#include "donaldson/floer.hpp"

namespace donaldson {

const RatMatrix& gram_v4() {
    static const RatMatrix N = {
        {Rat(0), Rat(0), Rat(0), Rat(-1, 2)},
        {Rat(0), Rat(0), Rat(-1, 2), Rat(0)},
        {Rat(0), Rat(-1, 2), Rat(0), Rat(-2)},
        {Rat(-1, 2), Rat(0), Rat(-2), Rat(0)},
    };
    return N;
}

RatMatrix invert(const RatMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::precondition, "invert: matrix is not square");
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) fail(ErrorKind::precondition, "invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const RatMatrix& gram_v4_inverse() {
    static const RatMatrix Ninv = invert(gram_v4());
    return Ninv;
}

RatMatrix gram_from_monomials(const std::map<unsigned, Rat>& table) {
    RatMatrix out(4, std::vector<Rat>(4, Rat(0)));
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) {
            auto it = table.find(i + j);
            if (it == table.end())
                fail(ErrorKind::precondition,
                     "gram_from_monomials: table lacks degree " + std::to_string(i + j));
            out[i][j] = it->second;
        }
    return out;
}

RelativeVector relvec_from_monomials(const std::vector<DSeries>& values) {
    if (values.size() != 4)
        fail(ErrorKind::precondition, "relvec_from_monomials: expected 4 coordinates, got " +
                                          std::to_string(values.size()));
    return RelativeVector{RelSpace::V4, values};
}

RelativeVector relvec_from_constants(const std::array<Rat, 4>& values) {
    std::vector<DSeries> coords;
    coords.reserve(4);
    for (const auto& v : values) {
        if (v == 0) coords.push_back(DSeries(ray_lattice()));
        else coords.push_back(DSeries::term(ray_lattice(), Rat(0), {GaussianRational()}, GaussianRational(v)));
    }
    return RelativeVector{RelSpace::V4, std::move(coords)};
}

DSeries pair_v4(const RelativeVector& u, const RelativeVector& v) {
    if (u.space != RelSpace::V4 || v.space != RelSpace::V4)
        fail(ErrorKind::precondition, "pair_v4: both vectors must live in V4");
    if (u.coords.size() != 4 || v.coords.size() != 4)
        fail(ErrorKind::precondition, "pair_v4: coordinate arity mismatch");
    const RatMatrix& Ninv = gram_v4_inverse();
    DSeries acc(ray_lattice());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (Ninv[i][j] == 0) continue;
            acc = acc + (u.coords[i] * v.coords[j]).scaled(GaussianRational(Ninv[i][j]));
        }
    return acc;
}

RelativeVector phi_vector(const DSeries& dws, const LatticeClass& sigma, unsigned shift) {
    std::vector<DSeries> coords;
    coords.reserve(4);
    for (unsigned i = 0; i < 4; ++i) {
        GaussianRational v = evaluate_monomial(dws, sigma, i + shift);
        if (v.is_zero()) coords.push_back(DSeries(ray_lattice()));
        else coords.push_back(DSeries::term(ray_lattice(), Rat(0), {GaussianRational()}, v));
    }
    return RelativeVector{RelSpace::V4, std::move(coords)};
}

CoefficientTriple coefficients_from_structure(const ManifoldRecord& X, const LatticeClass& w,
                                              const LatticeClass& D1) {
    if (!X.simple_type || X.b1 != 0 || X.b_plus <= 1)
        fail(ErrorKind::precondition,
             "coefficients_from_structure: '" + X.name + "' must be simple type with b1 = 0, b+ > 1");
    if (*D1.lattice != *X.lattice)
        fail(ErrorKind::precondition, "coefficients_from_structure: D1 lives on a different lattice");
    const Rat d1sq = pair(D1, D1);
    const long d0 = d_zero(X, w);
    std::vector<ExpTerm> t1, t2, t3;
    for (const auto& e : X.structure.entries) {
        Rat ks = pair(e.k, X.sigma);
        Rat kd = pair(e.k, D1);
        GaussianRational a(w_sign(e.k, w) * e.a);
        if (ks == 2) t1.push_back(ExpTerm{d1sq, {GaussianRational(kd)}, a});
        else if (ks == -2) t2.push_back(ExpTerm{d1sq, {GaussianRational(kd)}, a});
        else if (ks == 0)
            t3.push_back(ExpTerm{-d1sq, {GaussianRational(Rat(0), kd)}, a * i_pow(-d0)});
        else
            fail(ErrorKind::precondition, "coefficients_from_structure: |K·Σ| > 2 on '" + X.name + "'");
    }
    return CoefficientTriple{DSeries(ray_lattice(), std::move(t1)), DSeries(ray_lattice(), std::move(t2)),
                             DSeries(ray_lattice(), std::move(t3))};
}

DSeries PairingMatrixM::m11(const Rat& sigma_dot_D) const {
    return DSeries::term(ray_lattice(), Rat(0), {GaussianRational(2 * sigma_dot_D)}, GaussianRational(l));
}

DSeries PairingMatrixM::m22(const Rat& sigma_dot_D) const {
    return DSeries::term(ray_lattice(), Rat(0), {GaussianRational(-2 * sigma_dot_D)}, GaussianRational(-l));
}

DSeries pair_via_M(const CoefficientTriple& left, const CoefficientTriple& right,
                   const PairingMatrixM& M, const Rat& sigma_dot_D) {
    // M₃₃ = 0, so c₃ never contributes.
    return left.c1 * M.m11(sigma_dot_D) * right.c1 + left.c2 * M.m22(sigma_dot_D) * right.c2;
}

DSeries PairingMatrixMtilde::m11() const {
    return DSeries::term(ray_lattice(), q_correction, {GaussianRational()}, GaussianRational(Rat(-1, 2)));
}

DSeries PairingMatrixMtilde::m22() const {
    return DSeries::term(ray_lattice(), q_correction, {GaussianRational()}, GaussianRational(Rat(1, 2)));
}

CoefficientPair capped_coefficients(const ManifoldRecord& Xtilde, const LatticeClass& w,
                                    const LatticeClass& D1) {
    CoefficientTriple t = coefficients_from_structure(Xtilde, w, D1);
    return CoefficientPair{t.c1, t.c2};
}

DSeries pair_via_Mtilde(const CoefficientPair& left, const CoefficientPair& right,
                        const PairingMatrixMtilde& M) {
    return left.c1 * M.m11() * right.c1 + left.c2 * M.m22() * right.c2;
}

Rat verify_l() {
    RelativeVector u = relvec_from_constants({Rat(1, 2), Rat(0), Rat(2), Rat(0)});
    RelativeVector v = relvec_from_constants({Rat(0), Rat(2), Rat(0), Rat(8)});
    DSeries d = pair_v4(u, v);
    if (d.size() != 1 || d.terms()[0].q != 0 || !d.terms()[0].freq[0].is_zero() ||
        !d.terms()[0].coeff.is_real())
        fail(ErrorKind::internal, "verify_l: pairing did not produce a constant");
    Rat dC_sigma = d.terms()[0].coeff.re;  // D^{(w,Σ)}_C(Σ)
    Rat l = 4 * dC_sigma;                  // from the doubled expansion, D^{(w,Σ)}_C(Σ) = l/4
    if (l != PairingMatrixM{}.l)
        fail(ErrorKind::internal, "verify_l: got l = " + rat_to_string(l) + ", stored constant is " +
                                      rat_to_string(PairingMatrixM{}.l));
    return l;
}

} // namespace donaldson
