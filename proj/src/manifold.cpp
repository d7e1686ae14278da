#include "donaldson/manifold.hpp"

#include <algorithm>

namespace donaldson {

std::optional<Rat> SimpleTypeStructure::coefficient_of(const LatticeClass& K) const {
    for (const auto& e : entries)
        if (e.k == K) return e.a;
    return std::nullopt;
}

const LatticeClass& ManifoldRecord::named_class(const std::string& cls) const {
    auto it = named_classes.find(cls);
    if (it == named_classes.end())
        fail(ErrorKind::precondition, "record '" + name + "' has no named class '" + cls + "'");
    return it->second;
}

long d_zero(const ManifoldRecord& X, const LatticeClass& w) {
    if (!w.is_integral()) fail(ErrorKind::precondition, "d_zero: w must be integral");
    Rat d0 = -pair(w, w) - Rat(3, 2) * Rat(1 - static_cast<long>(X.b1) + static_cast<long>(X.b_plus));
    if (!is_integer(d0))
        fail(ErrorKind::internal, "d_zero not integral on '" + X.name + "' (corrupt record: b+ - b1 even?)");
    return to_long(d0);
}

int structure_symmetry_parity(const ManifoldRecord& X) {
    Rat eps = Rat(3, 2) * Rat(1 - static_cast<long>(X.b1) + static_cast<long>(X.b_plus));
    if (!is_integer(eps))
        fail(ErrorKind::internal, "record '" + X.name + "': b+ - b1 must be odd");
    return is_odd(eps) ? 1 : 0;
}

Rat w_sign(const LatticeClass& K, const LatticeClass& w) {
    Rat e = pair(K, w) + pair(w, w);
    if (!is_integer(e) || is_odd(e))
        fail(ErrorKind::precondition, "w not characteristic-compatible: K·w + w² = " + rat_to_string(e) +
                                          " for K = " + K.to_string());
    return minus_one_pow(e / 2);
}

DSeries build_dseries(const ManifoldRecord& X, const LatticeClass& w) {
    if (!X.simple_type)
        fail(ErrorKind::precondition, "build_dseries: record '" + X.name + "' is not of simple type" +
                                          (X.chamber ? " (chamber record stores monomial values only)" : ""));
    if (*w.lattice != *X.lattice)
        fail(ErrorKind::precondition, "build_dseries: w lives on a different lattice");
    std::vector<ExpTerm> terms;
    terms.reserve(X.structure.entries.size());
    for (const auto& e : X.structure.entries) {
        ExpTerm t;
        t.q = 1;
        t.freq.assign(e.k.coords.begin(), e.k.coords.end());
        t.coeff = GaussianRational(w_sign(e.k, w) * e.a);
        terms.push_back(std::move(t));
    }
    return DSeries(X.lattice, std::move(terms));
}

DSeries dws_from_signed(const DSeries& s, const LatticeClass& sigma, long d0) {
    const GaussianRational i(Rat(0), Rat(1));
    const GaussianRational twist = i_pow(-d0);
    std::vector<ExpTerm> out;
    out.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        if (t.q != 1)
            fail(ErrorKind::precondition, "dws_from_signed: series is not in 𝔻-form (q != 1)");
        LatticeClass K(s.lattice(), [&] {
            std::vector<Rat> coords;
            coords.reserve(t.freq.size());
            for (const auto& f : t.freq) {
                if (!f.is_real())
                    fail(ErrorKind::precondition, "dws_from_signed: non-real frequency in 𝔻-form series");
                coords.push_back(f.re);
            }
            return coords;
        }());
        Rat ks = pair(K, sigma);
        if (!is_integer(ks) || is_odd(ks))
            fail(ErrorKind::precondition, "dws_from_signed: K·Σ odd for K = " + K.to_string());
        if (mod4(ks) == 2) {
            out.push_back(t);  // e^{Q/2} sector, unchanged
        } else {
            ExpTerm rot;
            rot.q = -1;
            rot.freq.reserve(t.freq.size());
            for (const auto& f : t.freq) rot.freq.push_back(f * i);
            rot.coeff = t.coeff * twist;
            out.push_back(std::move(rot));
        }
    }
    return DSeries(s.lattice(), std::move(out));
}

DSeries to_DwS(const ManifoldRecord& X, const LatticeClass& w) {
    if (!validate_allowable(w, X.sigma))
        fail(ErrorKind::precondition, "to_DwS: (w, Σ) is not an allowable pair on '" + X.name + "'");
    return dws_from_signed(build_dseries(X, w), X.sigma, d_zero(X, w));
}

SimpleTypeStructure from_DwS(const DSeries& s, const LatticeClass& sigma, long d0,
                             const LatticeClass& w) {
    SimpleTypeStructure st;
    std::vector<std::string> offenders;
    const GaussianRational untwist = i_pow(d0);
    for (const auto& t : s.terms()) {
        LatticeClass K = LatticeClass::zero(LatticePtr(s.lattice()));
        GaussianRational raw;
        if (t.q == 1) {
            bool real = true;
            std::vector<Rat> coords;
            for (const auto& f : t.freq) {
                real = real && f.is_real();
                coords.push_back(f.re);
            }
            if (!real) {
                offenders.push_back("q=+1 term with non-real frequency");
                continue;
            }
            K = LatticeClass(s.lattice(), std::move(coords));
            if (mod4(pair(K, sigma)) != 2) {
                offenders.push_back("q=+1 term with K·Σ = " + rat_to_string(pair(K, sigma)) +
                                    " (expected ≡ 2 mod 4) for K = " + K.to_string());
                continue;
            }
            raw = t.coeff;
        } else if (t.q == -1) {
            bool imag = true;
            std::vector<Rat> coords;
            for (const auto& f : t.freq) {
                imag = imag && f.is_imaginary();
                coords.push_back(f.im);
            }
            if (!imag) {
                offenders.push_back("q=-1 term with non-imaginary frequency");
                continue;
            }
            K = LatticeClass(s.lattice(), std::move(coords));
            if (mod4(pair(K, sigma)) != 0) {
                offenders.push_back("q=-1 term with K·Σ = " + rat_to_string(pair(K, sigma)) +
                                    " (expected ≡ 0 mod 4) for K = " + K.to_string());
                continue;
            }
            raw = t.coeff * untwist;
        } else {
            offenders.push_back("term with q = " + rat_to_string(t.q) + " (expected ±1)");
            continue;
        }
        if (!raw.is_real()) {
            offenders.push_back("recovered coefficient not rational for K = " + K.to_string());
            continue;
        }
        Rat a = w_sign(K, w) * raw.re;
        if (st.coefficient_of(K)) {
            offenders.push_back("duplicate basic class " + K.to_string());
            continue;
        }
        st.entries.push_back({std::move(K), std::move(a)});
    }
    if (!offenders.empty()) {
        std::string msg = "from_DwS: malformed sector shape:";
        for (const auto& o : offenders) msg += "\n  - " + o;
        fail(ErrorKind::precondition, msg);
    }
    return st;
}

std::vector<std::string> validate_structure(const ManifoldRecord& X) {
    std::vector<std::string> violations;
    auto note = [&](const std::string& v) { violations.push_back(v); };

    if ((static_cast<long>(X.b_plus) - static_cast<long>(X.b1)) % 2 == 0)
        note("b+ - b1 is even");
    if (X.b_plus < 1) note("b+ must be positive");
    if (!X.sigma.is_integral()) note("Σ is not integral");
    if (pair(X.sigma, X.sigma) != 0) note("Σ² = " + rat_to_string(pair(X.sigma, X.sigma)) + " (expected 0)");
    if (X.chamber && X.b_plus != 1) note("chamber flag on a record with b+ > 1");
    if (X.b_plus == 1 && !X.chamber) note("b+ = 1 record without a chamber flag");
    if (!violations.empty()) return violations;  // parity data needed below

    const int eps = structure_symmetry_parity(X);
    for (const auto& e : X.structure.entries) {
        const std::string kname = e.k.to_string();
        if (!e.k.is_integral()) note("basic class " + kname + " is not integral");
        if (e.a == 0) note("zero coefficient for basic class " + kname);
        Rat ks = pair(e.k, X.sigma);
        if (!is_integer(ks) || is_odd(ks)) note("K·Σ odd for K = " + kname);
        if (abs(ks) > 2) note("adjunction violated: |K·Σ| = " + rat_to_string(abs(ks)) + " > 2 for K = " + kname);
        std::size_t count = 0;
        for (const auto& other : X.structure.entries)
            if (other.k == e.k) ++count;
        if (count > 1) note("duplicate basic class " + kname);
        auto mirror = X.structure.coefficient_of(-e.k);
        Rat expected = (eps == 1) ? -e.a : e.a;
        if (!mirror)
            note("missing mirror class -K for K = " + kname);
        else if (*mirror != expected)
            note("±K symmetry violated for K = " + kname + ": coefficient of -K is " +
                 rat_to_string(*mirror) + ", expected " + rat_to_string(expected));
    }
    return violations;
}

} // namespace donaldson
