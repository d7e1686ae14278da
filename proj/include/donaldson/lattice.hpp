// Finite-rank lattices with a symmetric bilinear form, modeling the relevant
// sublattice of H^2(X) together with its intersection pairing. Classes and
// covectors share one representation; every evaluation goes through the gram
// matrix.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

class IntersectionLattice {
public:
    // Throws unless the gram matrix is symmetric and square of matching rank
    // and all generator names are distinct.
    IntersectionLattice(std::string name, std::vector<std::string> generators,
                        std::vector<std::vector<Rat>> gram);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return generators_.size(); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    const Rat& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    // Index of a generator name; throws for unknown names.
    std::size_t index_of(const std::string& generator) const;
    bool has_generator(const std::string& generator) const;

    bool gram_is_integral() const;

    // Compatibility for series/class arithmetic is structural, not by object
    // identity, so independently parsed or regenerated lattices compare equal.
    friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
        return a.generators_ == b.generators_ && a.gram_ == b.gram_;
    }
    friend bool operator!=(const IntersectionLattice& a, const IntersectionLattice& b) { return !(a == b); }

private:
    std::string name_;
    std::vector<std::string> generators_;
    std::vector<std::vector<Rat>> gram_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

LatticePtr make_lattice(std::string name, std::vector<std::string> generators,
                        std::vector<std::vector<Rat>> gram);

struct LatticeClass {
    LatticePtr lattice;
    std::vector<Rat> coords;

    LatticeClass() = default;
    LatticeClass(LatticePtr lat, std::vector<Rat> c);

    bool is_zero() const;
    bool is_integral() const;

    LatticeClass operator-() const;
    friend LatticeClass operator+(const LatticeClass& a, const LatticeClass& b);
    friend LatticeClass operator-(const LatticeClass& a, const LatticeClass& b);
    friend LatticeClass operator*(const Rat& s, const LatticeClass& a);
    friend bool operator==(const LatticeClass& a, const LatticeClass& b);
    friend bool operator!=(const LatticeClass& a, const LatticeClass& b) { return !(a == b); }

    // Zero class and basis classes.
    static LatticeClass zero(const LatticePtr& lat);
    static LatticeClass generator(const LatticePtr& lat, const std::string& name);

    std::string to_string() const;  // e.g. "S - E1 - E2", "2D + 2Sigma"
};

// Requires both classes to live on structurally equal lattices.
void require_same_lattice(const LatticeClass& u, const LatticeClass& v, const char* op);

// u^T · gram · v, exact.
Rat pair(const LatticeClass& u, const LatticeClass& v);

// True iff w·σ ≡ 1 (mod 2) and σ² = 0. Both classes must be integral.
bool validate_allowable(const LatticeClass& w, const LatticeClass& sigma);

// The adjunction bound 2g−2 ≥ S² + |K·S|; only applicable when S² ≥ 0.
bool adjunction_check(const LatticeClass& K, const LatticeClass& S, unsigned genus);

} // namespace donaldson
