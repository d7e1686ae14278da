#include "donaldson/lattice.hpp"

#include <algorithm>
#include <set>

namespace donaldson {

IntersectionLattice::IntersectionLattice(std::string name, std::vector<std::string> generators,
                                         std::vector<std::vector<Rat>> gram)
    : name_(std::move(name)), generators_(std::move(generators)), gram_(std::move(gram)) {
    const std::size_t n = generators_.size();
    if (n == 0) fail(ErrorKind::validation, "lattice '" + name_ + "': rank must be positive");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty()) fail(ErrorKind::validation, "lattice '" + name_ + "': empty generator name");
        if (!seen.insert(g).second)
            fail(ErrorKind::validation, "lattice '" + name_ + "': duplicate generator '" + g + "'");
    }
    if (gram_.size() != n)
        fail(ErrorKind::validation, "lattice '" + name_ + "': gram has " +
                                        std::to_string(gram_.size()) + " rows, expected " + std::to_string(n));
    for (const auto& row : gram_)
        if (row.size() != n)
            fail(ErrorKind::validation, "lattice '" + name_ + "': gram is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                fail(ErrorKind::validation, "lattice '" + name_ + "': gram not symmetric at (" +
                                                generators_[i] + "," + generators_[j] + ")");
}

std::size_t IntersectionLattice::index_of(const std::string& generator) const {
    auto it = std::find(generators_.begin(), generators_.end(), generator);
    if (it == generators_.end())
        fail(ErrorKind::precondition, "lattice '" + name_ + "' has no generator '" + generator + "'");
    return static_cast<std::size_t>(it - generators_.begin());
}

bool IntersectionLattice::has_generator(const std::string& generator) const {
    return std::find(generators_.begin(), generators_.end(), generator) != generators_.end();
}

bool IntersectionLattice::gram_is_integral() const {
    for (const auto& row : gram_)
        for (const auto& x : row)
            if (!is_integer(x)) return false;
    return true;
}

LatticePtr make_lattice(std::string name, std::vector<std::string> generators,
                        std::vector<std::vector<Rat>> gram) {
    return std::make_shared<const IntersectionLattice>(std::move(name), std::move(generators),
                                                       std::move(gram));
}

LatticeClass::LatticeClass(LatticePtr lat, std::vector<Rat> c)
    : lattice(std::move(lat)), coords(std::move(c)) {
    if (!lattice) fail(ErrorKind::precondition, "class without a lattice");
    if (coords.size() != lattice->rank())
        fail(ErrorKind::precondition, "class on '" + lattice->name() + "' has " +
                                          std::to_string(coords.size()) + " coordinates, expected " +
                                          std::to_string(lattice->rank()));
}

bool LatticeClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool LatticeClass::is_integral() const {
    for (const auto& c : coords)
        if (!is_integer(c)) return false;
    return true;
}

LatticeClass LatticeClass::operator-() const {
    LatticeClass out = *this;
    for (auto& c : out.coords) c = -c;
    return out;
}

LatticeClass operator+(const LatticeClass& a, const LatticeClass& b) {
    require_same_lattice(a, b, "add");
    LatticeClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

LatticeClass operator-(const LatticeClass& a, const LatticeClass& b) {
    require_same_lattice(a, b, "subtract");
    LatticeClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

LatticeClass operator*(const Rat& s, const LatticeClass& a) {
    LatticeClass out = a;
    for (auto& c : out.coords) c *= s;
    return out;
}

bool operator==(const LatticeClass& a, const LatticeClass& b) {
    return *a.lattice == *b.lattice && a.coords == b.coords;
}

LatticeClass LatticeClass::zero(const LatticePtr& lat) {
    return LatticeClass(lat, std::vector<Rat>(lat->rank(), Rat(0)));
}

LatticeClass LatticeClass::generator(const LatticePtr& lat, const std::string& name) {
    std::vector<Rat> c(lat->rank(), Rat(0));
    c[lat->index_of(name)] = 1;
    return LatticeClass(lat, std::move(c));
}

std::string LatticeClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Rat& c = coords[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c == -1) out += "-";
            else if (c != 1) out += rat_to_string(c) + "*";
        } else {
            out += (c > 0) ? " + " : " - ";
            Rat a = abs(c);
            if (a != 1) out += rat_to_string(a) + "*";
        }
        out += lattice->generators()[i];
    }
    return out.empty() ? "0" : out;
}

void require_same_lattice(const LatticeClass& u, const LatticeClass& v, const char* op) {
    if (*u.lattice != *v.lattice)
        fail(ErrorKind::precondition, std::string(op) + ": classes live on different lattices ('" +
                                          u.lattice->name() + "' vs '" + v.lattice->name() + "')");
}

Rat pair(const LatticeClass& u, const LatticeClass& v) {
    require_same_lattice(u, v, "pair");
    const auto& G = u.lattice->gram();
    Rat acc(0);
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        if (u.coords[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < v.coords.size(); ++j) {
            if (v.coords[j] == 0) continue;
            row += G[i][j] * v.coords[j];
        }
        acc += u.coords[i] * row;
    }
    return acc;
}

bool validate_allowable(const LatticeClass& w, const LatticeClass& sigma) {
    require_same_lattice(w, sigma, "validate_allowable");
    if (!w.is_integral() || !sigma.is_integral())
        fail(ErrorKind::precondition, "validate_allowable: classes must be integral");
    return is_odd(pair(w, sigma)) && pair(sigma, sigma) == 0;
}

bool adjunction_check(const LatticeClass& K, const LatticeClass& S, unsigned genus) {
    require_same_lattice(K, S, "adjunction_check");
    if (!K.is_integral() || !S.is_integral())
        fail(ErrorKind::precondition, "adjunction_check: classes must be integral");
    Rat s2 = pair(S, S);
    if (s2 < 0) fail(ErrorKind::precondition, "adjunction_check: bound not applicable (S^2 < 0)");
    return Rat(2 * static_cast<long>(genus) - 2) >= s2 + abs(pair(K, S));
}

} // namespace donaldson
