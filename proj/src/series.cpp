#include "donaldson/series.hpp"

#include <algorithm>

namespace donaldson {

int compare_terms(const ExpTerm& a, const ExpTerm& b) {
    if (a.q != b.q) return a.q > b.q ? -1 : 1;  // q descending
    for (std::size_t i = 0; i < a.freq.size(); ++i) {
        int c = compare(a.freq[i], b.freq[i]);
        if (c != 0) return c;
    }
    return 0;
}

DSeries::DSeries(LatticePtr lattice) : lattice_(std::move(lattice)) {
    if (!lattice_) fail(ErrorKind::precondition, "series without a lattice");
}

DSeries::DSeries(LatticePtr lattice, std::vector<ExpTerm> terms)
    : lattice_(std::move(lattice)), terms_(std::move(terms)) {
    if (!lattice_) fail(ErrorKind::precondition, "series without a lattice");
    for (const auto& t : terms_)
        if (t.freq.size() != lattice_->rank())
            fail(ErrorKind::precondition, "term frequency rank mismatch on '" + lattice_->name() + "'");
    canonicalize();
}

void DSeries::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return compare_terms(a, b) < 0; });
    std::vector<ExpTerm> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && compare_terms(merged.back(), t) == 0)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const ExpTerm& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

DSeries DSeries::term(const LatticePtr& lattice, const Rat& q, const LatticeClass& K,
                      const GaussianRational& coeff) {
    if (*K.lattice != *lattice)
        fail(ErrorKind::precondition, "frequency class lives on a different lattice");
    std::vector<GaussianRational> freq(K.coords.begin(), K.coords.end());
    return DSeries::term(lattice, q, std::move(freq), coeff);
}

DSeries DSeries::term(const LatticePtr& lattice, const Rat& q, std::vector<GaussianRational> freq,
                      const GaussianRational& coeff) {
    return DSeries(lattice, {ExpTerm{q, std::move(freq), coeff}});
}

DSeries DSeries::operator-() const { return scaled(GaussianRational(Rat(-1))); }

DSeries DSeries::scaled(const GaussianRational& c) const {
    std::vector<ExpTerm> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return DSeries(lattice_, std::move(out));
}

DSeries operator+(const DSeries& a, const DSeries& b) {
    require_same_lattice(a, b, "add");
    std::vector<ExpTerm> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return DSeries(a.lattice_, std::move(out));
}

DSeries operator-(const DSeries& a, const DSeries& b) { return a + (-b); }

DSeries operator*(const DSeries& a, const DSeries& b) {
    require_same_lattice(a, b, "mul");
    std::vector<ExpTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            ExpTerm prod;
            prod.q = s.q + t.q;
            prod.freq.resize(s.freq.size());
            for (std::size_t i = 0; i < s.freq.size(); ++i) prod.freq[i] = s.freq[i] + t.freq[i];
            prod.coeff = s.coeff * t.coeff;
            out.push_back(std::move(prod));
        }
    return DSeries(a.lattice_, std::move(out));
}

bool operator==(const DSeries& a, const DSeries& b) {
    if (*a.lattice_ != *b.lattice_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (compare_terms(a.terms_[i], b.terms_[i]) != 0) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

GaussianRational DSeries::term_frequency_on(const ExpTerm& t, const LatticeClass& A) const {
    if (*A.lattice != *lattice_)
        fail(ErrorKind::precondition, "frequency evaluated against a class on a different lattice");
    const auto& G = lattice_->gram();
    GaussianRational acc;
    for (std::size_t i = 0; i < t.freq.size(); ++i) {
        if (t.freq[i].is_zero()) continue;
        Rat row(0);
        for (std::size_t j = 0; j < A.coords.size(); ++j) row += G[i][j] * A.coords[j];
        acc += t.freq[i] * GaussianRational(row);
    }
    return acc;
}

bool DSeries::has_conjugation_symmetry() const {
    for (const auto& t : terms_) {
        ExpTerm want;
        want.q = t.q;
        want.freq.reserve(t.freq.size());
        for (const auto& f : t.freq) want.freq.push_back(f.conj());
        bool found = false;
        for (const auto& u : terms_)
            if (compare_terms(u, want) == 0) {
                found = (u.coeff == t.coeff.conj());
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::string DSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + gq_to_string(t.coeff) + ") * exp((" + rat_to_string(t.q) + ")*Q/2";
        for (std::size_t i = 0; i < t.freq.size(); ++i)
            if (!t.freq[i].is_zero())
                out += " + (" + gq_to_string(t.freq[i]) + ")*" + lattice_->generators()[i];
        out += ")";
    }
    return out;
}

DSeries project_parity(const DSeries& s, long d0, int sign) {
    if (sign != 1 && sign != -1) fail(ErrorKind::precondition, "project_parity: sign must be +1 or -1");
    const GaussianRational half(Rat(1, 2));
    const GaussianRational twist = i_pow(-d0) * GaussianRational(Rat(sign)) * half;
    const GaussianRational i(Rat(0), Rat(1));
    std::vector<ExpTerm> out;
    out.reserve(2 * s.terms().size());
    for (const auto& t : s.terms()) {
        ExpTerm same{t.q, t.freq, t.coeff * half};
        ExpTerm rotated;
        rotated.q = -t.q;
        rotated.freq.reserve(t.freq.size());
        for (const auto& f : t.freq) rotated.freq.push_back(f * i);
        rotated.coeff = t.coeff * twist;
        out.push_back(std::move(same));
        out.push_back(std::move(rotated));
    }
    return DSeries(s.lattice(), std::move(out));
}

void require_same_lattice(const DSeries& a, const DSeries& b, const char* op) {
    if (*a.lattice() != *b.lattice())
        fail(ErrorKind::precondition, std::string(op) + ": series live on different lattices ('" +
                                          a.lattice()->name() + "' vs '" + b.lattice()->name() + "')");
}

} // namespace donaldson
