// Gaussian rationals a+bi with exact rational a, b. These carry the i^{-d0}
// factors and the imaginary frequencies e^{iK·α} of the D^{(w,Σ)} sectors.
#pragma once

#include <string>

#include "donaldson/rational.hpp"

namespace donaldson {

struct GaussianRational {
    Rat re{0};
    Rat im{0};

    GaussianRational() = default;
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(int r) : re(r) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_imaginary() const { return re == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Total order used for canonical forms: (re, im) lexicographic.
inline int compare(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re ? -1 : 1;
    if (a.im != b.im) return a.im < b.im ? -1 : 1;
    return 0;
}

// i^n for any (possibly negative) integer n.
inline GaussianRational i_pow(long n) {
    long m = n % 4;
    if (m < 0) m += 4;
    switch (m) {
        case 0: return {Rat(1), Rat(0)};
        case 1: return {Rat(0), Rat(1)};
        case 2: return {Rat(-1), Rat(0)};
        default: return {Rat(0), Rat(-1)};
    }
}

// "1/2", "1/2+1/4i", "0-1i": real part always printed, imaginary part with a
// folded sign. Deterministic across runs.
inline std::string gq_to_string(const GaussianRational& z) {
    std::string out = rat_to_string(z.re);
    if (z.im != 0) {
        out += (z.im > 0) ? "+" : "-";
        out += rat_to_string(abs(z.im));
        out += "i";
    }
    return out;
}

} // namespace donaldson
