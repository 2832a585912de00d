#pragma once

#include "gkmod/rational.hpp"

#include <string>

namespace gkmod {

// Element of Q(i): re + im*i with exact rational parts. This is the
// coefficient field for all symbolic computation in the engine.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(make_rational(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long r, long i) : re(make_rational(r)), im(make_rational(i)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2 = re^2 + im^2, exact.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n2 = o.norm2();
        if (n2 == 0) throw std::domain_error("division by zero in Q(i)");
        GaussianRational num = *this * o.conj();
        return {num.re / n2, num.im / n2};
    }

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
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Container ordering only (no field meaning).
    bool operator<(const GaussianRational& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    // Upper bound on |re + im*i| in double, rounded outward.
    double abs_upper() const;

    size_t size_hint() const { return rational_size_hint(re) + rational_size_hint(im); }

    std::string to_string() const;
};

// "a/b", "a/b*i", "a/b+c/d*i", "-i", ... Also accepted by the polynomial
// expression parser; this handles the scalar-only case.
GaussianRational gaussian_from_string(const std::string& s);

}  // namespace gkmod
