#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace r2kit {

using Rational = boost::multiprecision::cpp_rational;

// Gaussian rational re + i*im with arbitrary-precision parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int v) : re_(v) {}
    GaussRational(long long v) : re_(v) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }
    static GaussRational frac(long long num, long long den) { return {Rational(num, den)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussRational conj() const { return {re_, -im_}; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& v);

}  // namespace r2kit
