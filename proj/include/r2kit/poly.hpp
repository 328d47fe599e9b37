#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "r2kit/exact.hpp"

namespace r2kit {

using cplx = std::complex<double>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, GaussRational>;

template <class T>
T imag_unit() {
    if constexpr (is_exact_v<T>) {
        return GaussRational::i();
    } else {
        return T(0.0, 1.0);
    }
}

inline cplx to_cplx(const cplx& v) { return v; }
inline cplx to_cplx(const GaussRational& v) { return v.to_complex(); }

inline bool exactly_zero(const cplx& v) { return v == cplx(0.0, 0.0); }
inline bool exactly_zero(const GaussRational& v) { return v.is_zero(); }

// Relative trimming threshold for floating-point coefficients.
inline constexpr double kTrimRelTol = 1e-14;

// Dense polynomial in ascending-degree order, kept canonical (no trailing zeros).
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(int k, T v = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = std::move(v);
        return Poly(std::move(c));
    }
    // a*x + b
    static Poly linear(T a, T b) { return Poly(std::vector<T>{std::move(b), std::move(a)}); }

    const std::vector<T>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T operator[](int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1, T(0));
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
        return Poly(std::move(d));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * T(-1); }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        if constexpr (is_exact_v<T>) {
            while (!c_.empty() && exactly_zero(c_.back())) c_.pop_back();
        } else {
            double mx = 0.0;
            for (const auto& v : c_) mx = std::max(mx, std::abs(v));
            const double thr = kTrimRelTol * mx;
            while (!c_.empty() && (exactly_zero(c_.back()) || std::abs(c_.back()) < thr)) c_.pop_back();
        }
    }

    std::vector<T> c_;
};

using ComplexPoly = Poly<cplx>;
using ExactPoly = Poly<GaussRational>;

template <class T>
Poly<T> wronskian(const Poly<T>& p, const Poly<T>& q) {
    return p * q.derivative() - q * p.derivative();
}

inline ComplexPoly to_complex(const ExactPoly& p) {
    std::vector<cplx> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
    return ComplexPoly(std::move(c));
}

inline double max_abs_coeff(const ComplexPoly& p) {
    double m = 0.0;
    for (const auto& v : p.coeffs()) m = std::max(m, std::abs(v));
    return m;
}

inline double max_imag_coeff(const ComplexPoly& p) {
    double m = 0.0;
    for (const auto& v : p.coeffs()) m = std::max(m, std::abs(v.imag()));
    return m;
}

inline double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b) {
    const int n = std::max(a.degree(), b.degree());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// (x - r)^k
template <class T>
Poly<T> power_of_linear(const T& r, int k) {
    Poly<T> out = Poly<T>::constant(T(1));
    const Poly<T> lin = Poly<T>::linear(T(1), T(0) - r);
    for (int j = 0; j < k; ++j) out = out * lin;
    return out;
}

}  // namespace r2kit
