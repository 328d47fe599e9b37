#include "r2kit/exact.hpp"

#include <stdexcept>

namespace r2kit {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    Rational den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0) throw std::domain_error("GaussRational division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / den;
    Rational m = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

std::string GaussRational::str() const {
    if (im_ == 0) return re_.str();
    if (re_ == 0) return im_.str() + "i";
    return re_.str() + (im_ < 0 ? "" : "+") + im_.str() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& v) { return os << v.str(); }

}  // namespace r2kit
