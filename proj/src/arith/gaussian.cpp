#include "spinres/arith/gaussian.hpp"

#include "spinres/errors.hpp"

namespace spinres {

GaussianRational GaussianRational::inverse() const {
    Rational d = norm();
    if (sgn(d) == 0) throw DivisionByZero("inverse of zero Gaussian rational");
    return {re_ / d, -im_ / d};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw DivisionByZero("division by zero Gaussian rational");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return spinres::to_string(re_);
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = spinres::to_string(im_) + "i";
    }
    if (sgn(re_) == 0) return im_part;
    std::string out = spinres::to_string(re_);
    if (sgn(im_) > 0) out += "+";
    return out + im_part;
}

GaussianRational pow(const GaussianRational& z, unsigned k) {
    GaussianRational r(1), b = z;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

}  // namespace spinres
