#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace halg {

// Gaussian rational re + im*i with exact GMP rational parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}
    Scalar(mpq_class re, mpq_class im = 0);

    static Scalar i() { return Scalar(0, 1); }
    static Scalar frac(long p, long q, long r = 0, long s = 1);
    // Accepts "p", "p/q", "p/q+r/s*i", "r/s*i", "i", "-i".
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;
    std::string str() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// i^k for any integer k.
Scalar i_pow(long k);

}  // namespace halg
