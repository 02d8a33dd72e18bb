#include "halg/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace halg {

namespace {

mpq_class parse_rational(std::string_view t, std::string_view whole) {
    std::string s(t);
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    if (s[0] == '+') s.erase(0, 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && k == 0);
        if (!ok) throw std::invalid_argument("bad scalar: " + std::string(whole));
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + std::string(whole));
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(whole));
    q.canonicalize();
    return q;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::frac(long p, long q, long r, long s) {
    return Scalar(mpq_class(p, q), mpq_class(r, s));
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    if (t.back() != 'i') return Scalar(parse_rational(t, text), 0);
    t.remove_suffix(1);
    if (!t.empty() && t.back() == '*') t.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if (t[k] == '+' || t[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return Scalar(0, parse_rational(t, text));
    return Scalar(parse_rational(t.substr(0, split), text), parse_rational(t.substr(split), text));
}

Scalar Scalar::inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
    return Scalar(re_ / n, -im_ / n);
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s = re_.get_str();
    if (sgn(im_) > 0) s += "+";
    s += im_.get_str();
    s += "*i";
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return 1;
        case 1: return Scalar::i();
        case 2: return -1;
        default: return -Scalar::i();
    }
}

}  // namespace halg
