#include "charrel/ratfun.hpp"

#include "charrel/errors.hpp"

namespace charrel {

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    BigRat lead = den_.leading();
    if (lead != 1) {
        BigRat inv = BigRat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

const UniPoly& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw internal_error("rational function is not a polynomial: " + str());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw input_error("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

BigRat RationalFunction::eval(long n) const {
    BigRat d = den_.eval(n);
    if (d == 0) throw pole_error("pole at N=" + std::to_string(n) + " in " + str());
    return num_.eval(n) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str_factored(var) + ")";
}

}  // namespace charrel
