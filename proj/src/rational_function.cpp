#include "mstack/rational_function.hpp"

#include "mstack/errors.hpp"

namespace mstack {

RationalFunction::RationalFunction() : num_(), den_(IntPolynomial::constant(BigInt(1))) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
    if (den.is_zero()) fail("ZeroDenominator", "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = IntPolynomial();
        den_ = IntPolynomial::constant(BigInt(1));
        return;
    }
    IntPolynomial g = poly_gcd(num, den);
    if (g.degree() >= 1 || g.content() != 1) {
        num = poly_divide_exact(num, g);
        den = poly_divide_exact(den, g);
    }
    if (den.trailing_nonzero() < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::from_polynomial(IntPolynomial p) {
    return RationalFunction(std::move(p), IntPolynomial::constant(BigInt(1)));
}

RationalFunction RationalFunction::one() { return from_polynomial(IntPolynomial::constant(BigInt(1))); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

TruncatedSeries RationalFunction::expand(long order) const {
    if (den_.coeff(0) == 0) fail("PoleAtZero", "denominator vanishes at t = 0");
    TruncatedSeries out = TruncatedSeries::zero(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    const Rational d0(den_.coeff(0));
    const long dd = den_.degree();
    for (long k = 0; k <= order; ++k) {
        Rational acc(num_.coeff(static_cast<std::size_t>(k)));
        for (long j = 1; j <= std::min<long>(k, dd); ++j)
            acc -= Rational(den_.coeff(static_cast<std::size_t>(j))) * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc / d0;
    }
    return TruncatedSeries(order, std::move(c));
}

std::string RationalFunction::to_string() const {
    if (den_ == IntPolynomial::constant(BigInt(1))) return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rational_normalize(IntPolynomial num, IntPolynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

TruncatedSeries expand_rational(const RationalFunction& f, long order) { return f.expand(order); }

}  // namespace mstack
