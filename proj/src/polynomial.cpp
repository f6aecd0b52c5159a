#include "mstack/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "mstack/errors.hpp"

namespace mstack {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = c;
    }
    return p;
}

IntPolynomial IntPolynomial::one_minus_tk(std::size_t k) {
    IntPolynomial p = monomial(BigInt(-1), k);
    p.coeffs_[0] = 1;
    return p;
}

IntPolynomial IntPolynomial::one_plus_tk(std::size_t k) {
    IntPolynomial p = monomial(BigInt(1), k);
    p.coeffs_[0] = 1;
    return p;
}

BigInt IntPolynomial::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return BigInt(0);
    return coeffs_[k];
}

const BigInt& IntPolynomial::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

const BigInt& IntPolynomial::trailing_nonzero() const {
    assert(!coeffs_.empty());
    for (const BigInt& c : coeffs_)
        if (c != 0) return c;
    return coeffs_.back();  // unreachable for trimmed nonzero polynomials
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
    if (c == 0) return IntPolynomial();
    IntPolynomial out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& a : coeffs_) out.coeffs_.push_back(a * c);
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial result = constant(BigInt(1));
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        base = base * base;
        e >>= 1UL;
    }
    return result;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + k, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigInt(static_cast<long>(i));
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
    BigInt g(0);
    for (const BigInt& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    BigInt g = content();
    IntPolynomial out;
    out.coeffs_.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) out.coeffs_.push_back(c / g);
    return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        BigInt a = abs(c);
        if (i == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// One step of pseudo-remainder elimination; scalar multiples are harmless
// because the PRS re-primitivizes after every step.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const long db = b.degree();
    const BigInt lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const long da = a.degree();
        a = a * lb - b.shifted(static_cast<std::size_t>(da - db)) * a.coeff(static_cast<std::size_t>(da));
    }
    return a;
}

IntPolynomial sign_normalized(const IntPolynomial& p) {
    if (!p.is_zero() && p.leading() < 0) return -p;
    return p;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    BigInt c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = sign_normalized(a.primitive_part());
    b = sign_normalized(b.primitive_part());
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? IntPolynomial() : sign_normalized(r.primitive_part());
    }
    return a * c;
}

RatPolyDivRem poly_divmod_rational(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) fail("ZeroDenominator", "polynomial division by zero");
    std::vector<Rational> rem;
    rem.reserve(a.coeffs().size());
    for (const BigInt& c : a.coeffs()) rem.emplace_back(c);
    const long db = b.degree();
    std::vector<Rational> quot;
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational lb(b.leading());
    long dr = a.degree();
    while (dr >= db) {
        while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == 0) --dr;
        if (dr < db) break;
        Rational q = rem[static_cast<std::size_t>(dr)] / lb;
        quot[static_cast<std::size_t>(dr - db)] = q;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= q * Rational(b.coeff(static_cast<std::size_t>(i)));
        --dr;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    return {std::move(quot), std::move(rem)};
}

IntPolynomial poly_divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    RatPolyDivRem dr = poly_divmod_rational(a, b);
    if (!dr.remainder.empty()) fail("NonExactDivision", "polynomial division leaves a remainder");
    std::vector<BigInt> out;
    out.reserve(dr.quotient.size());
    for (const Rational& q : dr.quotient) {
        if (q.get_den() != 1) fail("NonExactDivision", "quotient has non-integer coefficients");
        out.push_back(q.get_num());
    }
    return IntPolynomial(std::move(out));
}

}  // namespace mstack
