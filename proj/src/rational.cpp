#include "mstack/rational.hpp"

#include "mstack/errors.hpp"

namespace mstack {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail("ZeroDenominator", "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational rat_pow(const BigInt& base, long exp) {
    if (exp >= 0) return Rational(int_pow(base, static_cast<unsigned long>(exp)));
    if (base == 0) fail("ZeroDenominator", "negative power of zero");
    return make_rational(1, int_pow(base, static_cast<unsigned long>(-exp)));
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) fail("ZeroDenominator", "negative power of zero");
        Rational inv = make_rational(base.get_den(), base.get_num());
        return rat_pow(inv, -exp);
    }
    BigInt n = int_pow(base.get_num(), static_cast<unsigned long>(exp));
    BigInt d = int_pow(base.get_den(), static_cast<unsigned long>(exp));
    return make_rational(n, d);
}

BigInt ceil_sqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());  // floor sqrt
    if (r * r < n) r += 1;
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 0;
    long m = q;
    for (long cand = 2; cand * cand <= m; ++cand) {
        if (m % cand == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) return true;  // q itself prime
    while (m % p == 0) m /= p;
    return m == 1;
}

std::string rational_to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace mstack
