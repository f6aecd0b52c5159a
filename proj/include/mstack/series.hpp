#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstack/polynomial.hpp"
#include "mstack/rational.hpp"

namespace mstack {

// Truncation order used throughout unless a caller overrides it; every
// identity in scope stabilizes well below this.
inline constexpr long kDefaultOrder = 40;

// Formal power series in t truncated at a fixed order: exactly order+1 exact
// rational coefficients. Arithmetic results carry the minimum order of their
// inputs.
class TruncatedSeries {
public:
    TruncatedSeries(long order, std::vector<Rational> coeffs);

    static TruncatedSeries zero(long order);
    static TruncatedSeries one(long order);
    static TruncatedSeries from_polynomial(const IntPolynomial& p, long order);

    long order() const { return order_; }
    const Rational& coeff(std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    TruncatedSeries truncated(long new_order) const;  // new_order <= order

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries& o) const;

    // First degree (up to the common order) where coefficients differ.
    std::optional<long> first_mismatch(const TruncatedSeries& o) const;

    std::string to_string() const;

private:
    long order_;
    std::vector<Rational> coeffs_;
};

// Cauchy convolution truncated at min(order(a), order(b)).
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace mstack
