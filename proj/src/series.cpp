#include "mstack/series.hpp"

#include <algorithm>
#include <cassert>

#include "mstack/errors.hpp"

namespace mstack {

TruncatedSeries::TruncatedSeries(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    assert(order_ >= 0);
    assert(coeffs_.size() == static_cast<std::size_t>(order_) + 1);
}

TruncatedSeries TruncatedSeries::zero(long order) {
    return TruncatedSeries(order, std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(long order) {
    TruncatedSeries s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, long order) {
    TruncatedSeries s = zero(order);
    const std::size_t top = std::min<std::size_t>(p.coeffs().size(), static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < top; ++i) s.coeffs_[i] = Rational(p.coeffs()[i]);
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    assert(new_order >= 0 && new_order <= order_);
    return TruncatedSeries(new_order,
                           std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const long n = std::min(order_, o.order_);
    TruncatedSeries out = zero(n);
    for (long k = 0; k <= n; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(k)] + o.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    const long n = std::min(order_, o.order_);
    TruncatedSeries out = zero(n);
    for (long k = 0; k <= n; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(k)] - o.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const long n = std::min(order_, o.order_);
    TruncatedSeries out = zero(n);
    for (long i = 0; i <= n; ++i) {
        const Rational& a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            const Rational& b = o.coeffs_[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries out = *this;
    for (Rational& a : out.coeffs_) a *= c;
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::optional<long> TruncatedSeries::first_mismatch(const TruncatedSeries& o) const {
    const long n = std::min(order_, o.order_);
    for (long k = 0; k <= n; ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != o.coeffs_[static_cast<std::size_t>(k)]) return k;
    return std::nullopt;
}

std::string TruncatedSeries::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) s += ", ";
        s += rational_to_string(coeffs_[k]);
    }
    s += "]";
    return s;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

}  // namespace mstack
