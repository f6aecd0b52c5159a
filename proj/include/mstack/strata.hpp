#pragma once

#include <map>
#include <utility>

#include "mstack/hn.hpp"
#include "mstack/rational_function.hpp"
#include "mstack/series.hpp"

namespace mstack {

// Series of the full stack of rank-n bundles (unfixed determinant), which is
// independent of the degree:
//   prod_{k=1..n} (1+t^{2k-1})^{2g} / (1-t^{2k}) * prod_{k=1..n-1} 1/(1-t^{2k}).
RationalFunction total_series_unfixed(int rank, int genus);

// Solves  total(n) = sum over filtration types tau of t^{2 codim(tau)} *
// prod_i ss(n_i, d_i)  for the semistable series, t-adically to the given
// order. Strata whose semistable content vanishes are skipped; every
// remaining stratum must have codim >= 0 (this holds; it is asserted).
class StrataSeriesEngine {
public:
    StrataSeriesEngine(int genus, long order);

    const TruncatedSeries& semistable(long rank, long degree);

    int genus() const { return genus_; }
    long order() const { return order_; }

private:
    int genus_;
    long order_;
    std::map<std::pair<long, long>, TruncatedSeries> memo_;
};

TruncatedSeries ss_series(long rank, long degree, int genus, long order);

// (1 - t^2) * ss: removes the classifying-line factor. Coprime (rank, degree)
// only; a polynomial once the order clears the moduli dimension.
TruncatedSeries coarse_moduli_series(long rank, long degree, int genus, long order);

// ss * (1 - t^2) / (1+t)^{2g}: additionally strips one Jacobian factor to
// land on the fixed-determinant coarse space. Must come out polynomial of
// degree 2(n^2-1)(g-1); a nonzero coefficient above that is reported as
// NonPolynomialResult rather than silently truncated.
TruncatedSeries fixed_det_coarse_series(long rank, long degree, int genus, long order);

}  // namespace mstack
