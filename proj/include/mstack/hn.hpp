#pragma once

#include <compare>
#include <vector>

#include "mstack/rational.hpp"

namespace mstack {

struct HNBlock {
    long rank;
    long deg;
    auto operator<=>(const HNBlock&) const = default;
};

// A filtration type: nonempty list of (rank, degree) subquotients with
// strictly decreasing slopes (compared by cross-multiplication, no floats).
class HNType {
public:
    explicit HNType(std::vector<HNBlock> blocks);

    const std::vector<HNBlock>& blocks() const { return blocks_; }
    long total_rank() const;
    long total_degree() const;

    bool operator==(const HNType& o) const { return blocks_ == o.blocks_; }
    bool operator<(const HNType& o) const { return blocks_ < o.blocks_; }

private:
    std::vector<HNBlock> blocks_;
};

struct LatticePoint {
    long x;
    long y;
    auto operator<=>(const LatticePoint&) const = default;
};

// Concave piecewise-linear graph of partial (rank, degree) sums, from (0,0)
// to (n, d), with strictly decreasing segment slopes.
class HNPolygon {
public:
    explicit HNPolygon(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    long total_rank() const { return vertices_.back().x; }
    long total_degree() const { return vertices_.back().y; }

    Rational value_at(long x) const;

    bool operator==(const HNPolygon& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<LatticePoint> vertices_;
};

HNPolygon polygon_of(const HNType& type);
HNType type_of(const HNPolygon& polygon);

// p(x) <= q(x) on the whole interval; both endpoints must agree
// (RankDegreeMismatch otherwise). Integer abscissae suffice.
bool polygon_leq(const HNPolygon& p, const HNPolygon& q);

// sum_{i<j} [ n_i n_j (g-1) + (n_j d_i - n_i d_j) ]; one-block types give 0.
// Riemann-Roch on the Hom bundles between subquotients; validated against the
// genus-0 and genus-1/2 closed-form checks rather than taken on trust.
long codim(const HNType& type, int genus);

// All types with the given total (rank, degree), at least two blocks, and
// codim <= max_codim, sorted; optionally also the one-block type (codim 0).
std::vector<HNType> enumerate_types(long n, long d, int genus, long max_codim,
                                    bool include_one_block = false);

// All types (including one-block) whose polygon lies under `bound`.
std::vector<HNType> enumerate_types_below(long n, long d, const HNPolygon& bound);

}  // namespace mstack
