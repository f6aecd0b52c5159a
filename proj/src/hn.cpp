#include "mstack/hn.hpp"

#include <algorithm>
#include <cassert>

#include "mstack/errors.hpp"

namespace mstack {

namespace {

// mu(a) > mu(b) without division: a.deg * b.rank > b.deg * a.rank.
bool slope_greater(const HNBlock& a, const HNBlock& b) {
    return a.deg * b.rank > b.deg * a.rank;
}

long floor_rational(const Rational& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

long ceil_rational(const Rational& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace

HNType::HNType(std::vector<HNBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) fail("InvalidHNType", "type needs at least one block");
    for (const HNBlock& b : blocks_)
        if (b.rank < 1) fail("InvalidHNType", "block rank must be positive");
    for (std::size_t i = 0; i + 1 < blocks_.size(); ++i)
        if (!slope_greater(blocks_[i], blocks_[i + 1]))
            fail("InvalidHNType", "slopes must strictly decrease");
}

long HNType::total_rank() const {
    long n = 0;
    for (const HNBlock& b : blocks_) n += b.rank;
    return n;
}

long HNType::total_degree() const {
    long d = 0;
    for (const HNBlock& b : blocks_) d += b.deg;
    return d;
}

HNPolygon::HNPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2 || vertices_.front().x != 0 || vertices_.front().y != 0)
        fail("InvalidPolygon", "polygon must start at (0,0) and have at least one segment");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i].x >= vertices_[i + 1].x)
            fail("InvalidPolygon", "x-coordinates must strictly increase");
    for (std::size_t i = 0; i + 2 < vertices_.size(); ++i) {
        const long dx1 = vertices_[i + 1].x - vertices_[i].x;
        const long dy1 = vertices_[i + 1].y - vertices_[i].y;
        const long dx2 = vertices_[i + 2].x - vertices_[i + 1].x;
        const long dy2 = vertices_[i + 2].y - vertices_[i + 1].y;
        if (dy1 * dx2 <= dy2 * dx1) fail("InvalidPolygon", "segment slopes must strictly decrease");
    }
}

Rational HNPolygon::value_at(long x) const {
    if (x < 0 || x > total_rank()) fail("InvalidPolygon", "abscissa out of range");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (x > vertices_[i + 1].x) continue;
        const long x0 = vertices_[i].x, y0 = vertices_[i].y;
        const long x1 = vertices_[i + 1].x, y1 = vertices_[i + 1].y;
        return Rational(y0) + make_rational(BigInt(y1 - y0) * BigInt(x - x0), BigInt(x1 - x0));
    }
    return Rational(vertices_.back().y);
}

HNPolygon polygon_of(const HNType& type) {
    std::vector<LatticePoint> v;
    v.reserve(type.blocks().size() + 1);
    v.push_back({0, 0});
    long x = 0, y = 0;
    for (const HNBlock& b : type.blocks()) {
        x += b.rank;
        y += b.deg;
        v.push_back({x, y});
    }
    return HNPolygon(std::move(v));
}

HNType type_of(const HNPolygon& polygon) {
    std::vector<HNBlock> blocks;
    const auto& v = polygon.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        blocks.push_back({v[i + 1].x - v[i].x, v[i + 1].y - v[i].y});
    return HNType(std::move(blocks));
}

bool polygon_leq(const HNPolygon& p, const HNPolygon& q) {
    if (p.total_rank() != q.total_rank() || p.total_degree() != q.total_degree())
        fail("RankDegreeMismatch", "polygons must share total rank and degree");
    // Both are piecewise linear with integer breakpoints, so comparing at the
    // integer abscissae decides the pointwise comparison.
    for (long x = 0; x <= p.total_rank(); ++x)
        if (p.value_at(x) > q.value_at(x)) return false;
    return true;
}

long codim(const HNType& type, int genus) {
    const auto& blocks = type.blocks();
    long total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            total += blocks[i].rank * blocks[j].rank * (genus - 1);
            total += blocks[j].rank * blocks[i].deg - blocks[i].rank * blocks[j].deg;
        }
    }
    return total;
}

namespace {

// Degree-vector search for one rank composition. Every slope of a type with
// codim <= C lies within cross_budget of the total slope (the cross terms are
// positive and at least mu_first - mu_last), so the per-block degree windows
// below are exhaustive; exact codim filtering happens at the leaf.
void search_degrees(const std::vector<long>& comp, std::size_t idx, long deg_left,
                    const Rational& prev_slope, bool has_prev, const Rational& mu_min,
                    const Rational& mu_max, int genus, long max_codim, std::vector<HNBlock>& acc,
                    std::vector<HNType>& out) {
    const std::size_t blocks = comp.size();
    const long n_i = comp[idx];
    if (idx == blocks - 1) {
        const Rational mu = make_rational(BigInt(deg_left), BigInt(n_i));
        if ((has_prev && mu >= prev_slope) || mu < mu_min) return;
        acc.push_back({n_i, deg_left});
        HNType candidate(acc);
        if (codim(candidate, genus) <= max_codim) out.push_back(std::move(candidate));
        acc.pop_back();
        return;
    }
    long rank_rest = 0;
    for (std::size_t k = idx + 1; k < blocks; ++k) rank_rest += comp[k];
    long d_hi = floor_rational(mu_max * Rational(n_i));
    if (has_prev) d_hi = std::min(d_hi, ceil_rational(prev_slope * Rational(n_i)) - 1);
    long d_lo = ceil_rational(mu_min * Rational(n_i));
    // slopes after this block average (deg_left - d)/rank_rest and must stay
    // strictly below d/n_i
    d_lo = std::max(d_lo,
                    floor_rational(make_rational(BigInt(deg_left) * BigInt(n_i), BigInt(n_i + rank_rest))) + 1);
    for (long d = d_lo; d <= d_hi; ++d) {
        acc.push_back({n_i, d});
        search_degrees(comp, idx + 1, deg_left - d, make_rational(BigInt(d), BigInt(n_i)), true, mu_min,
                       mu_max, genus, max_codim, acc, out);
        acc.pop_back();
    }
}

void compositions(long n, std::vector<long>& acc, std::vector<std::vector<long>>& out) {
    if (n == 0) {
        if (acc.size() >= 2) out.push_back(acc);
        return;
    }
    for (long first = 1; first <= n; ++first) {
        acc.push_back(first);
        compositions(n - first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<HNType> enumerate_types(long n, long d, int genus, long max_codim, bool include_one_block) {
    if (n < 1) fail("InvalidHNType", "rank must be >= 1");
    std::vector<HNType> out;
    if (include_one_block && max_codim >= 0) out.push_back(HNType({{n, d}}));
    std::vector<std::vector<long>> comps;
    std::vector<long> acc_comp;
    compositions(n, acc_comp, comps);
    for (const std::vector<long>& comp : comps) {
        long pair_sum = 0;
        long pair_count = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                pair_sum += comp[i] * comp[j];
                ++pair_count;
            }
        }
        // each cross term n_j d_i - n_i d_j is a positive integer
        const long cross_budget = max_codim - (genus - 1) * pair_sum;
        if (cross_budget < pair_count) continue;
        const Rational avg = make_rational(BigInt(d), BigInt(n));
        const Rational mu_min = avg - Rational(cross_budget + 1);
        const Rational mu_max = avg + Rational(cross_budget + 1);
        std::vector<HNBlock> acc;
        search_degrees(comp, 0, d, Rational(0), false, mu_min, mu_max, genus, max_codim, acc, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void extend_path(std::vector<LatticePoint>& path, long n, long d, const HNPolygon& bound,
                 std::vector<HNType>& out) {
    const LatticePoint cur = path.back();
    if (cur.x == n) {
        if (cur.y == d) out.push_back(type_of(HNPolygon(path)));
        return;
    }
    for (long x1 = cur.x + 1; x1 <= n; ++x1) {
        // vertices sit on or above the straight chord and at or below bound
        const long y_lo = ceil_rational(make_rational(BigInt(d) * BigInt(x1), BigInt(n)));
        const long y_hi = floor_rational(bound.value_at(x1));
        for (long y1 = y_lo; y1 <= y_hi; ++y1) {
            const long dx = x1 - cur.x, dy = y1 - cur.y;
            if (path.size() >= 2) {
                const LatticePoint prev = path[path.size() - 2];
                const long pdx = cur.x - prev.x, pdy = cur.y - prev.y;
                if (pdy * dx <= dy * pdx) continue;  // slope must strictly drop
            }
            if (x1 < n) {
                // the rest of the path averages (d-y1)/(n-x1), which must
                // stay strictly below this segment's slope
                if (dy * (n - x1) <= (d - y1) * dx) continue;
            } else if (y1 != d) {
                continue;
            }
            path.push_back({x1, y1});
            extend_path(path, n, d, bound, out);
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<HNType> enumerate_types_below(long n, long d, const HNPolygon& bound) {
    if (bound.total_rank() != n || bound.total_degree() != d)
        fail("RankDegreeMismatch", "bound polygon must have total (n, d)");
    std::vector<HNType> out;
    std::vector<LatticePoint> path{{0, 0}};
    extend_path(path, n, d, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mstack
