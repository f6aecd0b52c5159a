#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mstack/curve.hpp"
#include "mstack/rational_function.hpp"
#include "mstack/series.hpp"

namespace mstack {

// The closed-form series and the exterior-generator index range both admit
// more than one reading; all three are implemented and adjudicated by
// computation (see verify.hpp).
//   as-printed : (1+t^{2i}) denominator factors, exterior range i in 1..n
//   sign-fixed : (1-t^{2i}) denominator factors, exterior range i in 1..n
//   sl-strict  : (1-t^{2i}) denominators, all index ranges restricted to 2..n
enum class Convention { AsPrinted, SignFixed, SlStrict };

Convention convention_from_string(const std::string& s);
std::string to_string(Convention c);

// Multiplicative eigenvalue symbol q^e * (lambda-part). The lambda part is
// either trivial, a power of one lambda_j, or a common power of all of them.
struct EigenMonomial {
    enum class Lambda { None, Single, All };

    long q_exp = 0;
    Lambda lambda_kind = Lambda::None;
    int lambda_index = 0;  // 1-based j, Single only
    long lambda_exp = 0;

    static EigenMonomial identity() { return {}; }
    static EigenMonomial q_power(long e) { return {e, Lambda::None, 0, 0}; }
    static EigenMonomial single_lambda(int j, long e, long q_e = 0) {
        return {q_e, Lambda::Single, j, e};
    }

    EigenMonomial operator*(const EigenMonomial& o) const;
    EigenMonomial inverse() const;
    bool is_identity() const;
    std::string to_string() const;
};

struct GeneratorDescriptor {
    std::string name;  // "c_2", "b_1", "a_2^(1)", ...
    int degree = 0;
    bool odd = false;  // parity == odd iff degree is odd
    EigenMonomial phi;  // pullback along the curve Frobenius
    EigenMonomial psi;  // arithmetic Frobenius (inverse of the geometric one)

    EigenMonomial geometric() const { return psi.inverse(); }
};

struct GradedRingSpec {
    std::vector<GeneratorDescriptor> generators;
    std::optional<CurveData> curve;
    Convention convention = Convention::SignFixed;

    const GeneratorDescriptor* find(const std::string& name) const;
    bool has_exterior() const;
};

struct RingPresetParams {
    int genus = 0;
    int rank = 0;
    Convention convention = Convention::SignFixed;
    std::optional<CurveData> curve;
};

// kind is one of: moduli-fixed-det, bgl, bgm, bsl, grassmannian, open-curve,
// picard-stack. bsl and picard-stack are derived presets kept for
// cross-checks; they are not verbatim presentations.
GradedRingSpec ring_preset(const std::string& kind, const RingPresetParams& params);

// Typed shorthands for the presets the checks lean on.
GradedRingSpec moduli_fixed_det(int genus, int rank, Convention conv, std::optional<CurveData> curve);
GradedRingSpec grassmannian_ring(int rank);
GradedRingSpec open_curve_ring(int genus, int rank, Convention conv, std::optional<CurveData> curve);

std::pair<EigenMonomial, EigenMonomial> generator_eigenvalues(const GradedRingSpec& spec,
                                                              const std::string& name);

// Series of the free graded-commutative algebra on the generator list:
// 1/(1-t^d) per even generator, (1+t^d) per odd one.
TruncatedSeries poincare_from_generators(const GradedRingSpec& spec, long order);

RationalFunction poincare_closed_form(int genus, int rank, Convention conv);

struct FactorizationReport {
    bool holds = false;
    TruncatedSeries lhs;  // expansion of the closed form
    TruncatedSeries rhs;  // grassmannian series * restricted-curve series
    std::optional<long> first_mismatch;
};

FactorizationReport grassmann_factorization_check(int genus, int rank, Convention conv, long order);

}  // namespace mstack
