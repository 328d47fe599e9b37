#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "r2kit/poly.hpp"
#include "r2kit/recurrence.hpp"
#include "r2kit/spectrum.hpp"

namespace r2kit {

enum class InterlaceStatus { Pass, Fail, Inconclusive };
enum class InterlaceMode { Consecutive, Cross };

std::string to_string(InterlaceStatus s);

// Separations below this are roundoff-level and reported as inconclusive.
inline constexpr double kInterlaceMargin = 1e-10;

struct TaggedValue {
    double value = 0.0;
    std::string tag;
};

struct InterlaceReport {
    InterlaceStatus status = InterlaceStatus::Pass;
    int first_violation = -1;  // 1-based position in the merged list, or pattern index for triple checks
    double margin = 0.0;       // smallest separation among the compared pairs
    std::vector<TaggedValue> merged;
    std::string detail;

    bool pass() const { return status == InterlaceStatus::Pass; }
};

// Consecutive: |a| = |b| + 1, merged order a b a b ... a. Cross: |a| = |b|, strict alternation starting with either.
InterlaceReport check_interlace(const ZeroSet& a, const ZeroSet& b, InterlaceMode mode, const std::string& tag_a = "a",
                                const std::string& tag_b = "b");

// alpha > 0: x_i(n) < y_i < x_i(n-1), i = 1..n-1. alpha < 0: x_{i-1}(n-1) < y_i < x_i(n), i = 2..n.
InterlaceReport triple_interlace(const ZeroSet& Pn, const ZeroSet& Pprev, const ZeroSet& Ln, int alpha_sign);

// Rejects sign-mixed or zero entries of alpha_lo..alpha_hi; returns the common sign.
int alpha_sign(const std::vector<cplx>& alpha, int lo, int hi);

struct WronskianCheck {
    double residual = 0.0;   // max over the grid of |W(L,T) - (beta - alpha) W(P_{n-1}, P_n)|
    double min_cross_value = 0.0;  // min |T| on zeros of L and |L| on zeros of T, scaled by coefficient size
    bool no_common_zeros = false;
};

using Evaluator = std::function<PointValue(cplx)>;

Evaluator poly_evaluator(const ComplexPoly& p);
// Runs the recurrence at each point; avoids the roundoff floor of large coefficient expansions.
Evaluator recurrence_evaluator(const RIIParams& p, int n);

// Max over a uniform real grid on [-radius, radius] of |W(L,T) - (beta - alpha) W(P_{n-1}, P_n)|.
// scale, if given, receives the max of |(beta - alpha) W(P_{n-1}, P_n)| over the same grid.
double wronskian_identity_residual(const Evaluator& L, const Evaluator& T, cplx alpha, cplx beta, const Evaluator& Pn,
                                   const Evaluator& Pprev, int grid_points = 64, double grid_radius = 3.0,
                                   double* scale = nullptr);

// Min over zeros of each polynomial of |other(z)| / sum |other_k||z|^k.
double common_zero_gap(const ComplexPoly& a, const ComplexPoly& b);

WronskianCheck wronskian_cross_check(const ComplexPoly& Ln, const ComplexPoly& Tn, cplx alpha, cplx beta,
                                     const ComplexPoly& Pn, const ComplexPoly& Pprev, int grid_points = 64,
                                     double grid_radius = 3.0);

enum class WeightKind { Gcrr, Cauchy, CauchySquared };

std::string to_string(WeightKind k);
WeightKind weight_kind_from_string(const std::string& s);

// gcrr: exp(-2 theta arccot(x/w)) / (w^2 + x^2)^zeta, unnormalized.
// cauchy: w / (pi (w^2 + x^2)). cauchy-squared: 4 w^3 / (pi (w^2 + x^2)^2).
struct WeightSpec {
    WeightKind kind = WeightKind::Cauchy;
    double zeta = 1.0;
    double theta = 0.0;
    double omega = 1.0;

    double operator()(double x) const;
    double decay() const;  // w(x) ~ |x|^decay
    void validate() const;
};

struct MomentResult {
    cplx value;
    double error = 0.0;
};

inline constexpr double kMomentTol = 1e-10;

// int num(x) / den(x) weight(x) dx over the real line, with x = w tan(u).
MomentResult rational_integral(const WeightSpec& weight, const ComplexPoly& num, const ComplexPoly& den);

// int x^k p(x) / (x^2 + w^2)^n weight(x) dx.
MomentResult rational_moment(const WeightSpec& weight, const ComplexPoly& p, int k, int n);

struct OrthogonalityReport {
    std::vector<std::vector<double>> magnitude;  // [n-1][k] for 1 <= n <= n_max, 0 <= k < n
    double max_magnitude = 0.0;
    bool exploratory = false;
    bool pass = false;
};

inline constexpr double kOrthogonalityTol = 1e-8;

// seq[n] is the degree-n member; moments use (x^2 + w^2)^n denominators.
OrthogonalityReport orthogonality_suite(const WeightSpec& weight, const std::vector<ComplexPoly>& seq, int n_max,
                                        bool exploratory = false);

// Denominator conventions swept for the exploratory check of a sequence against a weight.
struct ConventionSweep {
    std::string convention;
    OrthogonalityReport report;
};

std::vector<ConventionSweep> exploratory_sweep(const WeightSpec& weight, const std::vector<ComplexPoly>& seq, int n_max);

}  // namespace r2kit
