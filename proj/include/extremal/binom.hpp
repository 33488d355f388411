#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace extremal {

/// Exact non-negative count. GMP-backed so clique totals on dense
/// 64-vertex graphs never overflow.
using Count = mpz_class;

/// C(n, k) in exact arithmetic. C(n, k) = 0 when k > n.
/// Throws std::invalid_argument on negative input.
Count binom_exact(long n, long k);

/// Generalized binomial coefficient: x(x-1)...(x-k+1) / k! for real x.
/// May be negative for non-integer x < k-1.
double binom_real(double x, long k);

enum class ConvexCheck { holds_weak, holds_strict, precondition_failed };

/// Checks C(x,t) + C(w,t) >= C(y,t) + C(z,t) under the hypotheses
/// t >= 2, x + w = y + z, x >= y, x >= z, x >= t (all inputs non-negative).
/// Returns holds_strict when the exact evaluation is strict, which happens
/// exactly when x > y and x > z; precondition_failed when the hypotheses
/// do not apply (nothing is asserted there).
ConvexCheck easy_convex_check(long t, long w, long x, long y, long z);

/// Upper bound a*C(delta,k) + (n-a)*C(r,k) for the maximum of
/// sum C(x_i,k) over sequences with r <= x_i <= delta and sum x_i = D,
/// where the real a solves a*delta + (n-a)*r = D.
/// Requires r < delta and n*r <= D <= n*delta.
double degree_sum_bound(long n, long D, long r, long delta, long k);

/// Exhaustive maximum of sum C(x_i,k) over integer sequences of length >= n
/// with r <= x_i <= delta and sum x_i = D. Desk-scale test oracle for
/// degree_sum_bound. Same preconditions.
Count max_convex_sum_oracle(long n, long D, long r, long delta, long k);

/// The convex piecewise function g(x) = C(u(x), t-1) for x >= C(t-2, 2)
/// and 0 below, where u(x) = (1 + sqrt(1+8x)) / 2 inverts C(u,2) = x.
/// Requires t >= 3.
double g_value(double x, long t);

enum class SlopeCheck { holds, precondition_failed };

/// Checks the secant-slope inequality
///   [C(x,t-1) - C(r-1,t-1)] / [C(x,2) - C(r-1,2)] >= C(r-1,t-2) / (r-1)
/// for r > t-1 >= 2 and real x >= r, with absolute tolerance 1e-9.
SlopeCheck slope_inequality_check(double x, long r, long t);

struct GridResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
};

/// Runs the four inequality grids (pointwise convexity, degree-sum oracle vs
/// bound, second differences of g, secant slope). scale >= 1 stretches the
/// cheap grid ranges; the exhaustive oracle grid keeps its fixed box.
std::vector<GridResult> run_convexity_grids(int scale = 1);

}  // namespace extremal
