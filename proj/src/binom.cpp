#include "extremal/binom.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

Count binom_exact(long n, long k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binom_exact: negative argument");
  }
  if (k > n) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

double binom_real(double x, long k) {
  if (k < 0) {
    throw std::invalid_argument("binom_real: negative k");
  }
  double value = 1.0;
  for (long i = 0; i < k; ++i) {
    value *= (x - static_cast<double>(i)) / static_cast<double>(k - i);
  }
  return value;
}

ConvexCheck easy_convex_check(long t, long w, long x, long y, long z) {
  if (t < 2 || w < 0 || x < 0 || y < 0 || z < 0) {
    return ConvexCheck::precondition_failed;
  }
  if (x + w != y + z || x < y || x < z || x < t) {
    return ConvexCheck::precondition_failed;
  }
  const Count lhs = binom_exact(x, t) + binom_exact(w, t);
  const Count rhs = binom_exact(y, t) + binom_exact(z, t);
  if (lhs < rhs) {
    // impossible under the hypotheses
    throw std::logic_error("easy_convex_check: inequality violated");
  }
  return lhs > rhs ? ConvexCheck::holds_strict : ConvexCheck::holds_weak;
}

namespace {

void check_degree_sum_args(long n, long D, long r, long delta, long k) {
  if (n < 1 || r < 1 || delta < 1 || k < 0) {
    throw std::invalid_argument("degree sum: arguments out of range");
  }
  if (r >= delta) {
    throw std::invalid_argument("degree sum: requires r < delta");
  }
  if (D < n * r || D > n * delta) {
    throw std::invalid_argument("degree sum: D outside [n*r, n*delta]");
  }
}

}  // namespace

double degree_sum_bound(long n, long D, long r, long delta, long k) {
  check_degree_sum_args(n, D, r, delta, k);
  const double a = static_cast<double>(D - n * r) / static_cast<double>(delta - r);
  const double f_delta = binom_exact(delta, k).get_d();
  const double f_r = binom_exact(r, k).get_d();
  return a * f_delta + (static_cast<double>(n) - a) * f_r;
}

namespace {

// Non-increasing sequences with parts in [r, delta] summing to remaining.
void max_sum_rec(long remaining, long parts_left_min, long part_cap, long r,
                 long k, const Count& acc, Count& best) {
  if (remaining == 0) {
    if (parts_left_min <= 0 && acc > best) best = acc;
    return;
  }
  for (long part = std::min(part_cap, remaining); part >= r; --part) {
    // remaining mass must stay packable into parts >= r
    if (remaining - part != 0 && remaining - part < r) continue;
    max_sum_rec(remaining - part, parts_left_min - 1, part, r, k,
                acc + binom_exact(part, k), best);
  }
}

}  // namespace

Count max_convex_sum_oracle(long n, long D, long r, long delta, long k) {
  check_degree_sum_args(n, D, r, delta, k);
  Count best = -1;
  max_sum_rec(D, n, delta, r, k, Count(0), best);
  if (best < 0) {
    throw std::invalid_argument("max_convex_sum_oracle: infeasible constraints");
  }
  return best;
}

double g_value(double x, long t) {
  if (t < 3) {
    throw std::invalid_argument("g_value: requires t >= 3");
  }
  const double threshold = binom_real(static_cast<double>(t - 2), 2);
  if (x < threshold) return 0.0;
  const double u = (1.0 + std::sqrt(1.0 + 8.0 * x)) / 2.0;
  return binom_real(u, t - 1);
}

SlopeCheck slope_inequality_check(double x, long r, long t) {
  if (t < 3 || r <= t - 1 || x < static_cast<double>(r)) {
    return SlopeCheck::precondition_failed;
  }
  const double num = binom_real(x, t - 1) - binom_exact(r - 1, t - 1).get_d();
  const double den = binom_real(x, 2) - binom_exact(r - 1, 2).get_d();
  const double lhs = num / den;
  const double rhs = binom_exact(r - 1, t - 2).get_d() / static_cast<double>(r - 1);
  if (lhs < rhs - 1e-9) {
    throw std::logic_error("slope_inequality_check: inequality violated");
  }
  return SlopeCheck::holds;
}

namespace {

GridResult easy_convex_grid(int scale) {
  GridResult g{"easy_convex", 0, 0};
  const long hi = 20L * scale;
  for (long t = 2; t <= 6; ++t) {
    for (long x = t; x <= hi; ++x) {
      for (long w = 0; w <= hi; ++w) {
        for (long y = 0; y <= std::min(x, x + w); ++y) {
          const long z = x + w - y;
          if (z < 0 || z > x) continue;
          ++g.cases;
          const ConvexCheck res = easy_convex_check(t, w, x, y, z);
          const bool want_strict = x > y && x > z;
          const ConvexCheck want =
              want_strict ? ConvexCheck::holds_strict : ConvexCheck::holds_weak;
          if (res != want) ++g.failures;
        }
      }
    }
  }
  return g;
}

GridResult degree_sum_grid() {
  GridResult g{"degree_sum_oracle_vs_bound", 0, 0};
  for (long n = 1; n <= 6; ++n) {
    for (long delta = 2; delta <= 7; ++delta) {
      for (long r = 1; r < delta; ++r) {
        for (long D = n * r; D <= n * delta; ++D) {
          for (long k = 2; k <= 5; ++k) {
            ++g.cases;
            const Count oracle = max_convex_sum_oracle(n, D, r, delta, k);
            const double bound = degree_sum_bound(n, D, r, delta, k);
            if (oracle.get_d() > bound + 1e-9) ++g.failures;
          }
        }
      }
    }
  }
  return g;
}

GridResult g_convexity_grid(int scale) {
  GridResult g{"g_second_differences", 0, 0};
  const double hi = 60.0 * scale;
  const double h = 0.5;
  for (long t = 3; t <= 6; ++t) {
    for (double x = 0.0; x + 2 * h <= hi + 1e-12; x += h) {
      ++g.cases;
      const double second =
          g_value(x + 2 * h, t) - 2.0 * g_value(x + h, t) + g_value(x, t);
      if (second < -1e-9) ++g.failures;
    }
  }
  return g;
}

GridResult slope_grid(int scale) {
  GridResult g{"secant_slope", 0, 0};
  for (long t = 3; t <= 6; ++t) {
    for (long r = t; r <= t + 10L * scale; ++r) {
      for (double x = static_cast<double>(r);
           x <= static_cast<double>(r) + 20.0 * scale + 1e-12; x += 0.5) {
        ++g.cases;
        if (slope_inequality_check(x, r, t) != SlopeCheck::holds) ++g.failures;
      }
    }
  }
  return g;
}

}  // namespace

std::vector<GridResult> run_convexity_grids(int scale) {
  if (scale < 1) scale = 1;
  return {easy_convex_grid(scale), degree_sum_grid(), g_convexity_grid(scale),
          slope_grid(scale)};
}

}  // namespace extremal
