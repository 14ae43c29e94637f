#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wordkit/common.hpp"
#include "wordkit/exact.hpp"
#include "wordkit/wordgen.hpp"

namespace wordkit::verify {

struct BoundReport {
  bool pass = true;
  long long fail_n = -1;
  std::string detail = "pass";
};

/// First n where value[n] exceeds bound[n], scanning the common index range.
inline BoundReport check_bound(const std::vector<long long>& value,
                               const std::vector<double>& bound,
                               std::size_t n_lo = 0) {
  BoundReport rep;
  std::size_t n_hi = std::min(value.size(), bound.size());
  for (std::size_t n = n_lo; n < n_hi; ++n) {
    if (static_cast<double>(value[n]) > bound[n]) {
      rep.pass = false;
      rep.fail_n = static_cast<long long>(n);
      rep.detail = "value " + std::to_string(value[n]) + " exceeds bound " +
                   std::to_string(bound[n]) + " at n=" + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

struct RatioInterval {
  double min = 0, max = 0;
  long long n_lo = 0, n_hi = 0;
  bool positive() const { return min > 0; }
};

/// min and max of table[n]/n^exponent over [n_lo, n_hi].  Reported as a ratio
/// interval; conclusions should be phrased as "consistent with" a growth
/// order on the range, never as asymptotic truth.
inline RatioInterval growth_ratio(const std::function<long long(long long)>& table, Rat exponent,
                                  long long n_lo, long long n_hi) {
  if (n_lo > n_hi || n_lo < 1) throw std::invalid_argument("growth_ratio: bad range");
  RatioInterval out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.min = std::numeric_limits<double>::infinity();
  out.max = 0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    double r = static_cast<double>(table(n)) / std::pow(static_cast<double>(n), exponent.to_double());
    out.min = std::min(out.min, r);
    out.max = std::max(out.max, r);
  }
  return out;
}

/// Variant dividing by log2(n) instead of a power.
inline RatioInterval growth_ratio_log2(const std::function<long long(long long)>& table,
                                       long long n_lo, long long n_hi) {
  if (n_lo > n_hi || n_lo < 2) throw std::invalid_argument("growth_ratio_log2: bad range");
  RatioInterval out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.min = std::numeric_limits<double>::infinity();
  out.max = 0;
  for (long long n = n_lo; n <= n_hi; ++n) {
    double r = static_cast<double>(table(n)) / std::log2(static_cast<double>(n));
    out.min = std::min(out.min, r);
    out.max = std::max(out.max, r);
  }
  return out;
}

struct NonfactorialCheck {
  bool pass = true;
  long long fail_n = -1;
  std::string detail = "pass";
};

/// ceil(n*log2(n)) from the exact bit length of n^n.
inline long long ceil_nlog2n(long long n) {
  return exact::ceil_log2_selfpow(static_cast<unsigned long>(n));
}

/// The ceiling formula ceil((n+1)log2(n+1)) - ceil(n log2 n).
inline long long nonfactorial_formula(long long n) {
  return ceil_nlog2n(n + 1) - ceil_nlog2n(n);
}

/// For 2 <= n <= n_max, compare the ceiling formula against a direct count of
/// the indices m whose word y_m has length n; word lengths come from the exact
/// integer comparison L^L <= 2^m.  Note y_2 and y_4 are the same word, so the
/// deduplicated language has one fewer word at n = 2 than the index count.
inline NonfactorialCheck nonfactorial_formula_check(long long n_max) {
  if (n_max < 2) throw std::invalid_argument("nonfactorial_formula_check: n_max must be >= 2");
  NonfactorialCheck rep;
  // z[L] = ceil(log2(L^L)); |y_m| = max{L : z[L] <= m} is non-decreasing in m
  std::vector<long long> z(static_cast<std::size_t>(n_max) + 3, 0);
  for (long long L = 1; L <= n_max + 2; ++L) z[L] = ceil_nlog2n(L);
  for (long long L = 1; L <= n_max + 1; ++L)
    if (z[L + 1] < z[L]) {
      rep.pass = false;
      rep.fail_n = L;
      rep.detail = "length thresholds are not monotone at L=" + std::to_string(L);
      return rep;
    }
  for (long long n = 2; n <= n_max; ++n) {
    // enumerate m around the bracket and count |y_m| == n directly
    long long lo = std::max<long long>(1, z[n] - 2);
    long long hi = z[n + 1] + 2;
    long long count = 0;
    for (long long m = lo; m <= hi; ++m) {
      // |y_m| == n  <=>  z[n] <= m < z[n+1]
      long long len = 0;
      for (long long L = std::max<long long>(1, n - 2); L <= n + 2; ++L)
        if (z[L] <= m) len = L;
      if (len == n) ++count;
    }
    long long formula = z[n + 1] - z[n];
    if (count != formula) {
      rep.pass = false;
      rep.fail_n = n;
      rep.detail = "index count " + std::to_string(count) + " != formula " +
                   std::to_string(formula) + " at n=" + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

}  // namespace wordkit::verify
