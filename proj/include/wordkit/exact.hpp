#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wordkit/common.hpp"

namespace wordkit::exact {

inline mpz_class pow_uu(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

/// ceil(log2(L^L)) computed from the exact bit length of L^L.
inline long ceil_log2_selfpow(unsigned long L) {
  if (L <= 1) return 0;
  mpz_class p = pow_uu(L, L);
  std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);  // 2^(bits-1) <= p < 2^bits
  bool exact_power = mpz_scan1(p.get_mpz_t(), 0) == bits - 1;
  return exact_power ? static_cast<long>(bits) - 1 : static_cast<long>(bits);
}

/// L^L <= 2^m, i.e. L*log2(L) <= m for integer m.
inline bool selfpow_fits(unsigned long L, long m) {
  if (m < 0) return L <= 1 && m >= 0;
  return ceil_log2_selfpow(L) <= m;
}

/// floor of the k-th root; exact flag reports whether v is a perfect power.
inline mpz_class kth_root_floor(const mpz_class& v, unsigned long k, bool* exact = nullptr) {
  mpz_class r;
  int ex = mpz_root(r.get_mpz_t(), v.get_mpz_t(), k);
  if (exact) *exact = ex != 0;
  return r;
}

/// ceil(M * n^alpha) for integer M >= 0, n >= 0 and rational alpha = p/q >= 0.
/// Uses z >= M*n^(p/q)  <=>  z^q >= M^q * n^p.
inline long long ceil_mul_npow(long long M, long long n, const Rat& alpha) {
  if (M < 0 || n < 0 || alpha.num < 0) throw std::invalid_argument("ceil_mul_npow: negative input");
  if (n == 0) return alpha.num == 0 ? M : 0;  // n^0 = 1; n^a = 0 for a > 0
  unsigned long p = static_cast<unsigned long>(alpha.num);
  unsigned long q = static_cast<unsigned long>(alpha.den);
  mpz_class target = pow_uu(static_cast<unsigned long>(M), q) * pow_uu(static_cast<unsigned long>(n), p);
  bool exact = false;
  mpz_class r = kth_root_floor(target, q, &exact);
  if (!exact) r += 1;
  if (!r.fits_slong_p()) throw std::overflow_error("ceil_mul_npow: result too large");
  return r.get_si();
}

/// Smallest integer strictly greater than K * (alpha+1) * 2^(alpha+2),
/// K rational, alpha = p/q rational >= 0.  Exact:
///   M > K*(a+1)*2^(a+2)  <=>  M^q * Kden^q * aden^q > Knum^q * (anum+aden)^q * 2^(p+2q)
inline long long min_int_above_lemma_threshold(const Rat& K, const Rat& alpha) {
  unsigned long p = static_cast<unsigned long>(alpha.num);
  unsigned long q = static_cast<unsigned long>(alpha.den);
  mpz_class rhs = pow_uu(static_cast<unsigned long>(K.num), q) *
                  pow_uu(static_cast<unsigned long>(alpha.num + alpha.den), q);
  rhs <<= (p + 2 * q);
  mpz_class lhs_den = pow_uu(static_cast<unsigned long>(K.den), q) *
                      pow_uu(static_cast<unsigned long>(alpha.den), q);
  // binary search the least M with M^q * lhs_den > rhs
  long long lo = 1, hi = 2;
  auto ok = [&](long long M) {
    mpz_class m = pow_uu(static_cast<unsigned long>(M), q) * lhs_den;
    return m > rhs;
  };
  while (!ok(hi)) { hi *= 2; if (hi > (1LL << 40)) throw std::overflow_error("threshold too large"); }
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid + 1;
  }
  long long M = lo;
  if (M <= 2) M = 3;  // also require M > 2
  return M;
}

/// Dyadic upper bound r/2^bits with r/2^bits - sqrt(2) < 2^-bits.
inline std::pair<unsigned long long, int> sqrt2_upper(int bits) {
  mpz_class two_shift = mpz_class(2) << (2 * bits);  // 2 * 4^bits
  mpz_class s = kth_root_floor(two_shift, 2);        // floor(sqrt(2)*2^bits)
  mpz_class up = s + 1;
  if (!up.fits_ulong_p()) throw std::overflow_error("sqrt2_upper: bits too large");
  return {up.get_ui(), bits};
}

/// p_star <= 2 + n*(6 + 2*sqrt(2)) checked against a dyadic upper bound of
/// sqrt(2) whose slack is below 2^-30.
inline bool leq_s2_star_bound(long long p_star, long long n) {
  static const auto r = sqrt2_upper(31);  // sqrt(2) <= r.first / 2^31
  // p_star <= 2 + 6n + 2n*sqrt2  <=  2 + 6n + 2n*r/2^31
  unsigned __int128 lhs = 0;
  long long base = p_star - 2 - 6 * n;
  if (base <= 0) return true;
  lhs = static_cast<unsigned __int128>(base) << r.second;
  unsigned __int128 rhs = static_cast<unsigned __int128>(2 * n) * r.first;
  return lhs <= rhs;
}

}  // namespace wordkit::exact
