#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordkit/common.hpp"

namespace wordkit {

/// Index over a Window answering distinct-factor counts per length, factor
/// iteration, occurrence lists and extension sets.  Backed by a suffix array
/// with an LCP table; immutable after construction.
class FactorIndex {
  const Window* w_ = nullptr;
  std::vector<int> sa_, rank_, lcp_;
  std::vector<long long> cnt_lcp_, cnt_len_;  // prefix counts for p(n)

 public:
  FactorIndex() = default;

  explicit FactorIndex(const Window& w) : w_(&w) {
    build_sa();
    build_lcp();
    int n = static_cast<int>(w_->size());
    cnt_lcp_.assign(n + 2, 0);
    cnt_len_.assign(n + 2, 0);
    for (int r = 0; r < n; ++r) {
      ++cnt_lcp_[lcp_[r]];
      ++cnt_len_[n - sa_[r]];
    }
    for (int i = 1; i <= n + 1; ++i) {
      cnt_lcp_[i] += cnt_lcp_[i - 1];
      cnt_len_[i] += cnt_len_[i - 1];
    }
  }

  const Window& window() const { return *w_; }
  std::size_t length() const { return w_->size(); }

  /// Number of distinct length-n substrings; p(0) = 1.
  long long complexity(std::size_t n) const {
    if (n == 0) return 1;
    if (n > length()) throw std::out_of_range("complexity: n exceeds window length");
    // suffixes with length >= n and lcp < n each start a new length-n factor
    return cnt_lcp_[n - 1] - cnt_len_[n - 1];
  }

  /// p*(n) = sum of p(i), i = 0..n.
  long long accumulative(std::size_t n) const {
    long long s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += complexity(i);
    return s;
  }

  /// Walks the distinct length-n factors in lexicographic order.  The callback
  /// gets (leftmost occurrence position, suffix-array block [lo, hi)).
  template <class F>
  void for_each_factor(std::size_t n, F&& fn) const {
    if (n == 0 || n > length()) return;
    int N = static_cast<int>(length());
    int r = 0;
    while (r < N) {
      if (N - sa_[r] < static_cast<int>(n)) { ++r; continue; }
      int lo = r;
      int leftmost = sa_[r];
      ++r;
      while (r < N && lcp_[r] >= static_cast<int>(n)) {
        if (N - sa_[r] >= static_cast<int>(n)) leftmost = std::min(leftmost, sa_[r]);
        ++r;
      }
      fn(static_cast<std::size_t>(leftmost), lo, r);
    }
  }

  /// Right extension letters of the factor in suffix block [lo, hi).
  std::set<char> right_extensions(std::size_t n, int lo, int hi) const {
    std::set<char> out;
    int N = static_cast<int>(length());
    for (int r = lo; r < hi; ++r) {
      int p = sa_[r];
      if (N - p < static_cast<int>(n)) continue;
      if (p + static_cast<int>(n) < N) out.insert(w_->symbols[p + n]);
    }
    return out;
  }

  std::set<char> left_extensions(std::size_t n, int lo, int hi) const {
    std::set<char> out;
    int N = static_cast<int>(length());
    for (int r = lo; r < hi; ++r) {
      int p = sa_[r];
      if (N - p < static_cast<int>(n)) continue;
      if (p > 0) out.insert(w_->symbols[p - 1]);
    }
    return out;
  }

  std::vector<std::string> right_special_factors(std::size_t n) const {
    return special_factors(n, /*right=*/true);
  }
  std::vector<std::string> left_special_factors(std::size_t n) const {
    return special_factors(n, /*right=*/false);
  }

  long long right_special_count(std::size_t n) const {
    long long c = 0;
    for_each_factor(n, [&](std::size_t, int lo, int hi) {
      if (right_extensions(n, lo, hi).size() >= 2) ++c;
    });
    return c;
  }

  /// Sum over right special factors of (deg - 1).
  long long right_extension_surplus(std::size_t n) const {
    long long c = 0;
    for_each_factor(n, [&](std::size_t, int lo, int hi) {
      auto ext = right_extensions(n, lo, hi);
      if (ext.size() >= 2) c += static_cast<long long>(ext.size()) - 1;
    });
    return c;
  }

  /// Sorted occurrence positions of v in the window.
  std::vector<std::size_t> occurrences(std::string_view v) const {
    std::vector<std::size_t> out;
    if (v.empty() || v.size() > length()) return out;
    int N = static_cast<int>(length());
    std::string_view text = w_->view();
    // lower bound: first suffix >= v
    auto cmp_lt = [&](int pos, std::string_view pat) {
      return text.substr(pos).compare(pat) < 0;
    };
    int lo = 0, hi = N;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (cmp_lt(sa_[mid], v)) lo = mid + 1; else hi = mid;
    }
    int begin = lo;
    hi = N;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      std::string_view sfx = text.substr(sa_[mid]);
      if (sfx.substr(0, v.size()) == v) lo = mid + 1; else hi = mid;
    }
    for (int r = begin; r < lo; ++r)
      if (length() - sa_[r] >= v.size()) out.push_back(sa_[r]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<int>& suffix_array() const { return sa_; }
  const std::vector<int>& lcp_array() const { return lcp_; }

 private:
  std::vector<std::string> special_factors(std::size_t n, bool right) const {
    std::vector<std::string> out;
    if (n == 0) {
      // the empty factor is special iff the window uses >= 2 letters
      std::set<char> letters(w_->symbols.begin(), w_->symbols.end());
      if (letters.size() >= 2) out.emplace_back("");
      return out;
    }
    for_each_factor(n, [&](std::size_t pos, int lo, int hi) {
      auto ext = right ? right_extensions(n, lo, hi) : left_extensions(n, lo, hi);
      if (ext.size() >= 2) out.emplace_back(w_->view(pos, n));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  void build_sa() {
    int n = static_cast<int>(w_->size());
    sa_.resize(n);
    rank_.resize(n);
    std::vector<int> tmp(n), cnt;
    for (int i = 0; i < n; ++i) {
      sa_[i] = i;
      rank_[i] = static_cast<unsigned char>(w_->symbols[i]);
    }
    for (int len = 1;; len *= 2) {
      auto key = [&](int i) {
        return std::pair<int, int>(rank_[i], i + len < n ? rank_[i + len] + 1 : 0);
      };
      // radix sort by (rank, rank+len)
      int K = n + 2;
      cnt.assign(std::max(K, 257), 0);
      std::vector<int> by2(n);
      for (int i = 0; i < n; ++i) ++cnt[key(i).second];
      for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
      for (int i = n - 1; i >= 0; --i) by2[--cnt[key(sa_[i]).second]] = sa_[i];
      cnt.assign(std::max(K, 257), 0);
      for (int i = 0; i < n; ++i) ++cnt[rank_[i]];
      for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
      for (int i = n - 1; i >= 0; --i) sa_[--cnt[rank_[by2[i]]]] = by2[i];
      tmp[sa_[0]] = 0;
      for (int i = 1; i < n; ++i)
        tmp[sa_[i]] = tmp[sa_[i - 1]] + (key(sa_[i - 1]) != key(sa_[i]) ? 1 : 0);
      rank_ = tmp;
      if (rank_[sa_[n - 1]] == n - 1) break;
    }
  }

  void build_lcp() {
    int n = static_cast<int>(w_->size());
    lcp_.assign(n, 0);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[sa_[i]] = i;
    int h = 0;
    for (int i = 0; i < n; ++i) {
      if (inv[i] == 0) { h = 0; continue; }
      int j = sa_[inv[i] - 1];
      while (i + h < n && j + h < n && w_->symbols[i + h] == w_->symbols[j + h]) ++h;
      lcp_[inv[i]] = h;
      if (h > 0) --h;
    }
  }
};

/// Closed-form factor complexity of the Thue-Morse word.  For n >= 3 write
/// n = 2^r + q + 1 with r >= 0 and 0 < q <= 2^r; the count is 6*2^(r-1) + 4q
/// when q <= 2^(r-1) and 2^(r+2) + 2q otherwise.
inline long long thue_morse_complexity(long long n) {
  if (n < 0) throw std::invalid_argument("thue_morse_complexity: n must be >= 0");
  if (n == 0) return 1;
  if (n == 1) return 2;
  if (n == 2) return 4;
  long long r = 0;
  while ((2LL << r) + 1 < n) ++r;  // least r with n <= 2^(r+1) + 1, i.e. q <= 2^r
  long long q = n - 1 - (1LL << r);
  long long half = (1LL << r) / 2;
  return q <= half ? 6 * half + 4 * q : (1LL << (r + 2)) + 2 * q;
}

}  // namespace wordkit
