#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace wordkit {

/// A finite contiguous chunk of a word. `origin` is the index of symbols[0]
/// in the underlying word: 0 for one-sided words, negative for windows cut
/// from a bi-infinite padding of a one-sided word.
struct Window {
  std::string symbols;
  long long origin = 0;

  Window() = default;
  Window(std::string s, long long o = 0) : symbols(std::move(s)), origin(o) {
    if (symbols.empty()) throw std::invalid_argument("Window: length must be >= 1");
  }

  std::size_t size() const { return symbols.size(); }
  char at(std::size_t i) const { return symbols[i]; }
  std::string_view view() const { return symbols; }
  std::string_view view(std::size_t pos, std::size_t len) const {
    return std::string_view(symbols).substr(pos, len);
  }
};

/// Exact rational with small components. Used for exponents and flag values
/// parsed from the command line ("p/q"); heavy arithmetic goes through GMP.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rat&) const = default;

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Static partition of [0,n) over `threads` workers; results must be written
/// to per-index slots so assembly stays deterministic.
template <class F>
inline void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n < 2048) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  threads = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Double polynomial hash mod 2^61-1. Bases are fixed so runs reproduce.
class SubstrHash {
  static constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;
  static constexpr std::uint64_t kBase1 = 131;
  static constexpr std::uint64_t kBase2 = 1000003;

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t r = lo + hi;
    if (r >= kMod) r -= kMod;
    return r;
  }

  std::vector<std::uint64_t> pre1_, pre2_, pow1_, pow2_;

 public:
  SubstrHash() = default;
  explicit SubstrHash(std::string_view s) { reset(s); }

  void reset(std::string_view s) {
    std::size_t n = s.size();
    pre1_.assign(n + 1, 0);
    pre2_.assign(n + 1, 0);
    pow1_.assign(n + 1, 1);
    pow2_.assign(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t c = static_cast<unsigned char>(s[i]) + 1;
      pre1_[i + 1] = mulmod(pre1_[i], kBase1) + c;
      if (pre1_[i + 1] >= kMod) pre1_[i + 1] -= kMod;
      pre2_[i + 1] = mulmod(pre2_[i], kBase2) + c;
      if (pre2_[i + 1] >= kMod) pre2_[i + 1] -= kMod;
      pow1_[i + 1] = mulmod(pow1_[i], kBase1);
      pow2_[i + 1] = mulmod(pow2_[i], kBase2);
    }
  }

  /// Combined 128-bit-grade key of s[pos, pos+len).
  std::pair<std::uint64_t, std::uint64_t> key(std::size_t pos, std::size_t len) const {
    std::uint64_t h1 = pre1_[pos + len] + kMod - mulmod(pre1_[pos], pow1_[len]);
    if (h1 >= kMod) h1 -= kMod;
    std::uint64_t h2 = pre2_[pos + len] + kMod - mulmod(pre2_[pos], pow2_[len]);
    if (h2 >= kMod) h2 -= kMod;
    return {h1, h2};
  }

  static std::pair<std::uint64_t, std::uint64_t> key_of(std::string_view s) {
    std::uint64_t h1 = 0, h2 = 0;
    for (char ch : s) {
      std::uint64_t c = static_cast<unsigned char>(ch) + 1;
      h1 = mulmod(h1, kBase1) + c;
      if (h1 >= kMod) h1 -= kMod;
      h2 = mulmod(h2, kBase2) + c;
      if (h2 >= kMod) h2 -= kMod;
    }
    return {h1, h2};
  }
};

inline std::uint64_t mix_key(std::pair<std::uint64_t, std::uint64_t> k, std::size_t len) {
  std::uint64_t x = k.first ^ (k.second * 0x9e3779b97f4a7c15ULL) ^ (std::uint64_t(len) << 1);
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27; x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace wordkit
