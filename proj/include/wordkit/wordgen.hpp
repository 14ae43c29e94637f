#pragma once

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wordkit/common.hpp"
#include "wordkit/exact.hpp"

namespace wordkit::gen {

// ---------------------------------------------------------------------------
// FunctionSpec: the f and g parameters of the product word over {a,b}.
// ---------------------------------------------------------------------------

struct FunctionSpec {
  enum class Kind { FloorPow, FloorSqrt, Custom };
  Kind kind = Kind::FloorSqrt;
  Rat alpha{1, 2};                 // FloorPow only, alpha in (0,1]
  std::vector<long long> table;    // Custom only, table[i] = f(i+1)

  static FunctionSpec floor_sqrt() { return {}; }
  static FunctionSpec floor_pow(Rat a) {
    FunctionSpec s;
    s.kind = Kind::FloorPow;
    if (a.num <= 0 || a.num > a.den) throw std::invalid_argument("FloorPow: alpha must be in (0,1]");
    s.alpha = a;
    return s;
  }
  static FunctionSpec custom(std::vector<long long> t) {
    FunctionSpec s;
    s.kind = Kind::Custom;
    s.table = std::move(t);
    return s;
  }

  // floor(n^(p/q)) = floor((n^p)^(1/q))
  long long operator()(long long n) const {
    if (n < 1) throw std::invalid_argument("FunctionSpec: n must be >= 1");
    switch (kind) {
      case Kind::FloorSqrt: {
        mpz_class v = exact::kth_root_floor(mpz_class(static_cast<unsigned long>(n)), 2);
        return v.get_si();
      }
      case Kind::FloorPow: {
        mpz_class base = exact::pow_uu(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(alpha.num));
        return exact::kth_root_floor(base, static_cast<unsigned long>(alpha.den)).get_si();
      }
      case Kind::Custom:
        if (n > static_cast<long long>(table.size()))
          throw std::out_of_range("FunctionSpec: custom table exhausted at n=" + std::to_string(n));
        return table[n - 1];
    }
    return 0;
  }
};

struct GFunctionSpec {
  enum class Kind { Default, Custom };
  Kind kind = Kind::Default;
  std::vector<std::vector<long long>> table;  // Custom: table[p-1][q-1] = g(p,q)

  static GFunctionSpec def() { return {}; }
  static GFunctionSpec custom(std::vector<std::vector<long long>> t) {
    GFunctionSpec s;
    s.kind = Kind::Custom;
    s.table = std::move(t);
    return s;
  }

  long long operator()(long long p, long long q, const FunctionSpec& f) const {
    if (kind == Kind::Default) return p * f(p) + q;
    if (p > static_cast<long long>(table.size()) ||
        q > static_cast<long long>(table[p - 1].size()))
      throw std::out_of_range("GFunctionSpec: custom table exhausted");
    return table[p - 1][q - 1];
  }
};

// ---------------------------------------------------------------------------
// Block enumeration helpers for the dimension-k word.
// ---------------------------------------------------------------------------

/// m-th word of {1,...,k-2}^+ ordered by length, then lexicographically.
inline std::string dimk_enumerate(int k, long long m) {
  if (k < 3) throw std::invalid_argument("dimk_enumerate: k must be >= 3");
  if (m < 1) throw std::invalid_argument("dimk_enumerate: m must be >= 1");
  long long B = k - 2;
  long long len = 1, count = B;
  long long idx = m - 1;
  while (idx >= count) {
    idx -= count;
    ++len;
    if (count > (1LL << 40) / B) throw std::overflow_error("dimk_enumerate: m too large");
    count *= B;
  }
  std::string t(len, '1');
  for (long long pos = len - 1; pos >= 0; --pos) {
    t[pos] = static_cast<char>('1' + idx % B);
    idx /= B;
  }
  return t;
}

/// Letter-wise image under i -> 1^i 0^(k-i).
inline std::string dimk_binary_image(std::string_view w, int k) {
  if (k < 3) throw std::invalid_argument("dimk_binary_image: k must be >= 3");
  std::string out;
  out.reserve(w.size() * k);
  for (char ch : w) {
    int i = ch - '0';
    if (i < 0 || i > k - 2) throw std::invalid_argument("dimk_binary_image: symbol out of range");
    out.append(i, '1');
    out.append(k - i, '0');
  }
  return out;
}

/// m-th nonempty word over {1,...,k-2} with non-decreasing letters, ordered
/// by length then lex.  These are the interleaved blocks of the dimension-k
/// word; restricting to sorted blocks is what makes every factor split into
/// suffix(w_m) . 1^* ... (k-2)^* . prefix(x).
inline void dimk_sorted_block_advance(std::string& t, int k) {
  char top = static_cast<char>('0' + (k - 2));
  if (t.empty()) { t = "1"; return; }
  long long i = static_cast<long long>(t.size()) - 1;
  while (i >= 0 && t[i] == top) --i;
  if (i < 0) { t.assign(t.size() + 1, '1'); return; }
  ++t[i];
  for (std::size_t j = i + 1; j < t.size(); ++j) t[j] = t[i];
}

// ---------------------------------------------------------------------------
// WordSpec: deterministic generator for every word family in the library.
// ---------------------------------------------------------------------------

class WordSpec;
using WordSpecPtr = std::shared_ptr<const WordSpec>;

class WordSpec {
 public:
  enum class Kind { ThueMorse, Fibonacci, Morphic, Pansiot, DimK, QuadPlus, BiInfinitePad };

  Kind kind;
  // Morphic
  std::map<char, std::string> rules;
  char seed = '0';
  // DimK
  int k = 3;
  // QuadPlus
  FunctionSpec f;
  GFunctionSpec g;
  // BiInfinitePad
  WordSpecPtr inner;
  char pad = 'c';

  static WordSpecPtr thue_morse() { return make(Kind::ThueMorse); }
  static WordSpecPtr fibonacci() { return morphic({{'0', "01"}, {'1', "0"}}, '0'); }
  static WordSpecPtr morphic(std::map<char, std::string> r, char sd) {
    auto s = make(Kind::Morphic);
    s->rules = std::move(r);
    s->seed = sd;
    s->validate();
    return s;
  }
  static WordSpecPtr pansiot() { return make(Kind::Pansiot); }
  static WordSpecPtr dimk(int kk) {
    if (kk < 3) throw std::invalid_argument("dimk: k must be >= 3");
    auto s = make(Kind::DimK);
    s->k = kk;
    return s;
  }
  static WordSpecPtr quadplus(FunctionSpec ff, GFunctionSpec gg) {
    auto s = make(Kind::QuadPlus);
    s->f = std::move(ff);
    s->g = std::move(gg);
    return s;
  }
  static WordSpecPtr bi_infinite_pad(WordSpecPtr in, char pd) {
    auto s = make(Kind::BiInfinitePad);
    s->inner = std::move(in);
    s->pad = pd;
    for (char a : s->inner->alphabet())
      if (a == pd) throw std::invalid_argument("bi_infinite_pad: pad symbol must not be in the inner alphabet");
    return s;
  }

  std::vector<char> alphabet() const {
    switch (kind) {
      case Kind::ThueMorse:
      case Kind::Fibonacci:
        return {'0', '1'};
      case Kind::Morphic: {
        std::vector<char> a;
        for (auto& [c, _] : rules) a.push_back(c);
        return a;
      }
      case Kind::Pansiot:
      case Kind::QuadPlus:
        return {'a', 'b'};
      case Kind::DimK: {
        std::vector<char> a;
        for (int i = 0; i <= k - 2; ++i) a.push_back(static_cast<char>('0' + i));
        return a;
      }
      case Kind::BiInfinitePad: {
        auto a = inner->alphabet();
        a.push_back(pad);
        return a;
      }
    }
    return {};
  }

  bool two_sided() const { return kind == Kind::BiInfinitePad; }

  char symbol_at(long long i) const {
    if (i < 0 && kind != Kind::BiInfinitePad)
      throw std::out_of_range("symbol_at: negative index on a one-sided word");
    switch (kind) {
      case Kind::ThueMorse:
        return static_cast<char>('0' + (std::popcount(static_cast<std::uint64_t>(i)) & 1));
      case Kind::Fibonacci:
      case Kind::Morphic:
      case Kind::DimK:
        return cached_at(static_cast<std::size_t>(i));
      case Kind::Pansiot: {
        // blocks a b^m, cumulative length after block m is m(m+3)/2
        long long m = static_cast<long long>((std::sqrt(9.0 + 8.0 * static_cast<double>(i)) - 3.0) / 2.0);
        while (m * (m + 3) / 2 <= i) ++m;
        while (m > 1 && (m - 1) * (m + 2) / 2 > i) --m;
        long long off = i - (m - 1) * (m + 2) / 2;
        return off == 0 ? 'a' : 'b';
      }
      case Kind::QuadPlus:
        return quadplus_at(i);
      case Kind::BiInfinitePad:
        return i < 0 ? pad : inner->symbol_at(i);
    }
    return '?';
  }

  /// Window of the first n symbols; for two-sided words the window is split
  /// evenly around the origin.
  Window prefix(long long n) const {
    if (n < 1) throw std::invalid_argument("prefix: n must be >= 1");
    long long lo = two_sided() ? -(n / 2) : 0;
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (long long i = lo; i < lo + n; ++i) s.push_back(symbol_at(i));
    return Window(std::move(s), lo);
  }

 private:
  mutable std::mutex mu_;
  mutable std::string cache_;

  static std::shared_ptr<WordSpec> make(Kind kk) {
    auto p = std::make_shared<WordSpec>();
    p->kind = kk;
    return p;
  }

  void validate() const {
    if (kind != Kind::Morphic) return;
    auto it = rules.find(seed);
    if (it == rules.end() || it->second.size() < 2 || it->second[0] != seed)
      throw std::invalid_argument("morphic: morphism must be prolongable on the seed letter");
    for (auto& [c, img] : rules) {
      if (img.empty()) throw std::invalid_argument("morphic: erasing morphisms not supported");
      for (char ch : img)
        if (!rules.count(ch)) throw std::invalid_argument("morphic: image uses a letter without a rule");
    }
  }

  char cached_at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (cache_.size() <= i) extend_cache(i + 1);
    return cache_[i];
  }

  void extend_cache(std::size_t need) const {
    if (kind == Kind::DimK) {
      // w_0 = "0", w_{m+1} = w_m t_{m+1} w_m; length doubles each step
      std::string t;
      std::string w = "0";
      while (w.size() < need) {
        dimk_sorted_block_advance(t, k);
        w = w + t + w;
      }
      cache_ = std::move(w);
      return;
    }
    // morphic fixed point: tau(prefix of x) is again a prefix of x
    if (cache_.empty()) cache_ = std::string(1, seed);
    while (cache_.size() < need) {
      std::string next;
      next.reserve(cache_.size() * 2);
      for (char c : cache_) next += rules.at(c);
      if (next.size() <= cache_.size())
        throw std::runtime_error("morphic: morphism does not expand the seed prefix");
      cache_ = std::move(next);
    }
  }

  char quadplus_at(long long i) const {
    // never materializes a block: walks block boundaries arithmetically
    unsigned __int128 acc = 0;
    long long prev_f = 0;
    long long prev_g_chain = 0;
    for (long long p = 1;; ++p) {
      long long fp = f(p);
      if (p == 1 && fp != 1) throw std::invalid_argument("quadplus: f(1) must be 1");
      if (fp < prev_f) throw std::invalid_argument("quadplus: f must be non-decreasing");
      if (fp > p) throw std::invalid_argument("quadplus: f(n) <= n violated");
      prev_f = fp;
      long long prev_g = 0;
      for (long long q = 1; q <= fp; ++q) {
        long long gpq = g(p, q, f);
        if (p == 1 && q == 1 && gpq < 1) throw std::invalid_argument("quadplus: g(1,1) must be >= 1");
        if (q > 1 && gpq < prev_g) throw std::invalid_argument("quadplus: g(p,q) <= g(p,q+1) violated");
        if (q == 1 && prev_g_chain > gpq) throw std::invalid_argument("quadplus: g(p,f(p)) <= g(p+1,1) violated");
        prev_g = gpq;
        if (q == fp) prev_g_chain = gpq;
        unsigned __int128 block = static_cast<unsigned __int128>(p + q) * static_cast<unsigned __int128>(gpq);
        if (acc + block > static_cast<unsigned __int128>(i)) {
          unsigned __int128 off = static_cast<unsigned __int128>(i) - acc;
          long long r = static_cast<long long>(off % static_cast<unsigned __int128>(p + q));
          return r < p ? 'a' : 'b';
        }
        acc += block;
      }
      if (p > (1LL << 40)) throw std::overflow_error("quadplus: index unreachable");
    }
  }
};

// ---------------------------------------------------------------------------
// The non-factorial test language over {0,1,2}.
// ---------------------------------------------------------------------------

/// Largest L >= 1 with L*log2(L) <= m, via the exact comparison L^L <= 2^m.
inline long long nonfactorial_len(long long m) {
  if (m < 1) throw std::invalid_argument("nonfactorial_len: m must be >= 1");
  long long lo = 1, hi = 2;
  while (exact::selfpow_fits(static_cast<unsigned long>(hi), m)) hi *= 2;
  while (lo + 1 < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (exact::selfpow_fits(static_cast<unsigned long>(mid), m)) lo = mid; else hi = mid;
  }
  return lo;
}

/// y_m: the longest prefix of ([m]_2 2)^omega whose length L satisfies
/// L*log2(L) <= m.
inline std::string nonfactorial_word(long long m) {
  std::string x;
  for (long long v = m; v > 0; v >>= 1) x.push_back(static_cast<char>('0' + (v & 1)));
  std::reverse(x.begin(), x.end());
  x.push_back('2');
  long long L = nonfactorial_len(m);
  std::string y;
  y.reserve(static_cast<std::size_t>(L));
  for (long long i = 0; i < L; ++i) y.push_back(x[i % x.size()]);
  return y;
}

inline std::vector<std::string> nonfactorial_language(long long n_max) {
  if (n_max < 1) throw std::invalid_argument("nonfactorial_language: n_max must be >= 1");
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(n_max));
  for (long long m = 1; m <= n_max; ++m) words.push_back(nonfactorial_word(m));
  std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

inline Window quadplus_prefix(const FunctionSpec& f, const GFunctionSpec& g, long long n) {
  return WordSpec::quadplus(f, g)->prefix(n);
}

}  // namespace wordkit::gen
