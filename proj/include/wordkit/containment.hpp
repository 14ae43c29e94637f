#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordkit/common.hpp"
#include "wordkit/language.hpp"

namespace wordkit::verify {

/// One piece position in an ordered product S_1...S_k: either an enumerated
/// Language or a membership predicate.
struct Oracle {
  const Language* lang = nullptr;
  std::function<bool(std::string_view)> pred;

  static Oracle of(const Language& L) { return Oracle{&L, nullptr}; }
  static Oracle of_pred(std::function<bool(std::string_view)> p) { return Oracle{nullptr, std::move(p)}; }

  bool contains(std::string_view w) const { return lang ? lang->contains(w) : pred(w); }
  bool contains_hashed(std::pair<std::uint64_t, std::uint64_t> key, std::string_view w) const {
    return lang ? lang->contains_hashed(key, w) : pred(w);
  }
  bool has_epsilon() const { return contains(std::string_view{}); }
};

struct Factorization {
  std::vector<std::size_t> cut;  // piece lengths, one per oracle (may be 0)
};

/// Find a factorization v = s_1...s_k with s_i in oracle i, allowing empty
/// pieces only where the oracle contains the empty word.  DP over (position,
/// piece) with substring membership via hashing; enumerated-language lookups
/// verify bucket contents, so the result is exact.
inline std::optional<Factorization> find_factorization(std::string_view v,
                                                       const std::vector<Oracle>& oracles) {
  std::size_t k = oracles.size();
  std::size_t n = v.size();
  SubstrHash H(v);
  // reach[m][j]: v[0,j) parses into the first m oracles; store predecessor cut
  std::vector<std::vector<int>> from(k + 1, std::vector<int>(n + 1, -1));
  std::vector<std::vector<char>> reach(k + 1, std::vector<char>(n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    const Oracle& O = oracles[m - 1];
    bool eps = O.has_epsilon();
    std::size_t piece_cap = O.lang ? O.lang->max_len() : n;
    for (std::size_t j = 0; j <= n; ++j) {
      if (!reach[m - 1][j]) continue;
      if (eps && !reach[m][j]) { reach[m][j] = 1; from[m][j] = static_cast<int>(j); }
      std::size_t hi = std::min(n, j + piece_cap);
      for (std::size_t e = j + 1; e <= hi; ++e) {
        if (reach[m][e]) continue;
        if (O.contains_hashed(H.key(j, e - j), v.substr(j, e - j))) {
          reach[m][e] = 1;
          from[m][e] = static_cast<int>(j);
        }
      }
    }
  }
  // epsilon transitions already let a factorization use fewer than k
  // nonempty pieces exactly when the skipped oracles contain the empty word
  if (!reach[k][n]) return std::nullopt;
  Factorization f;
  f.cut.assign(k, 0);
  std::size_t j = n;
  for (std::size_t m = k; m >= 1; --m) {
    std::size_t pj = static_cast<std::size_t>(from[m][j]);
    f.cut[m - 1] = j - pj;
    j = pj;
  }
  // verify the witness exactly
  std::size_t off = 0;
  for (std::size_t m = 0; m < k; ++m) {
    if (!oracles[m].contains(v.substr(off, f.cut[m]))) return std::nullopt;
    off += f.cut[m];
  }
  return off == n ? std::optional<Factorization>(f) : std::nullopt;
}

struct ContainmentReport {
  bool pass = true;
  std::size_t checked = 0;
  std::string first_fail;
  std::size_t first_fail_len = 0;

  std::string detail() const {
    if (pass) return "pass (" + std::to_string(checked) + " factors)";
    return "fail@" + first_fail + " (length " + std::to_string(first_fail_len) + ")";
  }
};

/// Check every factor against the ordered oracle product.  Deterministic:
/// the reported failure is the first in input order.
inline ContainmentReport check_containment(const std::vector<std::string_view>& factors,
                                           const std::vector<Oracle>& oracles,
                                           unsigned threads = 1) {
  std::vector<char> ok(factors.size(), 1);
  parallel_for(factors.size(), threads, [&](std::size_t i) {
    ok[i] = find_factorization(factors[i], oracles).has_value() ? 1 : 0;
  });
  ContainmentReport rep;
  rep.checked = factors.size();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!ok[i]) {
      rep.pass = false;
      rep.first_fail = std::string(factors[i]);
      rep.first_fail_len = factors[i].size();
      break;
    }
  }
  return rep;
}

}  // namespace wordkit::verify
