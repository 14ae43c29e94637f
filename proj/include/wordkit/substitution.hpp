#pragma once

#include <map>
#include <set>
#include <string>

#include "wordkit/language.hpp"
#include "wordkit/wordgen.hpp"

namespace wordkit::decomp {

/// Piece language for fixed points of a substitution: all prefixes and
/// suffixes (including the empty word) of every iterated image tau^m(u),
/// where u ranges over the nonempty factors of the one-step images tau(a).
/// Every factor of the fixed point then splits into two pieces: a suffix of
/// some iterate followed by a prefix of the next-letter iterate.
/// Truncated to words of length <= n_max.
inline Language substitution_s(const std::map<char, std::string>& rules, char seed,
                               std::size_t n_max) {
  auto spec = gen::WordSpec::morphic(rules, seed);  // validates prolongability
  (void)spec;

  std::set<std::string> units;
  for (auto& [a, img] : rules)
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t len = 1; i + len <= img.size(); ++len)
        units.insert(img.substr(i, len));

  auto apply = [&](const std::string& w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (char c : w) out += rules.at(c);
    return out;
  };

  Language S;
  S.insert("");
  std::size_t alphabet_size = rules.size();
  for (const auto& u0 : units) {
    std::string u = u0;
    // iterate until every image is long enough, then a few more rounds so the
    // boundary words of the letter cycles all appear
    std::size_t rounds_after_long = alphabet_size + 2;
    while (true) {
      std::size_t take = std::min(u.size(), n_max);
      for (std::size_t len = 0; len <= take; ++len) {
        S.insert(std::string_view(u).substr(0, len));
        S.insert(std::string_view(u).substr(u.size() - len));
      }
      if (u.size() >= n_max) {
        if (rounds_after_long-- == 0) break;
      }
      std::string nu = apply(u);
      if (nu == u) break;  // stationary image
      u = std::move(nu);
      if (u.size() > 64 * (n_max + 2)) break;  // plenty of margin past n_max
    }
  }
  S.mark_truncated();
  return S;
}

}  // namespace wordkit::decomp
