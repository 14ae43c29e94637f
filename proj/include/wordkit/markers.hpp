#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordkit/common.hpp"
#include "wordkit/factor_index.hpp"
#include "wordkit/period.hpp"

namespace wordkit::markers {

/// A D-marker set: every factor of length >= D*n of the source word contains
/// a length-n element, for each stored level n.
struct MarkerSet {
  enum class Provenance { RightSpecial, Greedy };
  Provenance provenance = Provenance::RightSpecial;
  int D = 0;
  std::map<std::size_t, std::vector<std::string>> levels;
  std::vector<std::string> notes;  // construction caveats, e.g. boundary fallbacks

  long long level_count(std::size_t n) const {
    auto it = levels.find(n);
    return it == levels.end() ? 0 : static_cast<long long>(it->second.size());
  }
};

struct MarkerCheck {
  bool pass = true;
  std::size_t fail_n = 0;
  std::size_t fail_pos = 0;
  std::string detail = "pass";
};

/// Verify the defining property on the window for every n in [1, n_max]:
/// each factor of length exactly D*n contains a length-n marker.
inline MarkerCheck is_marker_set(const MarkerSet& M, const Window& w, const FactorIndex& idx,
                                 int D, std::size_t n_max) {
  if (D * n_max > w.size()) throw std::invalid_argument("is_marker_set: window too short");
  MarkerCheck out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t L = static_cast<std::size_t>(D) * n;
    std::vector<std::size_t> occ;
    auto it = M.levels.find(n);
    if (it != M.levels.end())
      for (auto& m : it->second) {
        auto o = idx.occurrences(m);
        occ.insert(occ.end(), o.begin(), o.end());
      }
    std::sort(occ.begin(), occ.end());
    std::size_t oi = 0;
    for (std::size_t pos = 0; pos + L <= w.size(); ++pos) {
      while (oi < occ.size() && occ[oi] < pos) ++oi;
      if (oi >= occ.size() || occ[oi] > pos + L - n) {
        out.pass = false;
        out.fail_n = n;
        out.fail_pos = pos;
        out.detail = "no length-" + std::to_string(n) + " marker in factor at position " +
                     std::to_string(pos);
        return out;
      }
    }
  }
  return out;
}

inline void require_aperiodic(const FactorIndex& idx, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n)
    if (idx.complexity(n) < static_cast<long long>(n) + 1)
      throw std::invalid_argument("marker construction: window looks periodic (p(n) <= n at n=" +
                                  std::to_string(n) + ")");
}

/// Default level plan: all n <= n_max plus powers of two up to pow_max
/// (the split machinery only consumes power-of-two levels).
inline std::vector<std::size_t> level_plan(std::size_t n_max, std::size_t pow_max) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n <= n_max; ++n) ns.push_back(n);
  for (std::size_t p = 2; p <= pow_max; p *= 2)
    if (p > n_max) ns.push_back(p);
  return ns;
}

/// Right-special marker set with D = C+1, where C = ceil(max p(n)/n) is
/// measured over the checked range.
inline MarkerSet rs_marker_set(const FactorIndex& idx, std::size_t n_max, std::size_t pow_max = 0) {
  std::size_t check_to = std::min<std::size_t>(n_max, idx.length() / 4);
  require_aperiodic(idx, std::max<std::size_t>(1, check_to));
  MarkerSet M;
  M.provenance = MarkerSet::Provenance::RightSpecial;
  long long C = 1;
  for (std::size_t n = 1; n <= std::max<std::size_t>(1, check_to); ++n) {
    long long p = idx.complexity(n);
    C = std::max(C, (p + static_cast<long long>(n) - 1) / static_cast<long long>(n));
  }
  M.D = static_cast<int>(C + 1);
  for (std::size_t n : level_plan(n_max, pow_max))
    M.levels[n] = idx.right_special_factors(n);
  return M;
}

struct GreedyLevel {
  std::vector<std::string> markers;
  std::vector<std::string> notes;
};

/// Greedy 3-marker construction, one level per n: seed with the factor at
/// position n and its middle block, then sweep positions >= n left to right
/// adding the middle block of the first uncovered length-3n factor.  With
/// final_occurrence_order set, the first sweep only cuts factors at their
/// leftmost final occurrence; a completing sweep then covers stragglers.
inline GreedyLevel greedy_level(const Window& w, const FactorIndex& idx, std::size_t n,
                                bool final_occurrence_order = false) {
  std::size_t N = w.size();
  if (4 * n > N) throw std::invalid_argument("greedy_level: need 4n <= window length");
  GreedyLevel out;
  std::vector<char> occ_start(N, 0);  // positions where some chosen marker occurs

  auto add_marker = [&](std::string_view m) {
    out.markers.emplace_back(m);
    for (std::size_t p : idx.occurrences(m)) occ_start[p] = 1;
  };

  auto covered = [&](std::size_t pos) {
    std::size_t hi = std::min(N - n, pos + 2 * n);
    for (std::size_t q = pos; q <= hi; ++q)
      if (occ_start[q]) return true;
    return false;
  };

  // seed: w1 = w[n, 4n-1], m1 = w[2n, 3n-1]
  add_marker(w.view(2 * n, n));

  for (std::size_t pos = n; pos + 3 * n <= N; ++pos) {
    if (covered(pos)) continue;
    if (final_occurrence_order) {
      auto fo = final_occurrence(w, w.view(pos, 3 * n));
      if (!fo || *fo != pos) continue;
    }
    add_marker(w.view(pos + n, n));
  }
  if (final_occurrence_order) {
    for (std::size_t pos = n; pos + 3 * n <= N; ++pos)
      if (!covered(pos)) add_marker(w.view(pos + n, n));
  }

  // factors occurring only before position n are outside the sweep; flag them
  for (std::size_t pos = 0; pos + 3 * n <= N && pos < n; ++pos)
    if (!covered(pos))
      out.notes.push_back("level " + std::to_string(n) + ": factor at position " +
                          std::to_string(pos) + " uncovered (occurs only near the left edge)");

  std::sort(out.markers.begin(), out.markers.end());
  out.markers.erase(std::unique(out.markers.begin(), out.markers.end()), out.markers.end());
  return out;
}

/// 3-marker set with the per-level cardinality bound |M_n| <= p(4n)/n.
/// If the leftmost sweep ever breaks the bound, the level is rebuilt cutting
/// factors at final occurrences first.
inline MarkerSet greedy_marker_set(const Window& w, const FactorIndex& idx, std::size_t n_max,
                                   std::size_t pow_max = 0, unsigned threads = 1) {
  std::size_t check_to = std::min<std::size_t>(n_max, idx.length() / 4);
  require_aperiodic(idx, std::max<std::size_t>(1, check_to));
  MarkerSet M;
  M.provenance = MarkerSet::Provenance::Greedy;
  M.D = 3;
  auto ns = level_plan(n_max, pow_max);
  std::vector<GreedyLevel> built(ns.size());
  parallel_for(ns.size(), threads, [&](std::size_t i) {
    std::size_t n = ns[i];
    auto lvl = greedy_level(w, idx, n);
    long long cap = idx.complexity(4 * n) / static_cast<long long>(n);
    if (static_cast<long long>(lvl.markers.size()) > cap) {
      lvl = greedy_level(w, idx, n, /*final_occurrence_order=*/true);
      lvl.notes.push_back("level " + std::to_string(n) + ": rebuilt with final-occurrence order");
    }
    built[i] = std::move(lvl);
  });
  for (std::size_t i = 0; i < ns.size(); ++i) {
    M.levels[ns[i]] = std::move(built[i].markers);
    for (auto& note : built[i].notes) M.notes.push_back(note);
  }
  return M;
}

}  // namespace wordkit::markers
