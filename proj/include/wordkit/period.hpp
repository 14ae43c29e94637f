#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wordkit/common.hpp"

namespace wordkit {

/// KMP failure table: border[i] = length of the longest proper border of
/// v[0,i).  border[0] = 0 by convention.
inline std::vector<std::size_t> border_array(std::string_view v) {
  std::vector<std::size_t> b(v.size() + 1, 0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::size_t k = b[i];
    while (k > 0 && v[i] != v[k]) k = b[k];
    b[i + 1] = (v[i] == v[k]) ? k + 1 : 0;
  }
  return b;
}

/// Least period pi(v) = |v| - (longest proper border length).
inline std::size_t least_period(std::string_view v) {
  if (v.empty()) throw std::invalid_argument("least_period: empty word");
  return v.size() - border_array(v).back();
}

/// Virtual occurrence of v at cut position i of w (0 <= i <= |w|):
/// begin side compares v against w[i..), end side against w[..i); the
/// shorter of the two must be a prefix (suffix) of the other.
enum class Side { Begin, End };

inline bool virtual_occurrence(const Window& w, std::size_t i, std::string_view v, Side side) {
  if (i > w.size()) throw std::out_of_range("virtual_occurrence: position out of range");
  if (side == Side::Begin) {
    std::size_t ov = std::min(v.size(), w.size() - i);
    return v.substr(0, ov) == w.view(i, ov);
  }
  std::size_t ov = std::min(v.size(), i);
  return v.substr(v.size() - ov) == w.view(i - ov, ov);
}

/// Does some witness of length p have virtual occurrences both beginning and
/// ending at cut position i?  The begin side pins the witness's first
/// min(p,|w|-i) symbols and the end side its last min(p,i) symbols; a witness
/// exists iff the pinned regions agree where they overlap.  In the interior
/// (p <= i and i+p <= |w|) this is exactly w[i-p..i) == w[i..i+p).
inline bool has_virtual_square(const Window& w, std::size_t i, std::size_t p) {
  if (i > w.size()) throw std::out_of_range("has_virtual_square: position out of range");
  if (p == 0) throw std::invalid_argument("has_virtual_square: length must be >= 1");
  std::size_t lo = p - std::min(p, i);
  std::size_t hi = std::min(p, w.size() - i);
  for (std::size_t j = lo; j < hi; ++j)
    if (w.symbols[i + j - p] != w.symbols[i + j]) return false;
  return true;
}

struct OccurrenceClass {
  bool internal = false;
  bool initial = false;
  bool final = false;
  bool boundary_affected = false;

  const char* label() const {
    if (internal) return "internal";
    if (initial && final) return "initial+final";
    return initial ? "initial" : "final";
  }
};

/// Classify the occurrence of v at position i of w using virtual squares of
/// length pi(v) at both endpoints.  boundary_affected signals that a square
/// test was clipped by the window edge rather than by the start of a
/// one-sided word (origin 0), so an infinite-word caller should widen the
/// window by at least pi(v) on that side.
inline OccurrenceClass classify_occurrence(const Window& w, std::size_t i, std::string_view v) {
  if (v.empty() || i + v.size() > w.size() || w.view(i, v.size()) != v)
    throw std::invalid_argument("classify_occurrence: v does not occur at i");
  std::size_t p = least_period(v);
  bool sq_begin = has_virtual_square(w, i, p);
  bool sq_end = has_virtual_square(w, i + v.size(), p);
  OccurrenceClass c;
  c.initial = !sq_begin;
  c.final = !sq_end;
  c.internal = sq_begin && sq_end;
  c.boundary_affected = (p > i && w.origin != 0) || (i + v.size() + p > w.size());
  return c;
}

inline std::vector<std::size_t> occurrence_positions(std::string_view text, std::string_view v) {
  std::vector<std::size_t> pos;
  if (v.empty() || v.size() > text.size()) return pos;
  for (std::size_t i = 0; i + v.size() <= text.size(); ++i)
    if (text.compare(i, v.size(), v) == 0) pos.push_back(i);
  return pos;
}

/// Leftmost occurrence of v classified final with boundary_affected false.
inline std::optional<std::size_t> final_occurrence(const Window& w, std::string_view v) {
  auto pos = occurrence_positions(w.view(), v);
  if (pos.empty()) throw std::invalid_argument("final_occurrence: v is not a factor");
  for (std::size_t i : pos) {
    OccurrenceClass c = classify_occurrence(w, i, v);
    if (!c.boundary_affected && c.final) return i;
  }
  return std::nullopt;
}

}  // namespace wordkit
