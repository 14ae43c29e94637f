#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordkit/common.hpp"

namespace wordkit {

/// A finite enumerated set of finite words with fast membership and
/// per-length complexity tables.  "" is the empty word.
class Language {
  std::unordered_map<std::uint64_t, std::vector<std::string>> buckets_;
  std::size_t size_ = 0;
  std::size_t max_len_ = 0;
  bool truncated_ = false;

 public:
  Language() = default;

  bool insert(std::string_view w) {
    auto key = mix_key(SubstrHash::key_of(w), w.size());
    auto& b = buckets_[key];
    for (auto& s : b)
      if (s == w) return false;
    b.emplace_back(w);
    ++size_;
    max_len_ = std::max(max_len_, w.size());
    return true;
  }

  bool contains(std::string_view w) const {
    auto it = buckets_.find(mix_key(SubstrHash::key_of(w), w.size()));
    if (it == buckets_.end()) return false;
    for (auto& s : it->second)
      if (s == w) return true;
    return false;
  }

  /// Membership by precomputed substring hash; exact because buckets verify.
  bool contains_hashed(std::pair<std::uint64_t, std::uint64_t> k, std::string_view w) const {
    auto it = buckets_.find(mix_key(k, w.size()));
    if (it == buckets_.end()) return false;
    for (auto& s : it->second)
      if (s == w) return true;
    return false;
  }

  bool erase(std::string_view w) {
    auto it = buckets_.find(mix_key(SubstrHash::key_of(w), w.size()));
    if (it == buckets_.end()) return false;
    auto& b = it->second;
    for (auto jt = b.begin(); jt != b.end(); ++jt)
      if (*jt == w) {
        b.erase(jt);
        --size_;
        return true;
      }
    return false;
  }

  std::size_t size() const { return size_; }
  std::size_t max_len() const { return max_len_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  /// All words, sorted by length then lexicographically.
  std::vector<std::string> words() const {
    std::vector<std::string> out;
    out.reserve(size_);
    for (auto& [_, b] : buckets_)
      for (auto& s : b) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  /// p_L(n) for 0 <= n <= max_len.
  std::vector<long long> complexity_table() const {
    std::vector<long long> p(max_len_ + 1, 0);
    for (auto& [_, b] : buckets_)
      for (auto& s : b) ++p[s.size()];
    return p;
  }

  /// p*_L(n) = sum of p_L(i) for i <= n.
  std::vector<long long> accumulative_table() const {
    auto p = complexity_table();
    for (std::size_t i = 1; i < p.size(); ++i) p[i] += p[i - 1];
    return p;
  }

  static Language of(const std::vector<std::string>& ws) {
    Language L;
    for (auto& w : ws) L.insert(w);
    return L;
  }
};

}  // namespace wordkit
