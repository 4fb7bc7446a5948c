#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ccp/errors.hpp"

namespace ccp {

// A fixed-length 0-1 vector. Storage is 0-based; the textual form is the
// usual binary-string notation with index 1 leftmost, e.g. "010100".
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw ArgumentError("BitVec entries must be 0 or 1");
    }
  }

  static BitVec zeros(std::size_t p) {
    return BitVec(std::vector<std::uint8_t>(p, 0));
  }

  static BitVec ones(std::size_t p) {
    return BitVec(std::vector<std::uint8_t>(p, 1));
  }

  static BitVec parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1')
        throw ArgumentError("BitVec text must consist of 0s and 1s");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitVec(std::move(bits));
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // 0-based access.
  int bit(std::size_t i) const { return bits_.at(i); }
  int operator[](std::size_t i) const { return bits_[i]; }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BitVec&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline int total_sum(const BitVec& a) {
  return std::accumulate(a.bits().begin(), a.bits().end(), 0);
}

inline BitVec complement(const BitVec& a) {
  std::vector<std::uint8_t> bits(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    bits[i] = static_cast<std::uint8_t>(1 - a[i]);
  return BitVec(std::move(bits));
}

inline BitVec reverse(const BitVec& a) {
  std::vector<std::uint8_t> bits(a.bits().rbegin(), a.bits().rend());
  return BitVec(std::move(bits));
}

// Prefix-sum dominance: a ⪯ b iff every prefix sum of a is at most the
// corresponding prefix sum of b.
inline bool minorizes(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size())
    throw ArgumentError("minorizes: vectors must have equal length");
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

inline bool majorizes(const BitVec& a, const BitVec& b) {
  return minorizes(b, a);
}

// The chain potential: sum over positions j (1-based) of (p-j+1) * a_j.
// Strictly increasing along any strictly ⪯-increasing chain.
inline int potential(const BitVec& a) {
  const int p = static_cast<int>(a.size());
  int total = 0;
  for (int j = 0; j < p; ++j) total += (p - j) * a[static_cast<std::size_t>(j)];
  return total;
}

namespace detail {

inline void emit_sum_vectors(int p, int t, std::vector<BitVec>& out) {
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(p), 0);
  // Positions of the t ones, advanced in lexicographic order.
  std::vector<int> pos(static_cast<std::size_t>(t));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int q : pos) cur[static_cast<std::size_t>(q)] = 1;
    out.emplace_back(cur);
    int i = t - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == p - t + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

// Length of the longest strictly ⪯-increasing chain among 0-1 vectors of
// length p and total sum t, found by longest-path search over the explicit
// order DAG on all C(p,t) vectors.
inline int longest_chain_length(int p, int t) {
  if (p < 0 || t < 0 || t > p)
    throw ArgumentError("longest_chain_length: need 0 <= t <= p");
  constexpr std::uint64_t kMaxVectors = 5000;
  std::uint64_t count = 1;
  for (int i = 1; i <= t; ++i) {
    count = count * static_cast<std::uint64_t>(p - t + i) /
            static_cast<std::uint64_t>(i);
    if (count > kMaxVectors)
      throw BudgetError("longest_chain_length: C(p,t) exceeds search budget");
  }

  std::vector<BitVec> vecs;
  vecs.reserve(static_cast<std::size_t>(count));
  if (t == 0) {
    vecs.push_back(BitVec::zeros(static_cast<std::size_t>(p)));
  } else {
    detail::emit_sum_vectors(p, t, vecs);
  }

  // Potential is a strictly monotone rank, so sorting by it topologically
  // orders the DAG.
  std::sort(vecs.begin(), vecs.end(), [](const BitVec& a, const BitVec& b) {
    int pa = potential(a), pb = potential(b);
    return pa != pb ? pa < pb : a.bits() < b.bits();
  });

  std::vector<int> longest(vecs.size(), 1);
  int best = 1;
  for (std::size_t j = 0; j < vecs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (longest[i] + 1 > longest[j] && vecs[i] != vecs[j] &&
          minorizes(vecs[i], vecs[j])) {
        longest[j] = longest[i] + 1;
      }
    }
    best = std::max(best, longest[j]);
  }
  return best;
}

}  // namespace ccp
