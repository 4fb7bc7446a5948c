#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccp/bitvec.hpp"
#include "ccp/errors.hpp"

namespace ccp {

// Row or column sums of a p x p 0-1 matrix: length-p vector with entries
// in [0, p].
class SumVector {
 public:
  SumVector() = default;

  explicit SumVector(std::vector<int> values) : values_(std::move(values)) {
    const int p = static_cast<int>(values_.size());
    for (int v : values_) {
      if (v < 0 || v > p)
        throw ArgumentError("SumVector entries must lie in [0, length]");
    }
  }

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  int at(std::size_t i) const { return values_.at(i); }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const SumVector&) const = default;

 private:
  std::vector<int> values_;
};

// Square 0-1 matrix, row-major.
class Matrix01 {
 public:
  Matrix01() = default;
  explicit Matrix01(std::size_t p) : p_(p), cells_(p * p, 0) {}

  std::size_t size() const { return p_; }
  int at(std::size_t i, std::size_t j) const { return cells_[i * p_ + j]; }
  void set(std::size_t i, std::size_t j, int v) {
    if (v != 0 && v != 1) throw ArgumentError("Matrix01 entries must be 0 or 1");
    cells_[i * p_ + j] = static_cast<std::uint8_t>(v);
  }

  SumVector row_sums() const {
    std::vector<int> x(p_, 0);
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < p_; ++j) x[i] += at(i, j);
    return SumVector(std::move(x));
  }

  SumVector col_sums() const {
    std::vector<int> y(p_, 0);
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < p_; ++j) y[j] += at(i, j);
    return SumVector(std::move(y));
  }

  bool operator==(const Matrix01&) const = default;

 private:
  std::size_t p_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Structure function: tau_kl = (p-k)(p-l) + sum_{j<=l} y_j - sum_{i>k} x_i.
// Defined for arbitrary, possibly non-monotone sums; may be negative.
inline long long tau(const SumVector& x, const SumVector& y, int k, int l) {
  const int p = static_cast<int>(x.size());
  if (y.size() != x.size()) throw ArgumentError("tau: |x| != |y|");
  if (k < 0 || k > p || l < 0 || l > p)
    throw ArgumentError("tau: k and l must lie in [0, p]");
  long long t = static_cast<long long>(p - k) * (p - l);
  for (int j = 0; j < l; ++j) t += y[static_cast<std::size_t>(j)];
  for (int i = k; i < p; ++i) t -= x[static_cast<std::size_t>(i)];
  return t;
}

namespace detail {

// Consistency check on pre-sorted (monotone nondecreasing) vectors.
// On failure reports the first (k,l), scanned row-major, with tau < 0,
// or nothing when only the total sums differ.
struct ConsistencyResult {
  bool consistent = false;
  bool sum_mismatch = false;
  std::optional<std::pair<int, int>> violated_kl;
};

inline ConsistencyResult check_monotone01(const SumVector& x,
                                          const SumVector& y) {
  const int p = static_cast<int>(x.size());
  ConsistencyResult res;
  long long sx = std::accumulate(x.values().begin(), x.values().end(), 0LL);
  long long sy = std::accumulate(y.values().begin(), y.values().end(), 0LL);
  // Prefix sums make the double loop O(p^2).
  std::vector<long long> py(static_cast<std::size_t>(p) + 1, 0);
  std::vector<long long> sxk(static_cast<std::size_t>(p) + 1, 0);
  for (int j = 0; j < p; ++j)
    py[static_cast<std::size_t>(j) + 1] =
        py[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j)];
  sxk[static_cast<std::size_t>(p)] = 0;
  for (int i = p - 1; i >= 0; --i)
    sxk[static_cast<std::size_t>(i)] =
        sxk[static_cast<std::size_t>(i) + 1] + x[static_cast<std::size_t>(i)];
  for (int k = 0; k <= p; ++k) {
    for (int l = 0; l <= p; ++l) {
      long long t = static_cast<long long>(p - k) * (p - l) +
                    py[static_cast<std::size_t>(l)] -
                    sxk[static_cast<std::size_t>(k)];
      if (t < 0) {
        res.violated_kl = {k, l};
        return res;
      }
    }
  }
  if (sx != sy) {
    res.sum_mismatch = true;
    return res;
  }
  res.consistent = true;
  return res;
}

inline SumVector sorted(const SumVector& v) {
  std::vector<int> s = v.values();
  std::sort(s.begin(), s.end());
  return SumVector(std::move(s));
}

}  // namespace detail

// Do x, y admit a 0-1 realization? Consistency is invariant under permuting
// sums (permuting rows/columns of a realization permutes its sums), so both
// vectors are sorted into monotone order before the structure-function test.
inline bool consistent01(const SumVector& x, const SumVector& y) {
  if (x.size() != y.size()) throw ArgumentError("consistent01: |x| != |y|");
  auto res = detail::check_monotone01(detail::sorted(x), detail::sorted(y));
  return res.consistent;
}

// Greedy Ryser-style reconstruction: rows in descending demand order, each
// row placed into the columns with the largest residual demand. Returns a
// matrix with row sums x and column sums y; which realization is returned
// is unspecified beyond that.
inline Matrix01 reconstruct01(const SumVector& x, const SumVector& y) {
  if (x.size() != y.size()) throw ArgumentError("reconstruct01: |x| != |y|");
  const std::size_t p = x.size();

  auto res = detail::check_monotone01(detail::sorted(x), detail::sorted(y));
  if (!res.consistent) {
    std::string msg = "reconstruct01: inconsistent sums";
    if (res.sum_mismatch) {
      msg += " (total row and column sums differ)";
    } else if (res.violated_kl) {
      msg += " (tau < 0 at sorted k=" + std::to_string(res.violated_kl->first) +
             ", l=" + std::to_string(res.violated_kl->second) + ")";
    }
    throw InconsistentError(msg, res.violated_kl);
  }

  Matrix01 T(p);
  std::vector<int> residual = y.values();
  std::vector<std::size_t> row_order(p);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

  std::vector<std::size_t> cols(p);
  for (std::size_t r : row_order) {
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
      return residual[a] > residual[b];
    });
    for (int placed = 0; placed < x[r]; ++placed) {
      std::size_t c = cols[static_cast<std::size_t>(placed)];
      if (residual[c] <= 0)
        throw InternalError("reconstruct01: greedy placement starved");
      T.set(r, c, 1);
      --residual[c];
    }
  }
  for (int rem : residual) {
    if (rem != 0) throw InternalError("reconstruct01: residual demand left");
  }
  return T;
}

// (k,l)-decomposed: top-left k x l quadrant all 0 and bottom-right
// (p-k) x (p-l) quadrant all 1. Empty quadrants hold vacuously.
inline bool is_decomposed(const Matrix01& T, int k, int l) {
  const int p = static_cast<int>(T.size());
  if (k < 0 || k > p || l < 0 || l > p)
    throw ArgumentError("is_decomposed: k and l must lie in [0, p]");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j)
      if (T.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
        return false;
  for (int i = k; i < p; ++i)
    for (int j = l; j < p; ++j)
      if (T.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 1)
        return false;
  return true;
}

// Perfect mirror: 0 above the anti-diagonal, 1 below it, sigma on it
// (entry (i,j), 1-based: 0 if i+j <= p, sigma_i if i+j = p+1, 1 if
// i+j >= p+2).
inline Matrix01 perfect_mirror(const BitVec& sigma) {
  const std::size_t p = sigma.size();
  Matrix01 T(p);
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t j = 1; j <= p; ++j) {
      int v = 0;
      if (i + j == p + 1)
        v = sigma[i - 1];
      else if (i + j >= p + 2)
        v = 1;
      T.set(i - 1, j - 1, v);
    }
  }
  return T;
}

// The skew-mirror instance: x_i = i - alpha_i, y_i = i - beta_i (1-based).
inline std::pair<SumVector, SumVector> skew_instance(const BitVec& alpha,
                                                     const BitVec& beta) {
  if (alpha.size() != beta.size())
    throw ArgumentError("skew_instance: |alpha| != |beta|");
  const std::size_t p = alpha.size();
  std::vector<int> x(p), y(p);
  for (std::size_t i = 0; i < p; ++i) {
    x[i] = static_cast<int>(i) + 1 - alpha[i];
    y[i] = static_cast<int>(i) + 1 - beta[i];
  }
  return {SumVector(std::move(x)), SumVector(std::move(y))};
}

// The skew instance is consistent iff rev(alpha) and beta have equal total
// sums and rev(alpha) majorizes beta.
inline bool skew_consistent(const BitVec& alpha, const BitVec& beta) {
  if (alpha.size() != beta.size())
    throw ArgumentError("skew_consistent: |alpha| != |beta|");
  const BitVec ra = reverse(alpha);
  return total_sum(ra) == total_sum(beta) && majorizes(ra, beta);
}

// For a consistent skew instance: rev(alpha) = beta iff its unique
// realization is the perfect mirror of complement(alpha).
inline bool skew_is_perfect(const BitVec& alpha, const BitVec& beta) {
  if (!skew_consistent(alpha, beta))
    throw ArgumentError("skew_is_perfect: instance is not consistent");
  return reverse(alpha) == beta;
}

}  // namespace ccp
