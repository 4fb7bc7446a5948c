#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ccp/binmat.hpp"
#include "ccp/bitvec.hpp"
#include "ccp/errors.hpp"
#include "ccp/instance.hpp"

namespace ccp {

// Graph edge with 1-based endpoints, u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int u_, int v_) : u(u_), v(v_) {
    if (u < 1) throw ValidationError("edge endpoints are 1-based");
    if (u == v) throw ValidationError("self-loops are not allowed");
    if (u > v)
      throw ValidationError("edge endpoints must satisfy u < v");
  }

  bool operator==(const Edge&) const = default;
};

namespace detail {

inline void require_edge_in_range(const Edge& e, int n) {
  if (e.v > n)
    throw ArgumentError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") exceeds vertex count " +
                        std::to_string(n));
}

// Indices of the fixed gadget palette {A, B, C}.
inline constexpr std::size_t kAzure = 0;
inline constexpr std::size_t kBeige = 1;
inline constexpr std::size_t kCyan = 2;

}  // namespace detail

// Beige skew mirror: an (n+2) x (n+2) instance whose only atoms are beige.
// Beige sums are i - alpha_i + 2 / i - beta_i + 2 on the first n lines and
// n+2 on the last two; azure and cyan sums are zero.
inline CcpInstance make_bsm(const BitVec& alpha, const BitVec& beta) {
  if (alpha.size() != beta.size())
    throw ArgumentError("make_bsm: |alpha| != |beta|");
  const int n = static_cast<int>(alpha.size());
  const std::size_t side = static_cast<std::size_t>(n) + 2;
  CcpInstance I(side, Palette::abc());
  for (int i = 1; i <= n; ++i) {
    I.set_row_sum(detail::kBeige, static_cast<std::size_t>(i - 1),
                  i - alpha[static_cast<std::size_t>(i - 1)] + 2);
    I.set_col_sum(detail::kBeige, static_cast<std::size_t>(i - 1),
                  i - beta[static_cast<std::size_t>(i - 1)] + 2);
  }
  for (int i = n + 1; i <= n + 2; ++i) {
    I.set_row_sum(detail::kBeige, static_cast<std::size_t>(i - 1), n + 2);
    I.set_col_sum(detail::kBeige, static_cast<std::size_t>(i - 1), n + 2);
  }
  I.validate();
  return I;
}

inline bool bsm_consistent(const BitVec& alpha, const BitVec& beta) {
  if (alpha.size() != beta.size())
    throw ArgumentError("bsm_consistent: |alpha| != |beta|");
  return total_sum(alpha) == total_sum(beta) && majorizes(reverse(alpha), beta);
}

// Azure mirror: azure sums i / 0 / K, beige sums gamma_i / 2 / n-K+2
// (rows; columns symmetric with delta), cyan sums zero.
inline CcpInstance make_asm(const BitVec& gamma, const BitVec& delta, int K) {
  if (gamma.size() != delta.size())
    throw ArgumentError("make_asm: |gamma| != |delta|");
  const int n = static_cast<int>(gamma.size());
  if (K < 0 || K > n) throw ArgumentError("make_asm: need 0 <= K <= n");
  const std::size_t side = static_cast<std::size_t>(n) + 2;
  CcpInstance I(side, Palette::abc());
  for (int i = 1; i <= n; ++i) {
    I.set_row_sum(detail::kAzure, static_cast<std::size_t>(i - 1), i);
    I.set_col_sum(detail::kAzure, static_cast<std::size_t>(i - 1), i);
    I.set_row_sum(detail::kBeige, static_cast<std::size_t>(i - 1),
                  gamma[static_cast<std::size_t>(i - 1)]);
    I.set_col_sum(detail::kBeige, static_cast<std::size_t>(i - 1),
                  delta[static_cast<std::size_t>(i - 1)]);
  }
  const std::size_t gutter = static_cast<std::size_t>(n);      // offset n+1
  const std::size_t screen = static_cast<std::size_t>(n) + 1;  // offset n+2
  I.set_row_sum(detail::kAzure, gutter, 0);
  I.set_col_sum(detail::kAzure, gutter, 0);
  I.set_row_sum(detail::kAzure, screen, K);
  I.set_col_sum(detail::kAzure, screen, K);
  I.set_row_sum(detail::kBeige, gutter, 2);
  I.set_col_sum(detail::kBeige, gutter, 2);
  I.set_row_sum(detail::kBeige, screen, n - K + 2);
  I.set_col_sum(detail::kBeige, screen, n - K + 2);
  I.validate();
  return I;
}

// Only defined under the hypothesis sum(gamma) = sum(delta) = n-K; outside
// of it there is no verdict to give, so the call is refused.
inline bool asm_consistent(const BitVec& gamma, const BitVec& delta, int K) {
  if (gamma.size() != delta.size())
    throw ArgumentError("asm_consistent: |gamma| != |delta|");
  const int n = static_cast<int>(gamma.size());
  if (K < 0 || K > n) throw ArgumentError("asm_consistent: need 0 <= K <= n");
  if (total_sum(gamma) != n - K || total_sum(delta) != n - K)
    throw ArgumentError(
        "asm_consistent: requires sum(gamma) = sum(delta) = n - K");
  return majorizes(gamma, reverse(delta));
}

// Edge verifier: the azure mirror plus six nonzero cyan sums placed for
// edge e = (u,v).
inline CcpInstance make_ev(const BitVec& gamma, const BitVec& delta, Edge e,
                           int K) {
  CcpInstance I = make_asm(gamma, delta, K);
  const int n = static_cast<int>(gamma.size());
  detail::require_edge_in_range(e, n);
  I.set_row_sum(detail::kCyan, static_cast<std::size_t>(e.u - 1), 2);
  I.set_row_sum(detail::kCyan, static_cast<std::size_t>(e.v - 1), 1);
  I.set_row_sum(detail::kCyan, static_cast<std::size_t>(n), 1);
  I.set_col_sum(detail::kCyan, static_cast<std::size_t>(n - e.u), 1);
  I.set_col_sum(detail::kCyan, static_cast<std::size_t>(n - e.v), 2);
  I.set_col_sum(detail::kCyan, static_cast<std::size_t>(n), 1);
  I.validate();
  return I;
}

// Consistency of EV(gamma, rev gamma, e): the vertex set {u : gamma_u = 0}
// must contain an endpoint of e, and gamma must have total sum n-K.
inline bool ev_consistent(const BitVec& gamma, Edge e, int K) {
  const int n = static_cast<int>(gamma.size());
  detail::require_edge_in_range(e, n);
  if (total_sum(gamma) != n - K) return false;
  return gamma[static_cast<std::size_t>(e.u - 1)] == 0 ||
         gamma[static_cast<std::size_t>(e.v - 1)] == 0;
}

namespace detail {

inline void assert_realizes(const CcpInstance& I, const ColorMatrix& T,
                            const char* builder) {
  if (!verify_realization(I, T))
    throw InternalError(std::string(builder) +
                        ": constructed matrix fails verification");
}

}  // namespace detail

// Explicit realization of a consistent beige skew mirror: last two rows and
// columns solid beige, the interior a realization of the 1-color skew
// instance x_i = i - alpha_i, y_i = i - beta_i.
inline ColorMatrix realize_bsm(const BitVec& alpha, const BitVec& beta) {
  if (!bsm_consistent(alpha, beta))
    throw ArgumentError("realize_bsm: instance is not consistent");
  const std::size_t n = alpha.size();
  ColorMatrix T(n + 2, Palette::abc());
  for (std::size_t i = 0; i < n + 2; ++i) {
    for (std::size_t j = 0; j < n + 2; ++j)
      if (i >= n || j >= n) T.set_color(i, j, detail::kBeige);
  }
  auto [x, y] = skew_instance(alpha, beta);
  Matrix01 interior = reconstruct01(x, y);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (interior.at(i, j)) T.set_color(i, j, detail::kBeige);
  detail::assert_realizes(make_bsm(alpha, beta), T, "realize_bsm");
  return T;
}

// Explicit realization of a consistent azure mirror. The forced beige cells
// sit in the last row/column (where delta/gamma are 1) and the bottom-right
// 2x2 corner; azure fills the rest of the screens and an interior skew
// realization with x_i = i - (1-gamma_i), y_i = i - (1-delta_i).
inline ColorMatrix realize_asm(const BitVec& gamma, const BitVec& delta,
                               int K) {
  if (!asm_consistent(gamma, delta, K))
    throw ArgumentError("realize_asm: instance is not consistent");
  const std::size_t n = gamma.size();
  ColorMatrix T(n + 2, Palette::abc());
  for (std::size_t i = 0; i < n; ++i) {
    T.set_color(i, n + 1, gamma[i] ? detail::kBeige : detail::kAzure);
    T.set_color(n + 1, i, delta[i] ? detail::kBeige : detail::kAzure);
  }
  T.set_color(n, n, detail::kBeige);
  T.set_color(n, n + 1, detail::kBeige);
  T.set_color(n + 1, n, detail::kBeige);
  T.set_color(n + 1, n + 1, detail::kBeige);

  auto [x, y] = skew_instance(complement(gamma), complement(delta));
  Matrix01 interior = reconstruct01(x, y);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (interior.at(i, j)) T.set_color(i, j, detail::kAzure);
  detail::assert_realizes(make_asm(gamma, delta, K), T, "realize_asm");
  return T;
}

// Explicit realization of a consistent edge verifier EV(gamma, rev gamma, e).
// The azure/beige part is the (unique) azure-mirror realization, whose
// interior is the perfect-mirror pattern; the four cyan atoms go to cells
// that pattern leaves empty, chosen by which endpoint of e is in the
// encoded vertex set.
inline ColorMatrix realize_ev(const BitVec& gamma, Edge e, int K) {
  const int n = static_cast<int>(gamma.size());
  detail::require_edge_in_range(e, n);
  if (!ev_consistent(gamma, e, K))
    throw ArgumentError("realize_ev: instance is not consistent");
  ColorMatrix T = realize_asm(gamma, reverse(gamma), K);

  const int u = e.u, v = e.v;
  // 1-based cell positions from the case analysis; all must be holes.
  std::vector<std::pair<int, int>> cyan;
  if (gamma[static_cast<std::size_t>(u - 1)] == 0) {
    cyan = {{u, n - u + 1}, {u, n - v + 1}, {v, n + 1}, {n + 1, n - v + 1}};
  } else {
    cyan = {{v, n - v + 1}, {u, n - v + 1}, {u, n + 1}, {n + 1, n - u + 1}};
  }
  for (auto [i, j] : cyan) {
    if (!T.is_hole(static_cast<std::size_t>(i - 1),
                   static_cast<std::size_t>(j - 1)))
      throw InternalError("realize_ev: cyan target cell is occupied");
    T.set_color(static_cast<std::size_t>(i - 1),
                static_cast<std::size_t>(j - 1), detail::kCyan);
  }
  detail::assert_realizes(make_ev(gamma, reverse(gamma), e, K), T,
                          "realize_ev");
  return T;
}

}  // namespace ccp
