#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "ccp/binmat.hpp"
#include "ccp/errors.hpp"
#include "ccp/instance.hpp"

namespace ccp {

// Node budgets make verdicts reproducible; the wall-clock cap is an
// optional extra guard and is off by default.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> max_time;
};

enum class SolveStatus { Consistent, Inconsistent, BudgetExceeded };

struct SolveVerdict {
  SolveStatus status = SolveStatus::Inconsistent;
  std::optional<ColorMatrix> witness;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

// Dinic max-flow on a small dense bipartite network.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count)
      : head_(static_cast<std::size_t>(node_count), -1),
        level_(static_cast<std::size_t>(node_count)),
        iter_(static_cast<std::size_t>(node_count)) {}

  void add_edge(int from, int to, long long capacity) {
    edges_.push_back({to, head_[static_cast<std::size_t>(from)], capacity});
    head_[static_cast<std::size_t>(from)] =
        static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(edges_.size()) - 1;
  }

  long long max_flow(int source, int sink) {
    long long flow = 0;
    while (bfs(source, sink)) {
      iter_ = head_;
      while (long long pushed =
                 dfs(source, sink, std::numeric_limits<long long>::max()))
        flow += pushed;
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    long long capacity;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e != -1;
           e = edges_[static_cast<std::size_t>(e)].next) {
        const Edge& edge = edges_[static_cast<std::size_t>(e)];
        if (edge.capacity > 0 && level_[static_cast<std::size_t>(edge.to)] < 0) {
          level_[static_cast<std::size_t>(edge.to)] =
              level_[static_cast<std::size_t>(u)] + 1;
          queue.push(edge.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  long long dfs(int u, int sink, long long limit) {
    if (u == sink) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e != -1;
         e = edges_[static_cast<std::size_t>(e)].next) {
      Edge& edge = edges_[static_cast<std::size_t>(e)];
      if (edge.capacity <= 0 ||
          level_[static_cast<std::size_t>(edge.to)] !=
              level_[static_cast<std::size_t>(u)] + 1)
        continue;
      long long pushed =
          dfs(edge.to, sink, std::min(limit, edge.capacity));
      if (pushed > 0) {
        edge.capacity -= pushed;
        edges_[static_cast<std::size_t>(e ^ 1)].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace detail

// 1-color consistency by maximum flow: source -> row i (capacity x_i),
// row i -> column j (capacity 1), column j -> sink (capacity y_j).
// Consistent iff max flow saturates both total sums. An independent route
// to the same predicate as consistent01.
inline bool flow_consistent01(const SumVector& x, const SumVector& y) {
  if (x.size() != y.size()) throw ArgumentError("flow_consistent01: |x| != |y|");
  const int p = static_cast<int>(x.size());
  long long sx = std::accumulate(x.values().begin(), x.values().end(), 0LL);
  long long sy = std::accumulate(y.values().begin(), y.values().end(), 0LL);
  if (sx != sy) return false;
  if (p == 0) return true;

  const int source = 0, sink = 2 * p + 1;
  detail::MaxFlow net(2 * p + 2);
  for (int i = 0; i < p; ++i)
    net.add_edge(source, 1 + i, x[static_cast<std::size_t>(i)]);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) net.add_edge(1 + i, 1 + p + j, 1);
  for (int j = 0; j < p; ++j)
    net.add_edge(1 + p + j, sink, y[static_cast<std::size_t>(j)]);
  return net.max_flow(source, sink) == sx;
}

namespace detail {

// Depth-first cell-by-cell search for realizations of a CcpInstance.
//
// Cells are assigned in row-major order; at each cell the candidate symbols
// are tried as hole first, then the colors in palette order, so complete
// matrices are emitted in canonical (row-major lexicographic) order.
// Pruning: per-cell row/column residual-capacity bounds, plus a
// Gale-Ryser feasibility test applied per color to the residual column
// sums after each completed row.
class CcpSearcher {
 public:
  CcpSearcher(const CcpInstance& instance, SearchBudget budget)
      : I_(instance),
        budget_(budget),
        L_(static_cast<int>(instance.size())),
        C_(static_cast<int>(instance.palette().count())),
        start_(std::chrono::steady_clock::now()) {}

  // Emits every realization (in canonical order) until emit returns false,
  // the space is exhausted, or the budget runs out.
  void run(const std::function<bool(const ColorMatrix&)>& emit) {
    emit_ = &emit;
    budget_hit_ = false;
    nodes_ = 0;

    if (!totals_feasible()) return;

    cells_.assign(static_cast<std::size_t>(L_) * static_cast<std::size_t>(L_),
                  0);
    row_residual_.assign(static_cast<std::size_t>(C_), {});
    col_residual_.assign(static_cast<std::size_t>(C_), {});
    for (int a = 0; a < C_; ++a) {
      row_residual_[static_cast<std::size_t>(a)] =
          I_.row_sums(static_cast<std::size_t>(a));
      col_residual_[static_cast<std::size_t>(a)] =
          I_.col_sums(static_cast<std::size_t>(a));
    }
    col_total_.assign(static_cast<std::size_t>(L_), 0);
    for (int j = 0; j < L_; ++j)
      for (int a = 0; a < C_; ++a)
        col_total_[static_cast<std::size_t>(j)] +=
            col_residual_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
    precompute_future_rows();

    dfs(0, 0);
  }

  bool budget_hit() const { return budget_hit_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Instances whose per-line demands cannot fit, or whose per-color row and
  // column totals differ, have no realizations at all.
  bool totals_feasible() const {
    for (int a = 0; a < C_; ++a) {
      long long r = std::accumulate(
          I_.row_sums(static_cast<std::size_t>(a)).begin(),
          I_.row_sums(static_cast<std::size_t>(a)).end(), 0LL);
      long long s = std::accumulate(
          I_.col_sums(static_cast<std::size_t>(a)).begin(),
          I_.col_sums(static_cast<std::size_t>(a)).end(), 0LL);
      if (r != s) return false;
    }
    for (int i = 0; i < L_; ++i) {
      long long r = 0, s = 0;
      for (int a = 0; a < C_; ++a) {
        r += I_.row_sum(static_cast<std::size_t>(a),
                        static_cast<std::size_t>(i));
        s += I_.col_sum(static_cast<std::size_t>(a),
                        static_cast<std::size_t>(i));
      }
      if (r > L_ || s > L_) return false;
    }
    return true;
  }

  // future_prefix_[a][r][k] = sum of the k largest row sums of color a among
  // rows strictly below r. Fixed for the whole search.
  void precompute_future_rows() {
    future_prefix_.assign(
        static_cast<std::size_t>(C_),
        std::vector<std::vector<long long>>(static_cast<std::size_t>(L_)));
    for (int a = 0; a < C_; ++a) {
      for (int r = 0; r < L_; ++r) {
        std::vector<int> rest(
            I_.row_sums(static_cast<std::size_t>(a)).begin() + r + 1,
            I_.row_sums(static_cast<std::size_t>(a)).end());
        std::sort(rest.begin(), rest.end(), std::greater<int>());
        std::vector<long long> prefix(rest.size() + 1, 0);
        for (std::size_t k = 0; k < rest.size(); ++k)
          prefix[k + 1] = prefix[k] + rest[k];
        future_prefix_[static_cast<std::size_t>(a)]
                      [static_cast<std::size_t>(r)] = std::move(prefix);
      }
    }
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_time && (nodes_ & 1023) == 0) {
      auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed >= *budget_.max_time) return true;
    }
    return false;
  }

  // Gale-Ryser feasibility of completing color a below row r: the k largest
  // remaining row demands must fit under sum_j min(residual_j, k).
  bool gale_ryser_ok(int a, int r) {
    const auto& prefix =
        future_prefix_[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)];
    const int q = static_cast<int>(prefix.size()) - 1;
    if (q == 0) return true;
    const auto& cols = col_residual_[static_cast<std::size_t>(a)];
    // geq_[k] = number of columns with residual >= k.
    geq_.assign(static_cast<std::size_t>(L_) + 2, 0);
    for (int j = 0; j < L_; ++j) {
      int v = cols[static_cast<std::size_t>(j)];
      if (v > 0) ++geq_[static_cast<std::size_t>(std::min(v, L_))];
    }
    for (int v = L_ - 1; v >= 1; --v)
      geq_[static_cast<std::size_t>(v)] += geq_[static_cast<std::size_t>(v) + 1];
    long long sum_min = 0;
    for (int k = 1; k <= q; ++k) {
      sum_min += geq_[static_cast<std::size_t>(k)];
      if (prefix[static_cast<std::size_t>(k)] > sum_min) return false;
    }
    return true;
  }

  bool row_complete_ok(int r) {
    if (r + 1 >= L_) return true;
    for (int a = 0; a < C_; ++a)
      if (!gale_ryser_ok(a, r)) return false;
    return true;
  }

  // Returns false to unwind the whole search (emit asked to stop, or the
  // budget ran out); true means keep exploring siblings.
  bool dfs(int r, int c) {
    if (r == L_) {
      ColorMatrix T(static_cast<std::size_t>(L_), I_.palette());
      for (int i = 0; i < L_; ++i)
        for (int j = 0; j < L_; ++j) {
          auto cell = cells_[static_cast<std::size_t>(i * L_ + j)];
          if (cell > 0)
            T.set_color(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                        static_cast<std::size_t>(cell - 1));
        }
      return (*emit_)(T);
    }
    if (c == L_) {
      if (!row_complete_ok(r)) return true;
      return dfs(r + 1, 0);
    }

    const int cells_left_after = L_ - c - 1;
    const int rows_below = L_ - r - 1;
    int row_need = 0;
    for (int a = 0; a < C_; ++a)
      row_need +=
          row_residual_[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)];

    // Hole first: canonical order.
    if (row_need <= cells_left_after &&
        col_total_[static_cast<std::size_t>(c)] <= rows_below) {
      ++nodes_;
      if (out_of_budget()) {
        budget_hit_ = true;
        return false;
      }
      cells_[static_cast<std::size_t>(r * L_ + c)] = 0;
      if (!dfs(r, c + 1)) return false;
    }

    for (int a = 0; a < C_; ++a) {
      auto& rres =
          row_residual_[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)];
      auto& cres =
          col_residual_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
      if (rres <= 0 || cres <= 0) continue;
      if (col_total_[static_cast<std::size_t>(c)] - 1 > rows_below) continue;
      ++nodes_;
      if (out_of_budget()) {
        budget_hit_ = true;
        return false;
      }
      cells_[static_cast<std::size_t>(r * L_ + c)] =
          static_cast<std::uint8_t>(a + 1);
      --rres;
      --cres;
      --col_total_[static_cast<std::size_t>(c)];
      bool keep_going = dfs(r, c + 1);
      ++rres;
      ++cres;
      ++col_total_[static_cast<std::size_t>(c)];
      if (!keep_going) return false;
    }
    return true;
  }

  const CcpInstance& I_;
  SearchBudget budget_;
  int L_;
  int C_;
  std::chrono::steady_clock::time_point start_;

  const std::function<bool(const ColorMatrix&)>* emit_ = nullptr;
  bool budget_hit_ = false;
  std::uint64_t nodes_ = 0;

  std::vector<std::uint8_t> cells_;
  std::vector<std::vector<int>> row_residual_;
  std::vector<std::vector<int>> col_residual_;
  std::vector<int> col_total_;
  std::vector<std::vector<std::vector<long long>>> future_prefix_;
  std::vector<int> geq_;
};

}  // namespace detail

// Exhaustive decision oracle. Sound and complete within its budget: a
// Consistent verdict carries a verified witness, an Inconsistent verdict
// means the whole search space was refuted, and running out of budget is a
// verdict of its own, not an error.
inline SolveVerdict is_consistent_exact(const CcpInstance& I,
                                        const SearchBudget& budget = {}) {
  detail::CcpSearcher searcher(I, budget);
  SolveVerdict verdict;
  searcher.run([&](const ColorMatrix& T) {
    verdict.witness = T;
    return false;  // first realization settles the question
  });
  verdict.nodes_explored = searcher.nodes();
  if (verdict.witness)
    verdict.status = SolveStatus::Consistent;
  else if (searcher.budget_hit())
    verdict.status = SolveStatus::BudgetExceeded;
  else
    verdict.status = SolveStatus::Inconsistent;
  return verdict;
}

// All realizations of I, in canonical row-major lexicographic order with
// hole < first color < second color < ..., truncated to limit.
inline std::vector<ColorMatrix> enumerate_realizations(
    const CcpInstance& I, std::size_t limit, const SearchBudget& budget = {}) {
  if (limit < 1) throw ArgumentError("enumerate_realizations: limit must be >= 1");
  detail::CcpSearcher searcher(I, budget);
  std::vector<ColorMatrix> found;
  searcher.run([&](const ColorMatrix& T) {
    found.push_back(T);
    return found.size() < limit;
  });
  if (searcher.budget_hit())
    throw BudgetError(
        "enumerate_realizations: search budget exhausted after " +
            std::to_string(found.size()) + " realizations (list incomplete)",
        found.size());
  return found;
}

}  // namespace ccp
