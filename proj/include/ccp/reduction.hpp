#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ccp/bitvec.hpp"
#include "ccp/errors.hpp"
#include "ccp/gadgets.hpp"
#include "ccp/instance.hpp"
#include "ccp/io.hpp"

namespace ccp {

// Undirected graph on vertices 1..n with at least one vertex and one edge.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw ValidationError("graph: need at least one vertex");
    if (edges_.empty()) throw ValidationError("graph: need at least one edge");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.v > n_)
        throw ValidationError("graph: edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") exceeds vertex count " +
                              std::to_string(n_));
      for (std::size_t j = 0; j < i; ++j)
        if (edges_[j] == e)
          throw ValidationError("graph: duplicate edge (" +
                                std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// DIMACS-flavoured graph file:
//   c <comment>
//   p vc <n> <m>
//   e <u> <v>          (m lines, 1 <= u < v <= n)
// Edge order in the file is preserved.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  int n = -1, m = -1;
  std::vector<Edge> edges;
  for (const auto& line : lines) {
    auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0].text == "c") continue;
    if (tokens[0].text == "p") {
      if (n >= 0)
        throw ParseError(line.number, tokens[0].column,
                         "duplicate problem line");
      if (tokens.size() != 4 || tokens[1].text != "vc")
        throw ParseError(line.number, tokens[0].column,
                         "expected 'p vc <n> <m>'");
      n = detail::parse_int(line.number, tokens[2]);
      m = detail::parse_int(line.number, tokens[3]);
      if (n < 1 || m < 1)
        throw ValidationError("graph: n and m must be at least 1");
      continue;
    }
    if (tokens[0].text == "e") {
      if (n < 0)
        throw ParseError(line.number, tokens[0].column,
                         "edge before problem line");
      if (tokens.size() != 3)
        throw ParseError(line.number, tokens[0].column, "expected 'e <u> <v>'");
      int u = detail::parse_int(line.number, tokens[1]);
      int v = detail::parse_int(line.number, tokens[2]);
      edges.emplace_back(u, v);  // ValidationError on u >= v or u < 1
      continue;
    }
    throw ParseError(line.number, tokens[0].column,
                     "unknown line type '" + tokens[0].text + "'");
  }
  if (n < 0) throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                              "missing 'p vc' problem line");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

// The minorization minimum among length-n vectors of total sum n-K:
// K zeros followed by n-K ones.
inline BitVec pi_vector(int n, int K) {
  if (n < 0 || K < 0 || K > n) throw ArgumentError("pi_vector: need 0 <= K <= n");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < K; ++i) bits[static_cast<std::size_t>(i)] = 0;
  return BitVec(std::move(bits));
}

// Block geometry of the reduction: (mJ+1)^2 blocks of side n+2, with
// J = K(n-K)+1 and L = (mJ+1)(n+2). Block rows and columns are indexed
// 0..mJ top-down / left-right; offsets within a block are 1-based.
struct ReductionGeometry {
  int n = 0;
  int m = 0;
  int K = 0;
  int J = 0;
  int L = 0;

  static ReductionGeometry make(int n, int m, int K) {
    if (n < 1 || m < 1) throw ArgumentError("reduction: need n, m >= 1");
    if (K < 0 || K > n) throw ArgumentError("reduction: need 0 <= K <= n");
    ReductionGeometry g;
    g.n = n;
    g.m = m;
    g.K = K;
    long long J = static_cast<long long>(K) * (n - K) + 1;
    long long L = (static_cast<long long>(m) * J + 1) * (n + 2);
    if (L > 1'000'000'000LL)
      throw ArgumentError("reduction: instance size L does not fit");
    g.J = static_cast<int>(J);
    g.L = static_cast<int>(L);
    return g;
  }

  static ReductionGeometry make(const Graph& G, int K) {
    return make(G.vertex_count(), G.edge_count(), K);
  }

  int side() const { return n + 2; }
  int mirrors() const { return m * J; }       // mJ
  int blocks() const { return m * J + 1; }    // mJ+1

  // 1-based offset within block -> 0-based global index.
  int global(int block, int offset) const {
    return block * side() + offset - 1;
  }
  int block_of(int global_index) const { return global_index / side(); }
  int offset_of(int global_index) const { return global_index % side() + 1; }
};

// The Vertex Cover -> 3-CCP reduction instance. Azure and beige sums are
// symmetric (row vector equals column vector); cyan row sums sit in block
// row a = jm+k for edge e_k, paired with cyan column sums in block column
// mJ-1-a.
inline CcpInstance reduce(const Graph& G, int K) {
  const ReductionGeometry g = ReductionGeometry::make(G, K);
  const int n = g.n, mJ = g.mirrors(), side = g.side();
  CcpInstance I(static_cast<std::size_t>(g.L), Palette::abc());

  for (int a = 0; a <= mJ; ++a) {
    for (int i = 1; i <= side; ++i) {
      const std::size_t idx = static_cast<std::size_t>(g.global(a, i));
      if (a != mJ) {
        int azure = (mJ - a - 1) * side;
        if (i <= n)
          azure += i;
        else if (i == n + 2)
          azure += K;
        int beige = a * side;
        if (i <= n)
          beige += i + 2;
        else if (i == n + 1)
          beige += n + 4;
        else
          beige += 2 * n + 4 - K;
        I.set_row_sum(detail::kAzure, idx, azure);
        I.set_col_sum(detail::kAzure, idx, azure);
        I.set_row_sum(detail::kBeige, idx, beige);
        I.set_col_sum(detail::kBeige, idx, beige);
      } else {
        int beige = a * side;
        if (i <= K)
          beige += i + 2;
        else if (i <= n)
          beige += i + 1;
        else
          beige += n + 2;
        I.set_row_sum(detail::kBeige, idx, beige);
        I.set_col_sum(detail::kBeige, idx, beige);
      }
    }
  }

  for (int j = 0; j < g.J; ++j) {
    for (int k = 0; k < g.m; ++k) {
      const int a = j * g.m + k;
      const int b = mJ - 1 - a;
      const Edge& e = G.edges()[static_cast<std::size_t>(k)];
      I.set_row_sum(detail::kCyan, static_cast<std::size_t>(g.global(a, e.u)),
                    2);
      I.set_row_sum(detail::kCyan, static_cast<std::size_t>(g.global(a, e.v)),
                    1);
      I.set_row_sum(detail::kCyan,
                    static_cast<std::size_t>(g.global(a, n + 1)), 1);
      I.set_col_sum(detail::kCyan,
                    static_cast<std::size_t>(g.global(b, n - e.u + 1)), 1);
      I.set_col_sum(detail::kCyan,
                    static_cast<std::size_t>(g.global(b, n - e.v + 1)), 2);
      I.set_col_sum(detail::kCyan,
                    static_cast<std::size_t>(g.global(b, n + 1)), 1);
    }
  }

  I.validate();
  return I;
}

namespace detail {

inline void paste_block(ColorMatrix& T, const ReductionGeometry& g,
                        int block_row, int block_col, const ColorMatrix& part) {
  const int side = g.side();
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      auto cell = part.cell(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j));
      const std::size_t gi =
          static_cast<std::size_t>(block_row * side + i);
      const std::size_t gj =
          static_cast<std::size_t>(block_col * side + j);
      if (cell == ColorMatrix::hole)
        T.set_hole(gi, gj);
      else
        T.set_color(gi, gj, static_cast<std::size_t>(cell - 1));
    }
  }
}

inline void fill_block(ColorMatrix& T, const ReductionGeometry& g,
                       int block_row, int block_col, std::size_t color) {
  const int side = g.side();
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      T.set_color(static_cast<std::size_t>(block_row * side + i),
                  static_cast<std::size_t>(block_col * side + j), color);
}

}  // namespace detail

// The constructive direction: given a vertex cover U of size K, assemble
// the form in which every screen vector encodes U. Upper-left blocks are
// solid azure, lower-right solid beige, the side anti-diagonal carries the
// edge verifiers and the main anti-diagonal the beige skew mirrors.
inline ColorMatrix build_cover_realization(const Graph& G, int K,
                                           const std::vector<int>& cover) {
  const ReductionGeometry g = ReductionGeometry::make(G, K);
  std::set<int> U(cover.begin(), cover.end());
  if (static_cast<int>(U.size()) != K ||
      U.size() != cover.size())
    throw ArgumentError("build_cover_realization: cover must hold exactly " +
                        std::to_string(K) + " distinct vertices");
  for (int u : U)
    if (u < 1 || u > g.n)
      throw ArgumentError("build_cover_realization: vertex " +
                          std::to_string(u) + " out of range");
  for (const Edge& e : G.edges())
    if (!U.count(e.u) && !U.count(e.v))
      throw ArgumentError("build_cover_realization: edge (" +
                          std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") is not covered");

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.n), 1);
  for (int u : U) bits[static_cast<std::size_t>(u - 1)] = 0;
  const BitVec gamma(std::move(bits));
  const BitVec pi = pi_vector(g.n, K);
  const int mJ = g.mirrors();

  ColorMatrix T(static_cast<std::size_t>(g.L), Palette::abc());
  for (int a = 0; a <= mJ; ++a) {
    for (int b = 0; b <= mJ; ++b) {
      const int s = a + b;
      if (s <= mJ - 2) {
        detail::fill_block(T, g, a, b, detail::kAzure);
      } else if (s == mJ - 1) {
        const Edge& e = G.edges()[static_cast<std::size_t>(a % g.m)];
        detail::paste_block(T, g, a, b, realize_ev(gamma, e, K));
      } else if (s == mJ) {
        const BitVec& alpha = (b == 0) ? pi : gamma;
        const BitVec beta = (b == mJ) ? pi : reverse(gamma);
        detail::paste_block(T, g, a, b, realize_bsm(alpha, beta));
      } else {
        detail::fill_block(T, g, a, b, detail::kBeige);
      }
    }
  }
  if (!verify_realization(reduce(G, K), T))
    throw InternalError("build_cover_realization: assembly fails verification");
  return T;
}

// Per-clause result of checking the azure/beige block structure that every
// realization of the restricted instance must have, plus the screen vectors
// read off the side blocks.
struct StructureReport {
  bool a_frame_azure = false;      // upper-left blocks solid azure
  bool b_frame_beige = false;      // lower-right blocks solid beige
  bool diagonal_azure_free = false;  // main anti-diagonal has no azure
  bool corners_beige = false;      // side-block 2x2 corners solid beige
  bool mirrors_beige_free = false;  // side-block n x n mirrors have no beige
  bool gutters_empty = false;      // gutter row/column n+1 free of A and B
  bool screens_filled = false;     // screen row/column n+2 all A or B
  bool chain_ok = false;  // pi <= rev b^0 <= a^0 <= ... <= a^{mJ-1} <= rev pi
  std::vector<BitVec> alpha;  // v-screen vectors, one per side block
  std::vector<BitVec> beta;   // h-screen vectors, one per side block

  bool pass() const {
    return a_frame_azure && b_frame_beige && diagonal_azure_free &&
           corners_beige && mirrors_beige_free && gutters_empty &&
           screens_filled && chain_ok;
  }
};

inline StructureReport check_ab_structure(const ColorMatrix& T,
                                          const ReductionGeometry& g) {
  if (static_cast<int>(T.size()) != g.L)
    throw ArgumentError("check_ab_structure: matrix dimension != L");
  const auto azure_idx = T.palette().index_of('A');
  const auto beige_idx = T.palette().index_of('B');
  auto is_azure = [&](int i, int j) {
    return azure_idx && T.color_index(static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(j)) == azure_idx;
  };
  auto is_beige = [&](int i, int j) {
    return beige_idx && T.color_index(static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(j)) == beige_idx;
  };

  const int mJ = g.mirrors(), n = g.n, side = g.side();
  StructureReport rep;
  rep.a_frame_azure = true;
  rep.b_frame_beige = true;
  rep.diagonal_azure_free = true;
  rep.corners_beige = true;
  rep.mirrors_beige_free = true;
  rep.gutters_empty = true;
  rep.screens_filled = true;
  rep.alpha.assign(static_cast<std::size_t>(mJ), BitVec());
  rep.beta.assign(static_cast<std::size_t>(mJ), BitVec());

  for (int a = 0; a <= mJ; ++a) {
    for (int b = 0; b <= mJ; ++b) {
      const int s = a + b;
      const int base_i = a * side, base_j = b * side;
      if (s <= mJ - 2) {
        for (int i = 0; i < side; ++i)
          for (int j = 0; j < side; ++j)
            if (!is_azure(base_i + i, base_j + j)) rep.a_frame_azure = false;
      } else if (s >= mJ + 1) {
        for (int i = 0; i < side; ++i)
          for (int j = 0; j < side; ++j)
            if (!is_beige(base_i + i, base_j + j)) rep.b_frame_beige = false;
      } else if (s == mJ) {
        for (int i = 0; i < side; ++i)
          for (int j = 0; j < side; ++j)
            if (is_azure(base_i + i, base_j + j))
              rep.diagonal_azure_free = false;
      } else {  // s == mJ-1: side block b
        std::vector<std::uint8_t> abits(static_cast<std::size_t>(n), 0);
        std::vector<std::uint8_t> bbits(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j)
            if (is_beige(base_i + i, base_j + j))
              rep.mirrors_beige_free = false;
          // v-screen (column n+2) and h-screen (row n+2)
          const bool v_beige = is_beige(base_i + i, base_j + n + 1);
          const bool v_azure = is_azure(base_i + i, base_j + n + 1);
          if (!v_beige && !v_azure) rep.screens_filled = false;
          abits[static_cast<std::size_t>(i)] = v_beige ? 1 : 0;
          const bool h_beige = is_beige(base_i + n + 1, base_j + i);
          const bool h_azure = is_azure(base_i + n + 1, base_j + i);
          if (!h_beige && !h_azure) rep.screens_filled = false;
          bbits[static_cast<std::size_t>(i)] = h_beige ? 1 : 0;
          // gutters (column/row n+1)
          if (is_beige(base_i + i, base_j + n) || is_azure(base_i + i, base_j + n))
            rep.gutters_empty = false;
          if (is_beige(base_i + n, base_j + i) || is_azure(base_i + n, base_j + i))
            rep.gutters_empty = false;
        }
        for (int i = n; i < side; ++i)
          for (int j = n; j < side; ++j)
            if (!is_beige(base_i + i, base_j + j)) rep.corners_beige = false;
        rep.alpha[static_cast<std::size_t>(b)] = BitVec(std::move(abits));
        rep.beta[static_cast<std::size_t>(b)] = BitVec(std::move(bbits));
      }
    }
  }

  const BitVec pi = pi_vector(n, g.K);
  rep.chain_ok = true;
  BitVec prev = pi;
  for (int b = 0; b < mJ; ++b) {
    const BitVec rb = reverse(rep.beta[static_cast<std::size_t>(b)]);
    if (!minorizes(prev, rb) ||
        !minorizes(rb, rep.alpha[static_cast<std::size_t>(b)]))
      rep.chain_ok = false;
    prev = rep.alpha[static_cast<std::size_t>(b)];
  }
  if (!minorizes(prev, reverse(pi))) rep.chain_ok = false;
  return rep;
}

// The extraction direction: read the screen vectors, find a segment on
// which they are constant (one exists in every valid realization, by the
// chain-depth bound), and decode its vertex set.
inline std::vector<int> extract_cover(const Graph& G, int K,
                                      const ColorMatrix& T) {
  const ReductionGeometry g = ReductionGeometry::make(G, K);
  if (!verify_realization(reduce(G, K), T))
    throw ArgumentError(
        "extract_cover: matrix is not a realization of the reduction "
        "instance");
  StructureReport rep = check_ab_structure(T, g);
  if (!rep.pass())
    throw InternalError("extract_cover: verified realization fails structure");

  const BitVec pi = pi_vector(g.n, K);
  const int mJ = g.mirrors();
  auto beta_at = [&](int idx) -> const BitVec& {
    return idx == mJ ? pi : rep.beta[static_cast<std::size_t>(idx)];
  };
  for (int seg = 0; seg < g.J; ++seg) {
    if (!(beta_at(seg * g.m) == beta_at((seg + 1) * g.m))) continue;
    const BitVec& gamma = rep.alpha[static_cast<std::size_t>(seg * g.m)];
    std::vector<int> cover;
    for (int u = 1; u <= g.n; ++u)
      if (gamma[static_cast<std::size_t>(u - 1)] == 0) cover.push_back(u);
    if (static_cast<int>(cover.size()) != K)
      throw InternalError("extract_cover: decoded set has wrong size");
    std::set<int> U(cover.begin(), cover.end());
    for (const Edge& e : G.edges())
      if (!U.count(e.u) && !U.count(e.v))
        throw InternalError("extract_cover: decoded set misses an edge");
    return cover;
  }
  throw InternalError("extract_cover: no constant segment found");
}

}  // namespace ccp
