#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccp/binmat.hpp"
#include "ccp/errors.hpp"

namespace ccp {

// Ordered set of atom types, named by distinct uppercase letters.
// Zero colors is legal (an instance over no atoms).
class Palette {
 public:
  Palette() = default;

  explicit Palette(std::vector<char> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] < 'A' || names_[i] > 'Z')
        throw ValidationError("palette names must be uppercase letters");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == names_[i])
          throw ValidationError(std::string("duplicate palette name '") +
                                names_[i] + "'");
    }
  }

  static Palette abc() { return Palette({'A', 'B', 'C'}); }

  std::size_t count() const { return names_.size(); }
  char name(std::size_t idx) const { return names_.at(idx); }
  const std::vector<char>& names() const { return names_; }

  std::optional<std::size_t> index_of(char name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Palette&) const = default;

 private:
  std::vector<char> names_;
};

// An L x L multi-color instance: per color, a row-sum and a column-sum
// vector of length L. Invariants: sums in [0, L] and, per line, the sums
// over all colors fit into L cells.
class CcpInstance {
 public:
  CcpInstance() = default;

  CcpInstance(std::size_t size, Palette palette)
      : size_(size),
        palette_(std::move(palette)),
        rows_(palette_.count(), std::vector<int>(size, 0)),
        cols_(palette_.count(), std::vector<int>(size, 0)) {}

  CcpInstance(std::size_t size, Palette palette,
              std::vector<std::vector<int>> row_sums,
              std::vector<std::vector<int>> col_sums)
      : size_(size),
        palette_(std::move(palette)),
        rows_(std::move(row_sums)),
        cols_(std::move(col_sums)) {
    validate();
  }

  std::size_t size() const { return size_; }
  const Palette& palette() const { return palette_; }

  int row_sum(std::size_t color, std::size_t i) const {
    return rows_.at(color).at(i);
  }
  int col_sum(std::size_t color, std::size_t j) const {
    return cols_.at(color).at(j);
  }
  const std::vector<int>& row_sums(std::size_t color) const {
    return rows_.at(color);
  }
  const std::vector<int>& col_sums(std::size_t color) const {
    return cols_.at(color);
  }

  void set_row_sum(std::size_t color, std::size_t i, int v) {
    check_value(v);
    rows_.at(color).at(i) = v;
  }
  void set_col_sum(std::size_t color, std::size_t j, int v) {
    check_value(v);
    cols_.at(color).at(j) = v;
  }

  // Full invariant check; generators and parsers call this before handing
  // an instance out.
  void validate() const {
    if (rows_.size() != palette_.count() || cols_.size() != palette_.count())
      throw ValidationError("instance: one sum vector required per color");
    for (std::size_t c = 0; c < palette_.count(); ++c) {
      if (rows_[c].size() != size_ || cols_[c].size() != size_)
        throw ValidationError("instance: sum vector length must equal size");
      for (int v : rows_[c]) check_value(v);
      for (int v : cols_[c]) check_value(v);
    }
    for (std::size_t i = 0; i < size_; ++i) {
      long long r = 0, s = 0;
      for (std::size_t c = 0; c < palette_.count(); ++c) {
        r += rows_[c][i];
        s += cols_[c][i];
      }
      if (r > static_cast<long long>(size_))
        throw ValidationError("instance: row " + std::to_string(i + 1) +
                              " demands more atoms than it has cells");
      if (s > static_cast<long long>(size_))
        throw ValidationError("instance: column " + std::to_string(i + 1) +
                              " demands more atoms than it has cells");
    }
  }

  bool operator==(const CcpInstance&) const = default;

 private:
  void check_value(int v) const {
    if (v < 0) throw ValidationError("instance: negative sum");
    if (v > static_cast<int>(size_))
      throw ValidationError("instance: sum exceeds matrix size");
  }

  std::size_t size_ = 0;
  Palette palette_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> cols_;
};

// Square matrix over palette colors plus holes. Cells are encoded with
// 0 = hole and k+1 = palette color k, so the numeric order of cells is the
// canonical hole < A < B < C order.
class ColorMatrix {
 public:
  using Cell = std::uint8_t;
  static constexpr Cell hole = 0;

  ColorMatrix() = default;
  ColorMatrix(std::size_t size, Palette palette)
      : size_(size), palette_(std::move(palette)), cells_(size * size, hole) {}

  std::size_t size() const { return size_; }
  const Palette& palette() const { return palette_; }

  Cell cell(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }
  bool is_hole(std::size_t i, std::size_t j) const {
    return cell(i, j) == hole;
  }
  std::optional<std::size_t> color_index(std::size_t i, std::size_t j) const {
    Cell c = cell(i, j);
    if (c == hole) return std::nullopt;
    return static_cast<std::size_t>(c - 1);
  }

  void set_hole(std::size_t i, std::size_t j) { cells_[i * size_ + j] = hole; }
  void set_color(std::size_t i, std::size_t j, std::size_t color) {
    if (color >= palette_.count())
      throw ArgumentError("ColorMatrix: color index out of range");
    cells_[i * size_ + j] = static_cast<Cell>(color + 1);
  }

  const std::vector<Cell>& cells() const { return cells_; }

  bool operator==(const ColorMatrix&) const = default;

 private:
  std::size_t size_ = 0;
  Palette palette_;
  std::vector<Cell> cells_;
};

// Row-major lexicographic order with hole < first color < second color < ...
inline bool canonical_less(const ColorMatrix& a, const ColorMatrix& b) {
  return a.cells() < b.cells();
}

// Does T have exactly the per-color row and column counts that I demands?
inline bool verify_realization(const CcpInstance& I, const ColorMatrix& T) {
  if (T.size() != I.size())
    throw ArgumentError("verify_realization: dimension mismatch");
  if (!(T.palette() == I.palette()))
    throw ArgumentError("verify_realization: palette mismatch");
  const std::size_t L = I.size();
  const std::size_t c = I.palette().count();
  std::vector<std::vector<int>> row_count(c, std::vector<int>(L, 0));
  std::vector<std::vector<int>> col_count(c, std::vector<int>(L, 0));
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      if (auto k = T.color_index(i, j)) {
        ++row_count[*k][i];
        ++col_count[*k][j];
      }
    }
  }
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t i = 0; i < L; ++i) {
      if (row_count[k][i] != I.row_sum(k, i)) return false;
      if (col_count[k][i] != I.col_sum(k, i)) return false;
    }
  }
  return true;
}

// Restriction of I to a subset of its colors, in the order given.
inline CcpInstance restrict(const CcpInstance& I,
                            const std::vector<char>& subset) {
  std::vector<std::vector<int>> rows, cols;
  rows.reserve(subset.size());
  cols.reserve(subset.size());
  for (char name : subset) {
    auto idx = I.palette().index_of(name);
    if (!idx)
      throw ArgumentError(std::string("restrict: color '") + name +
                          "' is not in the palette");
    rows.push_back(I.row_sums(*idx));
    cols.push_back(I.col_sums(*idx));
  }
  return CcpInstance(I.size(), Palette(subset), std::move(rows),
                     std::move(cols));
}

// Bridge to the 1-color world: an instance whose single color carries the
// given sums.
inline CcpInstance one_color_instance(const SumVector& x, const SumVector& y,
                                      char name = 'A') {
  if (x.size() != y.size())
    throw ArgumentError("one_color_instance: |x| != |y|");
  return CcpInstance(x.size(), Palette({name}), {x.values()}, {y.values()});
}

// 0-1 view of one color of a ColorMatrix.
inline Matrix01 to_matrix01(const ColorMatrix& T, std::size_t color) {
  Matrix01 M(T.size());
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j)
      if (T.color_index(i, j) == color) M.set(i, j, 1);
  return M;
}

}  // namespace ccp
