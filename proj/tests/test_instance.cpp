#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "ccp/gadgets.hpp"
#include "ccp/instance.hpp"
#include "ccp/io.hpp"

using ccp::CcpInstance;
using ccp::ColorMatrix;
using ccp::Palette;

namespace {

std::string golden_path(const std::string& name) {
  return std::string(CCP_TESTS_DIR) + "/golden/" + name;
}

CcpInstance random_instance(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(0, 6);
  std::uniform_int_distribution<int> colors_dist(0, 3);
  const int L = size_dist(rng);
  const int c = colors_dist(rng);
  std::vector<char> names;
  for (int k = 0; k < c; ++k) names.push_back(static_cast<char>('A' + k));
  CcpInstance I(static_cast<std::size_t>(L), Palette(names));
  // Respect per-line capacity by splitting L cells among the colors.
  std::uniform_int_distribution<int> val(0, c > 0 ? L / c : 0);
  for (int k = 0; k < c; ++k) {
    for (int i = 0; i < L; ++i) {
      I.set_row_sum(static_cast<std::size_t>(k), static_cast<std::size_t>(i),
                    val(rng));
      I.set_col_sum(static_cast<std::size_t>(k), static_cast<std::size_t>(i),
                    val(rng));
    }
  }
  I.validate();
  return I;
}

ColorMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(0, 8);
  std::uniform_int_distribution<int> colors_dist(0, 3);
  const int L = size_dist(rng);
  const int c = colors_dist(rng);
  std::vector<char> names;
  for (int k = 0; k < c; ++k) names.push_back(static_cast<char>('A' + k));
  ColorMatrix T(static_cast<std::size_t>(L), Palette(names));
  std::uniform_int_distribution<int> cell(0, c);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      int v = cell(rng);
      if (v > 0)
        T.set_color(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                    static_cast<std::size_t>(v - 1));
    }
  return T;
}

}  // namespace

TEST_CASE("palette rules") {
  CHECK_THROWS_AS(Palette({'A', 'A'}), ccp::ValidationError);
  CHECK_THROWS_AS(Palette({'a'}), ccp::ValidationError);
  CHECK(Palette().count() == 0);
  CHECK(Palette::abc().index_of('C') == 2);
  CHECK_FALSE(Palette::abc().index_of('D').has_value());
}

TEST_CASE("instance invariants") {
  CcpInstance I(3, Palette::abc());
  CHECK_THROWS_AS(I.set_row_sum(0, 0, -1), ccp::ValidationError);
  CHECK_THROWS_AS(I.set_row_sum(0, 0, 4), ccp::ValidationError);
  I.set_row_sum(0, 0, 2);
  I.set_row_sum(1, 0, 2);
  CHECK_THROWS_AS(I.validate(), ccp::ValidationError);  // 4 atoms in 3 cells
  I.set_row_sum(1, 0, 1);
  CHECK_NOTHROW(I.validate());
}

TEST_CASE("verification counts atoms per row and column") {
  CcpInstance I(2, Palette({'A', 'B'}));
  I.set_row_sum(0, 0, 1);
  I.set_col_sum(0, 1, 1);
  I.set_row_sum(1, 1, 2);
  I.set_col_sum(1, 0, 1);
  I.set_col_sum(1, 1, 1);
  ColorMatrix T(2, Palette({'A', 'B'}));
  T.set_color(0, 1, 0);
  T.set_color(1, 0, 1);
  T.set_color(1, 1, 1);
  CHECK(ccp::verify_realization(I, T));

  // Moving one atom breaks a row count.
  ColorMatrix bad = T;
  bad.set_hole(0, 1);
  bad.set_color(0, 0, 0);
  CHECK_FALSE(ccp::verify_realization(I, bad));

  ColorMatrix wrong_size(3, Palette({'A', 'B'}));
  CHECK_THROWS_AS(ccp::verify_realization(I, wrong_size), ccp::ArgumentError);
  ColorMatrix wrong_palette(2, Palette::abc());
  CHECK_THROWS_AS(ccp::verify_realization(I, wrong_palette), ccp::ArgumentError);
}

TEST_CASE("all-hole matrix realizes all-zero sums") {
  CcpInstance I(4, Palette::abc());
  ColorMatrix T(4, Palette::abc());
  CHECK(ccp::verify_realization(I, T));
}

TEST_CASE("restriction keeps the chosen colors") {
  CcpInstance ev = ccp::make_ev(ccp::BitVec::parse("010100"),
                                ccp::BitVec::parse("001010"),
                                ccp::Edge(3, 5), 4);
  CcpInstance ab = ccp::restrict(ev, {'A', 'B'});
  CHECK(ab.palette() == Palette({'A', 'B'}));
  CHECK(ab.size() == ev.size());
  CHECK(ab.row_sums(0) == ev.row_sums(0));
  CHECK(ab.col_sums(1) == ev.col_sums(1));

  CHECK(ccp::restrict(ev, {'A', 'B', 'C'}) == ev);
  CcpInstance empty = ccp::restrict(ev, {});
  CHECK(empty.palette().count() == 0);
  ColorMatrix holes(ev.size(), Palette());
  CHECK(ccp::verify_realization(empty, holes));
  CHECK_THROWS_AS(ccp::restrict(ev, {'D'}), ccp::ArgumentError);
}

TEST_CASE("verification is invariant under synchronized row permutation") {
  std::mt19937 rng(5150);
  for (int round = 0; round < 40; ++round) {
    ColorMatrix T = random_matrix(rng);
    const std::size_t L = T.size();
    const std::size_t c = T.palette().count();
    // Build the instance that T itself induces.
    CcpInstance I(L, T.palette());
    for (std::size_t k = 0; k < c; ++k)
      for (std::size_t i = 0; i < L; ++i) {
        int rc = 0, cc = 0;
        for (std::size_t j = 0; j < L; ++j) {
          if (T.color_index(i, j) == k) ++rc;
          if (T.color_index(j, i) == k) ++cc;
        }
        I.set_row_sum(k, i, rc);
        I.set_col_sum(k, i, cc);
      }
    REQUIRE(ccp::verify_realization(I, T));
    if (L < 2) continue;

    // Swap two rows of T and of every row-sum vector.
    std::uniform_int_distribution<std::size_t> pick(0, L - 1);
    std::size_t r1 = pick(rng), r2 = pick(rng);
    ColorMatrix P = T;
    for (std::size_t j = 0; j < L; ++j) {
      auto c1 = T.cell(r1, j), c2 = T.cell(r2, j);
      if (c1 == ColorMatrix::hole)
        P.set_hole(r2, j);
      else
        P.set_color(r2, j, static_cast<std::size_t>(c1 - 1));
      if (c2 == ColorMatrix::hole)
        P.set_hole(r1, j);
      else
        P.set_color(r1, j, static_cast<std::size_t>(c2 - 1));
    }
    CcpInstance J = I;
    for (std::size_t k = 0; k < c; ++k) {
      int a = I.row_sum(k, r1), b = I.row_sum(k, r2);
      J.set_row_sum(k, r1, b);
      J.set_row_sum(k, r2, a);
    }
    REQUIRE(ccp::verify_realization(J, P));
  }
}

TEST_CASE("instance text round-trips") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 60; ++round) {
    CcpInstance I = random_instance(rng);
    std::string text = ccp::serialize_instance(I);
    CcpInstance back = ccp::parse_instance(text);
    REQUIRE(back == I);
    REQUIRE(ccp::serialize_instance(back) == text);
  }
}

TEST_CASE("matrix text round-trips") {
  std::mt19937 rng(808);
  for (int round = 0; round < 60; ++round) {
    ColorMatrix T = random_matrix(rng);
    std::string text = ccp::serialize_matrix(T);
    ColorMatrix back = ccp::parse_matrix(text);
    REQUIRE(back == T);
    REQUIRE(ccp::serialize_matrix(back) == text);
  }
}

TEST_CASE("golden gadget instance file is byte-stable") {
  CcpInstance I = ccp::make_bsm(ccp::BitVec::parse("010100"),
                                ccp::BitVec::parse("000011"));
  std::string expected = ccp::read_file(golden_path("bsm_010100_000011.ccp"));
  CHECK(ccp::serialize_instance(I) == expected);
  CHECK(ccp::parse_instance(expected) == I);
}

TEST_CASE("parser reports positions for syntax errors") {
  // Row-sum line shorter than L.
  std::string text =
      "CCP 1\nsize 3\ncolors 1 A\nrowsums A 0 0\ncolsums A 0 0 0\n";
  try {
    ccp::parse_instance(text);
    FAIL("expected ParseError");
  } catch (const ccp::ParseError& e) {
    CHECK(e.line() == 4);
  }

  CHECK_THROWS_AS(ccp::parse_instance("CPP 1\n"), ccp::ParseError);
  CHECK_THROWS_AS(ccp::parse_instance("CCP 1\nsize x\n"), ccp::ParseError);
  CHECK_THROWS_AS(
      ccp::parse_instance("CCP 1\nsize 1\ncolors 1 A\nrowsums A 0\n"),
      ccp::ParseError);  // missing colsums line
  CHECK_THROWS_AS(
      ccp::parse_instance(
          "CCP 1\nsize 1\ncolors 1 A\nrowsums A 0\ncolsums A 0\nextra\n"),
      ccp::ParseError);
}

TEST_CASE("parser reports invariant violations distinctly") {
  // Negative sum: well-formed syntax, invalid value.
  CHECK_THROWS_AS(
      ccp::parse_instance(
          "CCP 1\nsize 2\ncolors 1 A\nrowsums A -1 0\ncolsums A 0 0\n"),
      ccp::ValidationError);
  // Per-row capacity exceeded.
  CHECK_THROWS_AS(
      ccp::parse_instance("CCP 1\nsize 1\ncolors 2 A B\nrowsums A 1\ncolsums "
                          "A 1\nrowsums B 1\ncolsums B 1\n"),
      ccp::ValidationError);
  // Duplicate color name.
  CHECK_THROWS_AS(ccp::parse_instance("CCP 1\nsize 0\ncolors 2 A A\n"),
                  ccp::ValidationError);
}

TEST_CASE("parser tolerates blank padding and canonicalizes") {
  std::string sloppy =
      "CCP 1\nsize  2\ncolors 1  A\nrowsums A 1  1\ncolsums A  1 1\n";
  CcpInstance I = ccp::parse_instance(sloppy);
  CHECK(ccp::serialize_instance(I) ==
        "CCP 1\nsize 2\ncolors 1 A\nrowsums A 1 1\ncolsums A 1 1\n");
}

TEST_CASE("matrix parser rejects bad cells") {
  CHECK_THROWS_AS(ccp::parse_matrix("CMX 1\nsize 1\ncolors 1 A\nX\n"),
                  ccp::ParseError);
  try {
    ccp::parse_matrix("CMX 1\nsize 2\ncolors 1 A\nA.\n.Q\n");
    FAIL("expected ParseError");
  } catch (const ccp::ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(ccp::parse_matrix("CMX 1\nsize 2\ncolors 1 A\nA.\n.\n"),
                  ccp::ParseError);  // short row
}

TEST_CASE("zero-size and zero-color documents are legal") {
  CcpInstance empty(0, Palette({'A'}));
  std::string text = ccp::serialize_instance(empty);
  CHECK(ccp::parse_instance(text) == empty);

  CcpInstance no_colors(3, Palette());
  CHECK(ccp::parse_instance(ccp::serialize_instance(no_colors)) == no_colors);

  ColorMatrix holes(2, Palette());
  CHECK(ccp::parse_matrix(ccp::serialize_matrix(holes)) == holes);
}
