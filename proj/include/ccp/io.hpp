#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ccp/errors.hpp"
#include "ccp/instance.hpp"

namespace ccp {
namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  std::string text;
  int number;  // 1-based
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  int number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size())
        lines.push_back({std::string(text.substr(start)), number});
      break;
    }
    lines.push_back({std::string(text.substr(start, end - start)), number});
    start = end + 1;
    ++number;
  }
  return lines;
}

inline std::vector<Token> tokenize(const Line& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.text.size()) {
    if (line.text[i] == ' ' || line.text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.text.size() && line.text[i] != ' ' && line.text[i] != '\t')
      ++i;
    tokens.push_back(
        {line.text.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

inline int parse_int(int line_number, const Token& tok) {
  int value = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line_number, tok.column,
                     "expected an integer, got '" + tok.text + "'");
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(split_lines(text)) {}

  const Line& expect_line(const std::string& what) {
    if (pos_ >= lines_.size())
      throw ParseError(static_cast<int>(lines_.size()) + 1, 1,
                       "unexpected end of input, expected " + what);
    return lines_[pos_++];
  }

  void expect_eof() const {
    for (std::size_t i = pos_; i < lines_.size(); ++i) {
      // Blank lines at the very end are tolerated.
      if (!tokenize(lines_[i]).empty())
        throw ParseError(lines_[i].number, 1, "trailing content after document");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline void expect_magic(LineReader& reader, const std::string& magic) {
  const Line& line = reader.expect_line("'" + magic + " 1' header");
  auto tokens = tokenize(line);
  if (tokens.size() != 2 || tokens[0].text != magic || tokens[1].text != "1")
    throw ParseError(line.number, 1, "expected '" + magic + " 1' header");
}

inline int expect_size(LineReader& reader) {
  const Line& line = reader.expect_line("'size' line");
  auto tokens = tokenize(line);
  if (tokens.size() != 2 || tokens[0].text != "size")
    throw ParseError(line.number, 1, "expected 'size <L>'");
  int L = parse_int(line.number, tokens[1]);
  if (L < 0) throw ValidationError("size must be nonnegative");
  return L;
}

inline Palette expect_palette(LineReader& reader) {
  const Line& line = reader.expect_line("'colors' line");
  auto tokens = tokenize(line);
  if (tokens.size() < 2 || tokens[0].text != "colors")
    throw ParseError(line.number, 1, "expected 'colors <c> <names...>'");
  int c = parse_int(line.number, tokens[1]);
  if (c < 0) throw ValidationError("negative color count");
  if (static_cast<int>(tokens.size()) != 2 + c)
    throw ParseError(line.number, tokens[1].column,
                     "colors line must list exactly " + std::to_string(c) +
                         " names");
  std::vector<char> names;
  for (int k = 0; k < c; ++k) {
    const Token& tok = tokens[static_cast<std::size_t>(k) + 2];
    if (tok.text.size() != 1)
      throw ParseError(line.number, tok.column,
                       "color names are single letters");
    names.push_back(tok.text[0]);
  }
  return Palette(std::move(names));  // ValidationError on bad/duplicate names
}

}  // namespace detail

// --- .ccp instance format --------------------------------------------------
//
//   CCP 1
//   size <L>
//   colors <c> <name1> ... <namec>
//   rowsums <name> v1 ... vL     (per color, in palette order)
//   colsums <name> v1 ... vL
//
// Canonical form uses single spaces and no trailing whitespace; the parser
// tolerates runs of blanks, which re-serialization canonicalizes. Structural
// problems raise ParseError with a position; value problems (negative sums,
// overfull rows) raise ValidationError.

inline std::string serialize_instance(const CcpInstance& I) {
  std::ostringstream out;
  out << "CCP 1\n";
  out << "size " << I.size() << "\n";
  out << "colors " << I.palette().count();
  for (char name : I.palette().names()) out << ' ' << name;
  out << "\n";
  for (std::size_t c = 0; c < I.palette().count(); ++c) {
    out << "rowsums " << I.palette().name(c);
    for (std::size_t i = 0; i < I.size(); ++i) out << ' ' << I.row_sum(c, i);
    out << "\n";
    out << "colsums " << I.palette().name(c);
    for (std::size_t j = 0; j < I.size(); ++j) out << ' ' << I.col_sum(c, j);
    out << "\n";
  }
  return out.str();
}

inline CcpInstance parse_instance(std::string_view text) {
  detail::LineReader reader(text);
  detail::expect_magic(reader, "CCP");
  const int L = detail::expect_size(reader);
  Palette palette = detail::expect_palette(reader);

  std::vector<std::vector<int>> rows, cols;
  for (std::size_t k = 0; k < palette.count(); ++k) {
    for (const char* keyword : {"rowsums", "colsums"}) {
      const detail::Line& line = reader.expect_line(
          std::string("'") + keyword + "' line for color " + palette.name(k));
      auto tokens = detail::tokenize(line);
      if (tokens.empty() || tokens[0].text != keyword)
        throw ParseError(line.number, tokens.empty() ? 1 : tokens[0].column,
                         std::string("expected '") + keyword + "'");
      if (tokens.size() < 2 || tokens[1].text != std::string(1, palette.name(k)))
        throw ParseError(line.number, tokens.size() < 2 ? 1 : tokens[1].column,
                         std::string("expected color name '") +
                             palette.name(k) + "'");
      if (static_cast<int>(tokens.size()) != 2 + L)
        throw ParseError(line.number, tokens[0].column,
                         std::string(keyword) + " line must carry exactly " +
                             std::to_string(L) + " values");
      std::vector<int> values;
      values.reserve(static_cast<std::size_t>(L));
      for (int i = 0; i < L; ++i)
        values.push_back(detail::parse_int(
            line.number, tokens[static_cast<std::size_t>(i) + 2]));
      (keyword[0] == 'r' ? rows : cols).push_back(std::move(values));
    }
  }
  reader.expect_eof();

  return CcpInstance(static_cast<std::size_t>(L), std::move(palette),
                     std::move(rows), std::move(cols));
}

// --- .cmx realization format -------------------------------------------
//
//   CMX 1
//   size <L>
//   colors <c> <names...>
//   then L lines of exactly L characters: '.' = hole, letter = color.

inline std::string serialize_matrix(const ColorMatrix& T) {
  std::ostringstream out;
  out << "CMX 1\n";
  out << "size " << T.size() << "\n";
  out << "colors " << T.palette().count();
  for (char name : T.palette().names()) out << ' ' << name;
  out << "\n";
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = 0; j < T.size(); ++j) {
      if (auto k = T.color_index(i, j))
        out << T.palette().name(*k);
      else
        out << '.';
    }
    out << "\n";
  }
  return out.str();
}

inline ColorMatrix parse_matrix(std::string_view text) {
  detail::LineReader reader(text);
  detail::expect_magic(reader, "CMX");
  const int L = detail::expect_size(reader);
  Palette palette = detail::expect_palette(reader);

  ColorMatrix T(static_cast<std::size_t>(L), palette);
  for (int i = 0; i < L; ++i) {
    const detail::Line& line = reader.expect_line("matrix row");
    if (static_cast<int>(line.text.size()) != L)
      throw ParseError(line.number, static_cast<int>(line.text.size()) + 1,
                       "matrix row must be exactly " + std::to_string(L) +
                           " characters");
    for (int j = 0; j < L; ++j) {
      char ch = line.text[static_cast<std::size_t>(j)];
      if (ch == '.') continue;
      auto idx = palette.index_of(ch);
      if (!idx)
        throw ParseError(line.number, j + 1,
                         std::string("'") + ch + "' is not in the palette");
      T.set_color(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                  *idx);
    }
  }
  reader.expect_eof();
  return T;
}

// --- small file helpers ------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace ccp
