// Text format for Coxeter matrices.
//
//   rank N
//   names a b c ...        (optional, exactly N identifiers)
//   m i j v                (1-based, i != j, v >= 2 or "inf")
//
// '#' starts a comment. Pairs that never appear are infinite. A pair may be
// repeated only with the same value.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"

namespace coxrig {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline std::uint64_t parse_uint(const Token& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, "expected a non-negative integer, got '" +
                                           std::string(tok.text) + "'");
  }
  return v;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

}  // namespace detail

inline CoxeterMatrix parse_coxeter_file(std::string_view text) {
  std::optional<CoxeterMatrix> matrix;
  std::map<std::pair<std::size_t, std::size_t>, Label> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    last_line = line_no;

    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const auto& kw = tokens[0];

    if (!matrix) {
      if (kw.text != "rank") throw ParseError(line_no, kw.column, "expected 'rank'");
      if (tokens.size() != 2) {
        throw ParseError(line_no, kw.column, "'rank' takes exactly one integer");
      }
      auto n = detail::parse_uint(tokens[1], line_no);
      if (n == 0) throw ParseError(line_no, tokens[1].column, "rank must be positive");
      matrix.emplace(static_cast<std::size_t>(n));
      continue;
    }

    if (kw.text == "names") {
      if (matrix->names()) throw ParseError(line_no, kw.column, "duplicate 'names' line");
      if (!seen.empty()) throw ParseError(line_no, kw.column, "'names' must precede 'm' lines");
      if (tokens.size() - 1 != matrix->rank()) {
        throw ParseError(line_no, kw.column,
                         "rank mismatch: expected " + std::to_string(matrix->rank()) +
                             " names, got " + std::to_string(tokens.size() - 1));
      }
      std::vector<std::string> names;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        if (!detail::is_identifier(tokens[k].text)) {
          throw ParseError(line_no, tokens[k].column,
                           "invalid name '" + std::string(tokens[k].text) + "'");
        }
        for (const auto& prev : names) {
          if (prev == tokens[k].text) {
            throw ParseError(line_no, tokens[k].column,
                             "duplicate name '" + std::string(tokens[k].text) + "'");
          }
        }
        names.emplace_back(tokens[k].text);
      }
      matrix->set_names(std::move(names));
    } else if (kw.text == "m") {
      if (tokens.size() != 4) throw ParseError(line_no, kw.column, "'m' takes i j value");
      auto i = detail::parse_uint(tokens[1], line_no);
      auto j = detail::parse_uint(tokens[2], line_no);
      for (int k : {1, 2}) {
        auto v = k == 1 ? i : j;
        if (v < 1 || v > matrix->rank()) {
          throw ParseError(line_no, tokens[k].column,
                           "generator index " + std::to_string(v) + " out of range 1.." +
                               std::to_string(matrix->rank()));
        }
      }
      if (i == j) throw ParseError(line_no, tokens[2].column, "'m' needs two distinct generators");
      Label value;
      if (tokens[3].text == "inf") {
        value = kInfinity;
      } else {
        auto v = detail::parse_uint(tokens[3], line_no);
        if (v < 2) throw ParseError(line_no, tokens[3].column, "order must be >= 2 or inf");
        if (v > UINT32_MAX) throw ParseError(line_no, tokens[3].column, "order too large");
        value = Label(static_cast<std::uint32_t>(v));
      }
      const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
      const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] = seen.emplace(key, value);
      if (!inserted && it->second != value) {
        throw ParseError(line_no, tokens[3].column,
                         "conflicting values for pair (" + std::to_string(key.first + 1) + "," +
                             std::to_string(key.second + 1) + "): " + it->second.to_string() +
                             " vs " + value.to_string());
      }
      matrix->set(key.first, key.second, value);
    } else if (kw.text == "rank") {
      throw ParseError(line_no, kw.column, "duplicate 'rank' line");
    } else {
      throw ParseError(line_no, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }
  if (!matrix) throw ParseError(last_line, 1, "missing 'rank' line");
  return *matrix;
}

/// Canonical text: pairs in lexicographic order, infinite pairs omitted,
/// lines joined by '\n' without a trailing newline.
inline std::string serialize(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << "rank " << m.rank();
  if (m.names()) {
    out << "\nnames";
    for (const auto& n : *m.names()) out << ' ' << n;
  }
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      if (m(i, j).is_finite()) out << "\nm " << i + 1 << ' ' << j + 1 << ' ' << m(i, j).value();
    }
  }
  return out.str();
}

}  // namespace coxrig
