// Catalog of the classical finite Coxeter matrices.
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coxrig/coxeter_matrix.hpp"

namespace coxrig {

class UnknownPreset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline CoxeterMatrix path_matrix(std::size_t n) {
  CoxeterMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, Label(j == i + 1 ? 3 : 2));
  }
  return m;
}

}  // namespace detail

inline CoxeterMatrix preset_a(std::size_t n) {
  if (n < 1) throw UnknownPreset("A(n) needs n >= 1");
  return detail::path_matrix(n);
}

/// B(n): path whose last edge carries 4.
inline CoxeterMatrix preset_b(std::size_t n) {
  if (n < 2) throw UnknownPreset("B(n) needs n >= 2");
  auto m = detail::path_matrix(n);
  m.set(n - 2, n - 1, Label(4));
  return m;
}

/// D(n): path 1..n-1 with generator n attached to n-2.
inline CoxeterMatrix preset_d(std::size_t n) {
  if (n < 4) throw UnknownPreset("D(n) needs n >= 4");
  auto m = detail::path_matrix(n);
  m.set(n - 2, n - 1, Label(2));
  m.set(n - 3, n - 1, Label(3));
  return m;
}

/// E(n), Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4.
inline CoxeterMatrix preset_e(std::size_t n) {
  if (n < 6 || n > 8) throw UnknownPreset("E(n) needs n in {6,7,8}");
  CoxeterMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, Label(2));
  }
  m.set(0, 2, Label(3));
  m.set(1, 3, Label(3));
  for (std::size_t i = 2; i + 1 < n; ++i) m.set(i, i + 1, Label(3));
  return m;
}

inline CoxeterMatrix preset_f4() {
  auto m = detail::path_matrix(4);
  m.set(1, 2, Label(4));
  return m;
}

/// H(n): path whose first edge carries 5.
inline CoxeterMatrix preset_h(std::size_t n) {
  if (n != 3 && n != 4) throw UnknownPreset("H(n) needs n in {3,4}");
  auto m = detail::path_matrix(n);
  m.set(0, 1, Label(5));
  return m;
}

inline CoxeterMatrix preset_i2(std::uint32_t label) {
  if (label < 3) throw UnknownPreset("I2(m) needs m >= 3");
  CoxeterMatrix m(2);
  m.set(0, 1, Label(label));
  return m;
}

/// Looks up a preset by name. Accepts "A3", "A(3)", "E6", "F4", "H3",
/// "I2(5)"; a '+' joins summands, e.g. "A1+I2(5)".
inline CoxeterMatrix preset(std::string_view name) {
  if (auto plus = name.find('+'); plus != std::string_view::npos) {
    return direct_sum(preset(name.substr(0, plus)), preset(name.substr(plus + 1)));
  }
  auto fail = [&] { return UnknownPreset("unknown preset '" + std::string(name) + "'"); };
  if (name.empty()) throw fail();

  auto parse_number = [&](std::string_view s) -> std::uint64_t {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty() || s.size() > 9) throw fail();
    std::uint64_t v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };

  if (name.size() >= 2 && name.substr(0, 2) == "I2") {
    auto rest = name.substr(2);
    if (rest.size() < 3 || rest.front() != '(') throw fail();
    return preset_i2(static_cast<std::uint32_t>(parse_number(rest)));
  }
  auto n = static_cast<std::size_t>(parse_number(name.substr(1)));
  switch (name[0]) {
    case 'A': return preset_a(n);
    case 'B': return preset_b(n);
    case 'D': return preset_d(n);
    case 'E': return preset_e(n);
    case 'F':
      if (n != 4) throw UnknownPreset("F(n) needs n = 4");
      return preset_f4();
    case 'H': return preset_h(n);
    default: throw fail();
  }
}

}  // namespace coxrig
