#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/permutation.hpp"

namespace symcay {

// Cycle notation is 1-based on the text surface and 0-based internally.
// "(1 2 3)(4 5)" and "(1,2,3)(4,5)" are accepted; "()" is the identity.
// Cycles are composed left to right. Degree = largest point mentioned
// (0 for the bare identity); callers extend as needed.
inline Permutation parse_permutation(const std::string& text,
                                     int min_degree = 0) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  std::vector<std::vector<int>> cycles;
  int max_point = -1;
  skip_ws();
  if (i == text.size()) throw parse_error("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '('", i);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw parse_error("unclosed cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        skip_ws();
      }
      if (i == text.size()) throw parse_error("unclosed cycle", i);
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected a point", i);
      std::size_t start = i;
      long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw parse_error("point too large", start);
        ++i;
      }
      if (v == 0) throw parse_error("points are 1-based", start);
      int pt = static_cast<int>(v - 1);
      for (int p : cycle)
        if (p == pt) throw parse_error("repeated point in cycle", start);
      cycle.push_back(pt);
      if (pt > max_point) max_point = pt;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  int degree = std::max(min_degree, max_point + 1);
  Permutation result = Permutation::identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> img(degree);
    for (int p = 0; p < degree; ++p) img[p] = p;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    result = result * Permutation(std::move(img));
  }
  return result;
}

// Inverse of parse_permutation; identity prints as "()".
inline std::string print_permutation(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace symcay
