#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcay/catalog.hpp"
#include "symcay/errors.hpp"
#include "symcay/notation.hpp"

namespace symcay {

// One `name = expression` statement. Expressions are permutation literals
// in cycle notation, set literals over permutations, or catalog
// construction calls with keyword parameters.
struct ScriptStatement {
  std::string name;
  std::string expr;
  int line = 0;  // 1-based source line for error messages
};

struct Script {
  std::vector<ScriptStatement> statements;
};

using ScriptValue = std::variant<Permutation, std::vector<Permutation>, CatalogEntry>;

struct ScriptResult {
  std::vector<std::pair<std::string, ScriptValue>> bindings;
  std::string summary;  // one line per binding, deterministic
};

namespace detail {

inline bool ident_char(char c, bool first) {
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return true;
  return !first && std::isdigit(static_cast<unsigned char>(c));
}

inline std::string script_trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits on commas outside parentheses; pieces come back trimmed.
inline std::vector<std::string> split_top_level(const std::string& s, int line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0)
        throw hypothesis_error("script line " + std::to_string(line) + ": unbalanced ')'");
    }
    if (c == ',' && depth == 0) {
      out.push_back(script_trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0)
    throw hypothesis_error("script line " + std::to_string(line) + ": unbalanced '('");
  cur = script_trim(cur);
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

// '#' starts a comment; blank lines are skipped; every remaining line is
// `IDENT = expr` with exactly one expression. Expression syntax is
// validated on execution, shape and binding names here.
inline Script parse_script(const std::string& text) {
  Script s;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    raw = detail::script_trim(raw);
    if (raw.empty()) continue;
    // `=` may also appear inside a call's keyword arguments, so the
    // binding delimiter is the first one outside any parentheses.
    int depth = 0;
    std::size_t eq = std::string::npos;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '(' || raw[i] == '{') ++depth;
      if (raw[i] == ')' || raw[i] == '}') --depth;
      if (raw[i] == '=' && depth == 0) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos)
      throw hypothesis_error("script line " + std::to_string(line) + ": expected `name = expr`");
    std::string name = detail::script_trim(raw.substr(0, eq));
    std::string expr = detail::script_trim(raw.substr(eq + 1));
    if (name.empty() || !detail::ident_char(name[0], true))
      throw hypothesis_error("script line " + std::to_string(line) + ": invalid binding name");
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!detail::ident_char(name[i], false))
        throw hypothesis_error("script line " + std::to_string(line) + ": invalid binding name");
    if (expr.empty())
      throw hypothesis_error("script line " + std::to_string(line) + ": empty expression");
    s.statements.push_back({name, expr, line});
  }
  return s;
}

// Evaluates statements in order. Each name binds exactly once and must be
// bound before use. The summary echoes each binding in a reparseable
// `name = expr  # facts` form.
inline ScriptResult run_script(const Script& s) {
  ScriptResult res;
  std::map<std::string, std::size_t> index;
  auto line_err = [](int line, const std::string& msg) {
    return hypothesis_error("script line " + std::to_string(line) + ": " + msg);
  };
  for (const auto& st : s.statements) {
    if (index.count(st.name)) throw line_err(st.line, "name '" + st.name + "' is already bound");
    ScriptValue value;
    std::string facts;
    std::string echo = st.expr;
    if (st.expr[0] == '(') {
      Permutation p = parse_permutation(st.expr);
      facts = "order " + std::to_string(p.order()) + ", degree " + std::to_string(p.degree());
      echo = print_permutation(p);
      value = std::move(p);
    } else if (st.expr[0] == '{') {
      if (st.expr.back() != '}') throw line_err(st.line, "unclosed set literal");
      std::string body = st.expr.substr(1, st.expr.size() - 2);
      std::vector<Permutation> elems;
      int degree = 0;
      for (const std::string& piece : detail::split_top_level(body, st.line)) {
        if (piece.empty()) throw line_err(st.line, "empty set element");
        Permutation p;
        if (piece[0] == '(') {
          p = parse_permutation(piece);
        } else {
          auto it = index.find(piece);
          if (it == index.end()) throw line_err(st.line, "unbound name '" + piece + "'");
          const ScriptValue& v = res.bindings[it->second].second;
          if (!std::holds_alternative<Permutation>(v))
            throw line_err(st.line, "name '" + piece + "' is not a permutation");
          p = std::get<Permutation>(v);
        }
        if (p.degree() > degree) degree = p.degree();
        elems.push_back(std::move(p));
      }
      std::vector<Permutation> set;
      for (auto& p : elems) {
        Permutation q = p.extended(degree);
        bool dup = false;
        for (const auto& r : set) dup = dup || r == q;
        if (!dup) set.push_back(std::move(q));
      }
      echo = "{";
      for (std::size_t i = 0; i < set.size(); ++i)
        echo += (i ? ", " : "") + print_permutation(set[i]);
      echo += "}";
      facts = std::to_string(set.size()) + " permutations, degree " + std::to_string(degree);
      value = std::move(set);
    } else {
      std::size_t i = 0;
      while (i < st.expr.size() && detail::ident_char(st.expr[i], i == 0)) ++i;
      std::string callee = st.expr.substr(0, i);
      if (i == 0 || i >= st.expr.size() || st.expr[i] != '(' || st.expr.back() != ')')
        throw line_err(st.line, "expected a construction call `entry(k=v, ...)`");
      Params pr;
      std::string body = st.expr.substr(i + 1, st.expr.size() - i - 2);
      for (const std::string& piece : detail::split_top_level(body, st.line)) {
        std::size_t eq = piece.find('=');
        if (piece.empty() || eq == std::string::npos)
          throw line_err(st.line, "expected `key=value` argument");
        std::string key = detail::script_trim(piece.substr(0, eq));
        std::string val = detail::script_trim(piece.substr(eq + 1));
        try {
          std::size_t used = 0;
          long long v = std::stoll(val, &used);
          if (used != val.size()) throw std::invalid_argument(val);
          pr[key] = v;
        } catch (const std::logic_error&) {
          throw line_err(st.line, "argument '" + key + "' needs an integer value");
        }
      }
      CatalogEntry e = build(callee, pr);
      echo = callee + "(";
      bool first = true;
      for (const auto& [k, v] : e.params) {
        echo += (first ? "" : ", ") + k + "=" + std::to_string(v);
        first = false;
      }
      echo += ")";
      facts = std::to_string(e.graph.n()) + " vertices, " +
              std::to_string(e.graph.edge_count()) + " edges";
      value = std::move(e);
    }
    index[st.name] = res.bindings.size();
    res.summary += st.name + " = " + echo + "  # " + facts + "\n";
    res.bindings.emplace_back(st.name, std::move(value));
  }
  return res;
}

}  // namespace symcay
