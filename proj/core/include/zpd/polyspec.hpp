#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "zpd/poly.hpp"

namespace zpd {

// Polynomial mini-language for the command line:
//   spec  := term ('+' term)*
//   term  := atom ('*' scalar)?
//   atom  := "gc" | "prod2" | "lie2" | "jordan2" | "central-m2"
//          | "s:N" | "cyclic:a1,a2,..." | "sec2:alpha,beta" (the family's f)
//          | "sec2g:alpha,beta" | "sec2h1" | "sec2h2"
//          | "tree:<expr>" with expr := xN | (e*e) | [e,e] | {e,e}
// Examples: "gc*2", "tree:[[x1,x2],x3]", "cyclic:1,2,3".

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline MonomialTree parse_tree_expr(const std::string& s, std::size_t& pos) {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("tree spec: " + msg + " at offset " +
                                std::to_string(pos) + " in '" + s + "'");
  };
  if (pos >= s.size()) fail("unexpected end");
  char c = s[pos];
  if (c == 'x') {
    std::size_t start = ++pos;
    while (pos < s.size() && isdigit(s[pos])) ++pos;
    if (start == pos) fail("expected variable index");
    return MonomialTree::leaf(std::stoi(s.substr(start, pos - start)));
  }
  char close;
  MonomialTree::Kind kind;
  char sep;
  if (c == '(') {
    close = ')';
    kind = MonomialTree::Kind::Prod;
    sep = '*';
  } else if (c == '[') {
    close = ']';
    kind = MonomialTree::Kind::Lie;
    sep = ',';
  } else if (c == '{') {
    close = '}';
    kind = MonomialTree::Kind::Jordan;
    sep = ',';
  } else {
    fail("expected 'x', '(', '[' or '{'");
    throw std::logic_error("unreachable");
  }
  ++pos;
  MonomialTree left = parse_tree_expr(s, pos);
  if (pos >= s.size() || s[pos] != sep) fail(std::string("expected '") + sep + "'");
  ++pos;
  MonomialTree right = parse_tree_expr(s, pos);
  if (pos >= s.size() || s[pos] != close)
    fail(std::string("expected '") + close + "'");
  ++pos;
  return MonomialTree::node(kind, std::move(left), std::move(right));
}

template <class F>
MultilinearPoly<F> parse_atom(const F& field, const std::string& atom) {
  auto colon = atom.find(':');
  std::string name = colon == std::string::npos ? atom : atom.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : atom.substr(colon + 1);

  if (name == "gc") return polys::generalized_commutator(field);
  if (name == "prod2") return polys::prod2(field);
  if (name == "lie2") return polys::lie2(field);
  if (name == "jordan2") return polys::jordan2(field);
  if (name == "central-m2") return polys::central_m2(field);
  if (name == "s") return polys::standard(field, std::stoi(args));
  if (name == "cyclic") {
    std::vector<typename F::Elem> alphas;
    for (const auto& a : split(args, ',')) alphas.push_back(field.parse(a));
    return polys::cyclic(field, alphas);
  }
  if (name == "sec2" || name == "sec2f" || name == "sec2g") {
    auto parts = split(args, ',');
    if (parts.size() != 2)
      throw std::invalid_argument("sec2 expects alpha,beta");
    auto fam = polys::sec2_family(field, field.parse(parts[0]),
                                      field.parse(parts[1]));
    return name == "sec2g" ? fam.g : fam.f;
  }
  if (name == "sec2h1" || name == "sec2h2") {
    auto fam = polys::sec2_family(field, field.parse("1"), field.parse("2"));
    return name == "sec2h1" ? fam.h1 : fam.h2;
  }
  if (name == "tree") {
    std::size_t pos = 0;
    MonomialTree t = parse_tree_expr(args, pos);
    if (pos != args.size())
      throw std::invalid_argument("tree spec: trailing input in '" + args + "'");
    return monomial_tree(field, t);
  }
  throw std::invalid_argument("unknown polynomial atom: " + atom);
}

}  // namespace detail

template <class F>
MultilinearPoly<F> parse_poly_spec(const F& field, const std::string& spec) {
  auto terms = detail::split(spec, '+');
  if (terms.empty()) throw std::invalid_argument("empty polynomial spec");
  std::optional<MultilinearPoly<F>> acc;
  for (const auto& raw : terms) {
    std::string t = raw;
    typename F::Elem scale = field.one();
    auto star = t.rfind('*');
    // '*' inside tree:(x1*x2) is part of the expression; a scale suffix
    // must follow the last ')'/']'/'}' or a bare name.
    if (star != std::string::npos &&
        t.find_first_of(")]}", star) == std::string::npos &&
        t.rfind("tree:", 0) != 0) {
      scale = field.parse(t.substr(star + 1));
      t = t.substr(0, star);
    } else if (t.rfind("tree:", 0) == 0) {
      auto last_close = t.find_last_of(")]}");
      if (last_close != std::string::npos && last_close + 1 < t.size() &&
          t[last_close + 1] == '*') {
        scale = field.parse(t.substr(last_close + 2));
        t = t.substr(0, last_close + 1);
      }
    }
    auto poly = detail::parse_atom(field, t).scaled(scale);
    if (!acc)
      acc = std::move(poly);
    else
      acc = *acc + poly;
  }
  return *acc;
}

}  // namespace zpd
