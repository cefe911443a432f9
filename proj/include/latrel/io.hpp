//  Copyright 2026 the latrel authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef LATREL_IO_HPP_
#define LATREL_IO_HPP_

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latrel/demorgan.hpp"

namespace latrel {

using Json = nlohmann::ordered_json;

namespace detail {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> args;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (key.back() != ':')
      throw Error("line " + std::to_string(number) + ": expected 'keyword:' but found '" + key + "'");
    key.pop_back();
    Line line{number, key, {}};
    std::string tok;
    while (ls >> tok) line.args.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

inline void expect_arity(const Line& l, std::size_t n) {
  if (l.args.size() != n)
    throw Error("line " + std::to_string(l.number) + ": '" + l.key + "' expects " +
                std::to_string(n) + " tokens, found " + std::to_string(l.args.size()));
}

inline std::size_t lookup(const FinSet& x, const std::string& tok, std::size_t line) {
  if (auto i = x.find(tok)) return *i;
  throw Error("line " + std::to_string(line) + ": unknown element '" + tok + "'");
}

}  // namespace detail

// --- .rel ---------------------------------------------------------------

inline Rel parse_rel(const std::string& text) {
  std::optional<FinSet> src, tgt;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> pending;
  std::vector<detail::Line> lines = detail::tokenize(text);
  std::optional<Rel> rel;
  for (const auto& l : lines) {
    if (l.key == "source") {
      src = FinSet(l.args);
    } else if (l.key == "target") {
      tgt = FinSet(l.args);
    } else if (l.key == "pair") {
      detail::expect_arity(l, 2);
      if (!src || !tgt) throw Error("line " + std::to_string(l.number) + ": pair before carriers");
      if (!rel) rel = Rel(*src, *tgt);
      rel->set(detail::lookup(*src, l.args[0], l.number), detail::lookup(*tgt, l.args[1], l.number));
    } else {
      throw Error("line " + std::to_string(l.number) + ": unknown keyword '" + l.key + "'");
    }
  }
  if (!src || !tgt) throw Error("relation needs 'source:' and 'target:' lines");
  if (!rel) rel = Rel(*src, *tgt);
  return *rel;
}

inline std::string serialize_rel(const Rel& r) {
  std::ostringstream out;
  out << "source:";
  for (const auto& n : r.src().names) out << ' ' << n;
  out << "\ntarget:";
  for (const auto& n : r.tgt().names) out << ' ' << n;
  out << '\n';
  for (std::size_t i = 0; i < r.n_src(); ++i)
    for (auto j = r.row(i).find_first(); j != Bits::npos; j = r.row(i).find_next(j))
      out << "pair: " << r.src().name(i) << ' ' << r.tgt().name(j) << '\n';
  return out.str();
}

// --- .poset --------------------------------------------------------------

inline Poset parse_poset(const std::string& text) {
  std::optional<FinSet> elems;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& l : detail::tokenize(text)) {
    if (l.key == "elements") {
      elems = FinSet(l.args);
    } else if (l.key == "leq") {
      detail::expect_arity(l, 2);
      if (!elems) throw Error("line " + std::to_string(l.number) + ": leq before elements");
      pairs.emplace_back(detail::lookup(*elems, l.args[0], l.number),
                         detail::lookup(*elems, l.args[1], l.number));
    } else {
      throw Error("line " + std::to_string(l.number) + ": unknown keyword '" + l.key + "'");
    }
  }
  if (!elems) throw Error("poset needs an 'elements:' line");
  return poset_validate(*elems, pairs);
}

inline std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : p.carrier.names) out << ' ' << n;
  out << '\n';
  Rel cov = poset_covers(p);
  for (std::size_t i = 0; i < cov.n_src(); ++i)
    for (auto j = cov.row(i).find_first(); j != Bits::npos; j = cov.row(i).find_next(j))
      out << "leq: " << p.carrier.name(i) << ' ' << p.carrier.name(j) << '\n';
  return out.str();
}

// --- .jsl (optionally carrying a unary operation) -------------------------

struct JslFile {
  Jsl jsl;
  std::optional<UnaryAlgebra> algebra;
};

inline JslFile parse_jsl(const std::string& text) {
  std::optional<FinSet> elems;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> sigma_pairs;
  std::optional<AlgKind> kind;
  for (const auto& l : detail::tokenize(text)) {
    if (l.key == "elements") {
      elems = FinSet(l.args);
    } else if (l.key == "leq") {
      detail::expect_arity(l, 2);
      if (!elems) throw Error("line " + std::to_string(l.number) + ": leq before elements");
      pairs.emplace_back(detail::lookup(*elems, l.args[0], l.number),
                         detail::lookup(*elems, l.args[1], l.number));
    } else if (l.key == "sigma") {
      detail::expect_arity(l, 2);
      if (!elems) throw Error("line " + std::to_string(l.number) + ": sigma before elements");
      sigma_pairs.emplace_back(detail::lookup(*elems, l.args[0], l.number),
                               detail::lookup(*elems, l.args[1], l.number));
    } else if (l.key == "kind") {
      detail::expect_arity(l, 1);
      kind = kind_from_name(l.args[0]);
      if (!kind) throw Error("line " + std::to_string(l.number) + ": unknown kind '" + l.args[0] + "'");
    } else {
      throw Error("line " + std::to_string(l.number) + ": unknown keyword '" + l.key + "'");
    }
  }
  if (!elems) throw Error("semilattice needs an 'elements:' line");
  JslFile out;
  out.jsl = Jsl::from_poset(poset_validate(*elems, pairs));
  if (!sigma_pairs.empty() || kind) {
    if (sigma_pairs.empty()) throw Error("kind given without sigma lines");
    std::vector<std::size_t> sigma(out.jsl.size(), out.jsl.size());
    for (auto [a, b] : sigma_pairs) {
      if (sigma[a] != out.jsl.size()) throw Error("sigma defined twice at " + out.jsl.name(a));
      sigma[a] = b;
    }
    for (std::size_t a = 0; a < sigma.size(); ++a)
      if (sigma[a] == out.jsl.size()) throw Error("sigma undefined at " + out.jsl.name(a));
    out.algebra = check_unary_algebra(out.jsl, std::move(sigma), kind.value_or(AlgKind::SAI));
  }
  return out;
}

inline std::string serialize_jsl(const Jsl& q, const UnaryAlgebra* alg = nullptr) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : q.carrier().names) out << ' ' << n;
  out << '\n';
  const Rel& cov = q.covers();
  for (std::size_t i = 0; i < cov.n_src(); ++i)
    for (auto j = cov.row(i).find_first(); j != Bits::npos; j = cov.row(i).find_next(j))
      out << "leq: " << q.name(i) << ' ' << q.name(j) << '\n';
  if (alg) {
    out << "kind: " << kind_name(alg->kind) << '\n';
    for (std::size_t a = 0; a < q.size(); ++a)
      out << "sigma: " << q.name(a) << ' ' << q.name(alg->sigma[a]) << '\n';
  }
  return out.str();
}

// --- .ug -------------------------------------------------------------------

inline UGraph parse_ug(const std::string& text) {
  std::optional<FinSet> verts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& l : detail::tokenize(text)) {
    if (l.key == "vertices") {
      verts = FinSet(l.args);
    } else if (l.key == "edge") {
      detail::expect_arity(l, 2);
      if (!verts) throw Error("line " + std::to_string(l.number) + ": edge before vertices");
      edges.emplace_back(detail::lookup(*verts, l.args[0], l.number),
                         detail::lookup(*verts, l.args[1], l.number));
    } else {
      throw Error("line " + std::to_string(l.number) + ": unknown keyword '" + l.key + "'");
    }
  }
  if (!verts) throw Error("graph needs a 'vertices:' line");
  Rel e(*verts, *verts);
  for (auto [a, b] : edges) {
    e.set(a, b);
    e.set(b, a);
  }
  return ugraph_new(*verts, e);
}

inline std::string serialize_ug(const UGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : g.vertices.names) out << ' ' << n;
  out << '\n';
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto j = g.edges.row(i).find_first(); j != Bits::npos; j = g.edges.row(i).find_next(j))
      if (j >= i) out << "edge: " << g.vertices.name(i) << ' ' << g.vertices.name(j) << '\n';
  return out.str();
}

// --- DOT export --------------------------------------------------------------

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Hasse diagram: nodes plus covering edges, drawn bottom-up.
inline std::string dot_hasse(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& n : p.carrier.names) out << "  " << dot_quote(n) << ";\n";
  Rel cov = poset_covers(p);
  for (std::size_t i = 0; i < cov.n_src(); ++i)
    for (auto j = cov.row(i).find_first(); j != Bits::npos; j = cov.row(i).find_next(j))
      out << "  " << dot_quote(p.carrier.name(i)) << " -> " << dot_quote(p.carrier.name(j))
          << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

inline std::string dot_bipartite(const Rel& r) {
  std::ostringstream out;
  out << "digraph bipartite {\n  rankdir=BT;\n";
  out << "  { rank=same;";
  for (const auto& n : r.src().names) out << ' ' << dot_quote("s:" + n) << ';';
  out << " }\n  { rank=same;";
  for (const auto& n : r.tgt().names) out << ' ' << dot_quote("t:" + n) << ';';
  out << " }\n";
  for (std::size_t i = 0; i < r.n_src(); ++i)
    for (auto j = r.row(i).find_first(); j != Bits::npos; j = r.row(i).find_next(j))
      out << "  " << dot_quote("s:" + r.src().name(i)) << " -> " << dot_quote("t:" + r.tgt().name(j))
          << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string dot_ugraph(const UGraph& g) {
  std::ostringstream out;
  out << "graph ug {\n";
  for (const auto& n : g.vertices.names) out << "  " << dot_quote(n) << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto j = g.edges.row(i).find_first(); j != Bits::npos; j = g.edges.row(i).find_next(j))
      if (j >= i) out << "  " << dot_quote(g.vertices.name(i)) << " -- " << dot_quote(g.vertices.name(j))
                      << ";\n";
  out << "}\n";
  return out.str();
}

// --- JSON ---------------------------------------------------------------------

inline Json json_rel(const Rel& r) {
  Json j;
  j["source"] = r.src().names;
  j["target"] = r.tgt().names;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < r.n_src(); ++i)
    for (auto k = r.row(i).find_first(); k != Bits::npos; k = r.row(i).find_next(k))
      pairs.push_back(Json::array({r.src().name(i), r.tgt().name(k)}));
  j["pairs"] = pairs;
  return j;
}

inline Json json_jsl(const Jsl& q) {
  Json j;
  j["elements"] = q.carrier().names;
  Json covers = Json::array();
  const Rel& cov = q.covers();
  for (std::size_t i = 0; i < cov.n_src(); ++i)
    for (auto k = cov.row(i).find_first(); k != Bits::npos; k = cov.row(i).find_next(k))
      covers.push_back(Json::array({q.name(i), q.name(k)}));
  j["covers"] = covers;
  j["bottom"] = q.name(q.bottom());
  j["top"] = q.name(q.top());
  Json ji = Json::array(), mi = Json::array();
  for (auto x : q.join_irreducibles()) ji.push_back(q.name(x));
  for (auto x : q.meet_irreducibles()) mi.push_back(q.name(x));
  j["join_irreducibles"] = ji;
  j["meet_irreducibles"] = mi;
  j["distributive"] = q.is_distributive();
  j["boolean"] = q.is_boolean();
  return j;
}

inline Json json_ug(const UGraph& g) {
  Json j;
  j["vertices"] = g.vertices.names;
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto k = g.edges.row(i).find_first(); k != Bits::npos; k = g.edges.row(i).find_next(k))
      if (k >= i) edges.push_back(Json::array({g.vertices.name(i), g.vertices.name(k)}));
  j["edges"] = edges;
  return j;
}

}  // namespace latrel

#endif  // LATREL_IO_HPP_
