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

#ifndef LATREL_DEMORGAN_HPP_
#define LATREL_DEMORGAN_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrel/tensor.hpp"

namespace latrel {

// The three equational classes of join-semilattices with an order-reversing
// unary operation: extensive square, co-extensive square, involutive.
enum class AlgKind { SAJ, SAM, SAI };

inline const char* kind_name(AlgKind k) {
  switch (k) {
    case AlgKind::SAJ: return "saj";
    case AlgKind::SAM: return "sam";
    default: return "sai";
  }
}

inline std::optional<AlgKind> kind_from_name(const std::string& s) {
  if (s == "saj") return AlgKind::SAJ;
  if (s == "sam") return AlgKind::SAM;
  if (s == "sai") return AlgKind::SAI;
  return std::nullopt;
}

struct UnaryAlgebra {
  Jsl base;
  std::vector<std::size_t> sigma;
  AlgKind kind = AlgKind::SAI;

  std::size_t s(std::size_t a) const { return sigma[a]; }

  JslMorphism sigma_into_op() const {
    return JslMorphism{base, base.opposite(), sigma};
  }
};

// Validates the axioms and cross-checks the self-adjointness reading:
// extensive squares mean b <= s(a) iff a <= s(b), co-extensive squares the
// two-sided dual, involutive both at once.
inline UnaryAlgebra check_unary_algebra(const Jsl& base, std::vector<std::size_t> sigma, AlgKind kind) {
  if (sigma.size() != base.size()) throw Error("unary operation has wrong arity");
  for (auto v : sigma)
    if (v >= base.size()) throw Error("unary operation image out of carrier");
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = 0; b < base.size(); ++b)
      if (base.le(a, b) && !base.le(sigma[b], sigma[a]))
        throw Error("unary operation does not reverse the order at (" + base.name(a) + "," +
                    base.name(b) + ")");
  for (std::size_t a = 0; a < base.size(); ++a) {
    std::size_t ss = sigma[sigma[a]];
    if (kind == AlgKind::SAJ && !base.le(a, ss))
      throw Error("square not extensive at " + base.name(a));
    if (kind == AlgKind::SAM && !base.le(ss, a))
      throw Error("square not co-extensive at " + base.name(a));
    if (kind == AlgKind::SAI && ss != a) throw Error("square not the identity at " + base.name(a));
  }
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = 0; b < base.size(); ++b) {
      if ((kind == AlgKind::SAJ || kind == AlgKind::SAI) &&
          base.le(b, sigma[a]) != base.le(a, sigma[b]))
        throw Error("operation is not self-adjoint at (" + base.name(a) + "," + base.name(b) + ")");
      if ((kind == AlgKind::SAM || kind == AlgKind::SAI) &&
          base.le(sigma[a], b) != base.le(sigma[b], a))
        throw Error("operation is not co-self-adjoint at (" + base.name(a) + "," + base.name(b) + ")");
    }
  return UnaryAlgebra{base, std::move(sigma), kind};
}

// An undirected graph: finite vertices with a symmetric edge relation,
// self-loops allowed.
struct UGraph {
  FinSet vertices;
  Rel edges;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return edges.at(a, b); }
  bool is_reduced() const { return edges.is_reduced(); }
};

inline UGraph ugraph_new(FinSet vertices, Rel edges) {
  if (edges.src() != vertices || edges.tgt() != vertices) throw Error("edge relation is mistyped");
  if (edges != edges.converse()) throw Error("edge relation is not symmetric");
  return UGraph{std::move(vertices), std::move(edges)};
}

inline UGraph complete_graph(std::size_t n) {
  FinSet v = FinSet::range(n, "v");
  Rel e = Rel::full(v, v);
  for (std::size_t i = 0; i < n; ++i) e.set(i, i, false);
  return ugraph_new(v, e);
}

inline UGraph cycle_graph(std::size_t n) {
  FinSet v = FinSet::range(n, "v");
  Rel e(v, v);
  for (std::size_t i = 0; i < n; ++i) {
    e.set(i, (i + 1) % n);
    e.set((i + 1) % n, i);
  }
  return ugraph_new(v, e);
}

inline UGraph loops_graph(std::size_t n) {
  FinSet v = FinSet::range(n, "v");
  return ugraph_new(v, Rel::identity(v));
}

// --- Relation/edge pairs ----------------------------------------------------

// A relation g together with a symmetric relation e that is a self-adjoint
// morphism over g: on side 'j' from g to its converse, on side 'm' the other
// way round. Stores the shared component relation.
struct UgPair {
  Rel g;
  Rel e;
  char side = 'j';
  Rel component;
};

inline UgPair ug_pair_check(const Rel& g, const Rel& e, char side) {
  if (e != e.converse()) throw Error("edge relation is not symmetric");
  const Rel base = side == 'j' ? g : g.converse();  // e : base -> base~
  if (e.src() != base.src() || e.src() != e.tgt()) throw Error("edge relation is mistyped");
  Rel base_conv = base.converse();
  for (std::size_t v = 0; v < e.n_src(); ++v)
    if (base_conv.interior(e.row(v)) != e.row(v))
      throw Error("row " + e.src().name(v) + " does not factor through the relation");
  auto mor = dep_validate(e, base, base_conv);
  if (mor.minus != mor.plus) throw Error("self-adjoint morphism has unequal components");
  Rel stated = e.complement().compose(base).complement();
  if (stated != mor.minus) throw Error("component formula disagrees with the computed maximum");
  return UgPair{g, e, side, mor.minus};
}

// The single-equation test for morphisms of graphs: the image map of r
// factors through both edge relations.
inline bool ug_morphism_check(const Rel& r, const UGraph& g1, const UGraph& g2) {
  if (r.src() != g1.vertices || r.tgt() != g2.vertices) throw Error("graph morphism is mistyped");
  Rel rc = r.converse();
  bool ok = true;
  for_each_subset(g1.size(), [&](const Bits& x) {
    if (ok && r.up(x) != g2.edges.up(rc.down(g1.edges.up(x)))) ok = false;
  });
  return ok;
}

// --- The correspondence with undirected graphs -------------------------------

struct GraphAlgebra {
  UnaryAlgebra alg;
  OpenLattice lat;  // open sets of the edge relation
};

// Open sets of the edge relation with the complement-image involution.
inline GraphAlgebra open_g(const UGraph& g) {
  GraphAlgebra out;
  out.lat = open_obj(g.edges);
  std::vector<std::size_t> sigma(out.lat.sets.size());
  for (std::size_t i = 0; i < out.lat.sets.size(); ++i)
    sigma[i] = out.lat.index_of(g.edges.up(~out.lat.sets[i]));
  out.alg = check_unary_algebra(out.lat.jsl, std::move(sigma), AlgKind::SAI);
  return out;
}

// Join-irreducibles with adjacency "not below the involution image".
inline UGraph pirr_g(const UnaryAlgebra& alg) {
  if (alg.kind != AlgKind::SAI) throw Error("graph construction requires an involutive algebra");
  const auto& js = alg.base.join_irreducibles();
  std::vector<std::string> names;
  for (auto j : js) names.push_back(alg.base.name(j));
  FinSet v{names};
  Rel e(v, v);
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < js.size(); ++b)
      if (!alg.base.le(js[b], alg.s(js[a]))) e.set(a, b);
  return ugraph_new(v, e);
}

// The isomorphism witnessing that an involutive algebra is recovered from
// its graph: q |-> { j : j not below s(q) }, inverse Y |-> s(join(J \ Y)).
struct GrepIso {
  GraphAlgebra image;  // open_g(pirr_g(alg))
  JslMorphism fwd, inv;
};

inline GrepIso grep_iso(const UnaryAlgebra& alg) {
  GrepIso out;
  UGraph graph = pirr_g(alg);
  out.image = open_g(graph);
  const auto& js = alg.base.join_irreducibles();
  std::vector<std::size_t> fwd(alg.base.size());
  for (std::size_t q = 0; q < alg.base.size(); ++q) {
    Bits s(js.size());
    for (std::size_t a = 0; a < js.size(); ++a)
      if (!alg.base.le(js[a], alg.s(q))) s.set(a);
    fwd[q] = out.image.lat.index_of(s);
  }
  std::vector<std::size_t> inv(out.image.lat.sets.size());
  for (std::size_t i = 0; i < out.image.lat.sets.size(); ++i) {
    Bits outside(alg.base.size());
    for (std::size_t a = 0; a < js.size(); ++a)
      if (!out.image.lat.sets[i].test(a)) outside.set(js[a]);
    inv[i] = alg.s(alg.base.join_of(outside));
  }
  out.fwd = morphism_new(alg.base, out.image.lat.jsl, std::move(fwd));
  out.inv = morphism_new(out.image.lat.jsl, alg.base, std::move(inv));
  for (std::size_t q = 0; q < alg.base.size(); ++q) {
    if (out.inv.map[out.fwd.map[q]] != q) throw Error("graph representation failed to round-trip");
    if (out.fwd.map[alg.s(q)] != out.image.alg.s(out.fwd.map[q]))
      throw Error("graph representation does not preserve the involution");
  }
  return out;
}

// The element-of relation from a graph onto the graph of its open-set
// algebra, an isomorphism of graphs-with-structure with converse inverse.
struct GredIso {
  GraphAlgebra algebra;  // open_g(g)
  UGraph image;          // pirr_g of it
  DepMorphism fwd, inv;
};

inline GredIso gred_iso(const UGraph& g) {
  GredIso out;
  out.algebra = open_g(g);
  out.image = pirr_g(out.algebra.alg);
  const auto& js = out.algebra.lat.jsl.join_irreducibles();
  Rel fwd_rel(g.vertices, out.image.vertices);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t a = 0; a < js.size(); ++a)
      if (out.algebra.lat.sets[js[a]].test(v)) fwd_rel.set(v, a);
  out.fwd = dep_validate(fwd_rel, g.edges, out.image.edges);
  out.inv = dep_validate(fwd_rel.converse(), out.image.edges, g.edges);
  if (dep_compose(out.fwd, out.inv).rel != g.edges ||
      dep_compose(out.inv, out.fwd).rel != out.image.edges)
    throw Error("graph reduction failed to round-trip");
  if (!ug_morphism_check(out.fwd.rel, g, out.image))
    throw Error("graph reduction is not a graph-category morphism");
  // Stated components.
  Rel minus(g.vertices, out.image.vertices);
  Rel plus(out.image.vertices, g.vertices);
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t a = 0; a < js.size(); ++a) {
      if (out.algebra.lat.sets[js[a]].is_subset_of(g.edges.row(v))) minus.set(v, a);
      if (g.edges.row(v).is_subset_of(out.algebra.lat.sets[js[a]])) plus.set(a, v);
    }
  if (minus != out.fwd.minus || plus != out.fwd.plus)
    throw Error("graph reduction components disagree with the computed maxima");
  return out;
}

// --- The one-sided functor pairs --------------------------------------------

struct PairAlgebra {
  UnaryAlgebra alg;
  OpenLattice lat;  // open sets of g
};

// Open sets of g with sigma(Y) the image of the complement of the edge map
// of Y, i.e. the duality iso applied after the open-set action of e.
inline PairAlgebra open_j(const UgPair& p) {
  if (p.side != 'j') throw Error("expected a source-side pair");
  PairAlgebra out;
  out.lat = open_obj(p.g);
  Rel edge_open = p.component.converse();  // the open-set action of e : g -> g~
  std::vector<std::size_t> sigma(out.lat.sets.size());
  for (std::size_t i = 0; i < out.lat.sets.size(); ++i)
    sigma[i] = out.lat.index_of(p.g.up(~edge_open.up(out.lat.sets[i])));
  out.alg = check_unary_algebra(out.lat.jsl, std::move(sigma), AlgKind::SAJ);
  return out;
}

inline PairAlgebra open_m(const UgPair& p) {
  if (p.side != 'm') throw Error("expected a target-side pair");
  PairAlgebra out;
  out.lat = open_obj(p.g);
  Rel gc = p.g.converse();
  Rel edge_open = p.component.converse();  // the open-set action of e : g~ -> g
  std::vector<std::size_t> sigma(out.lat.sets.size());
  for (std::size_t i = 0; i < out.lat.sets.size(); ++i)
    sigma[i] = out.lat.index_of(edge_open.up(gc.up(~out.lat.sets[i])));
  out.alg = check_unary_algebra(out.lat.jsl, std::move(sigma), AlgKind::SAM);
  return out;
}

inline UgPair pirr_j(const UnaryAlgebra& alg) {
  if (alg.kind != AlgKind::SAI && alg.kind != AlgKind::SAJ)
    throw Error("source-side pair requires an extensive-square algebra");
  Rel pq = pirr_obj(alg.base);
  const auto& js = alg.base.join_irreducibles();
  Rel e(pq.src(), pq.src());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < js.size(); ++b)
      if (!alg.base.le(js[b], alg.s(js[a]))) e.set(a, b);
  return ug_pair_check(pq, e, 'j');
}

inline UgPair pirr_m(const UnaryAlgebra& alg) {
  if (alg.kind != AlgKind::SAI && alg.kind != AlgKind::SAM)
    throw Error("target-side pair requires a co-extensive-square algebra");
  Rel pq = pirr_obj(alg.base);
  const auto& ms = alg.base.meet_irreducibles();
  Rel e(pq.tgt(), pq.tgt());
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!alg.base.le(alg.s(ms[a]), ms[b])) e.set(a, b);
  return ug_pair_check(pq, e, 'm');
}

// --- Graph isomorphism -------------------------------------------------------

// Plain backtracking with degree and neighbourhood-degree-multiset pruning.
inline std::optional<std::vector<std::size_t>> graph_isomorphism(const UGraph& g1, const UGraph& g2) {
  const std::size_t n = g1.size();
  if (n != g2.size()) return std::nullopt;
  auto profile = [](const UGraph& g, std::size_t v) {
    std::vector<std::size_t> degs;
    for (auto u = g.edges.row(v).find_first(); u != Bits::npos; u = g.edges.row(v).find_next(u))
      degs.push_back(g.edges.row(u).count());
    std::sort(degs.begin(), degs.end());
    degs.push_back(g.adjacent(v, v) ? 1 : 0);
    return degs;
  };
  std::vector<std::vector<std::size_t>> p1(n), p2(n);
  for (std::size_t v = 0; v < n; ++v) {
    p1[v] = profile(g1, v);
    p2[v] = profile(g2, v);
  }
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || p1[v] != p2[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (g1.adjacent(v, u) != g2.adjacent(map[v] = w, map[u])) ok = false;
      if (g1.adjacent(v, v) != g2.adjacent(w, w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

// Reduced graphs are isomorphic in the graph category exactly when they are
// classically isomorphic.
inline std::optional<std::vector<std::size_t>> reduced_graph_iso(const UGraph& g1, const UGraph& g2) {
  if (!g1.is_reduced() || !g2.is_reduced()) throw Error("isomorphism search requires reduced graphs");
  return graph_isomorphism(g1, g2);
}

// Brute-force search for an isomorphism of algebras-with-involution, driven
// by bijections between the join-irreducibles.
inline std::optional<std::vector<std::size_t>> unary_algebra_iso(const UnaryAlgebra& a,
                                                                 const UnaryAlgebra& b) {
  if (a.base.size() != b.base.size() || a.kind != b.kind) return std::nullopt;
  const auto& ja = a.base.join_irreducibles();
  const auto& jb = b.base.join_irreducibles();
  if (ja.size() != jb.size()) return std::nullopt;
  std::vector<std::size_t> perm(jb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> m(a.base.size());
    bool ok = true;
    for (std::size_t q = 0; q < a.base.size() && ok; ++q) {
      Bits img(b.base.size());
      for (std::size_t k = 0; k < ja.size(); ++k)
        if (a.base.le(ja[k], q)) img.set(jb[perm[k]]);
      m[q] = b.base.join_of(img);
    }
    if (!ok) continue;
    std::set<std::size_t> seen(m.begin(), m.end());
    if (seen.size() != m.size()) continue;
    if (morphism_defect(a.base, b.base, m)) continue;
    bool commutes = true;
    for (std::size_t q = 0; q < a.base.size() && commutes; ++q)
      if (m[a.s(q)] != b.s(m[q])) commutes = false;
    if (commutes) return m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// All structure-preserving maps between two algebras of the same kind.
inline std::vector<JslMorphism> unary_algebra_homs(const UnaryAlgebra& a, const UnaryAlgebra& b) {
  std::vector<JslMorphism> out;
  for (auto& f : all_morphisms(a.base, b.base)) {
    bool commutes = true;
    for (std::size_t q = 0; q < a.base.size() && commutes; ++q)
      if (f.map[a.s(q)] != b.s(f.map[q])) commutes = false;
    if (commutes) out.push_back(std::move(f));
  }
  return out;
}

// --- Free one-generated algebras ---------------------------------------------

struct FreeAlgebra {
  UnaryAlgebra alg;
  std::size_t generator = 0;
};

namespace detail {

inline FreeAlgebra fixture(AlgKind kind, const std::vector<std::string>& names,
                           const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                           const std::vector<std::size_t>& sigma, std::size_t gen) {
  Jsl base = Jsl::from_poset(poset_validate(FinSet(names), covers));
  UnaryAlgebra alg = check_unary_algebra(base, sigma, kind);
  return FreeAlgebra{std::move(alg), gen};
}

}  // namespace detail

// The free algebras on one generator, transcribed as explicit order and
// operation tables and re-validated on construction.
inline FreeAlgebra free_one_generated(AlgKind kind) {
  switch (kind) {
    case AlgKind::SAI:
      // bot < s(x v sx) < {x, sx} < x v sx < s(bot)
      return detail::fixture(
          AlgKind::SAI, {"bot", "s(xvsx)", "x", "sx", "xvsx", "s(bot)"},
          {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}, {5, 4, 3, 2, 1, 0}, 2);
    case AlgKind::SAM:
      return detail::fixture(
          AlgKind::SAM,
          {"bot", "s(xvsx)", "sx", "ssx", "ss(xvsx)", "x", "s(bot)", "xvsx", "xvs(bot)"},
          {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 7}, {6, 8}, {7, 8}},
          // sigma: bot->s(bot), s(xvsx)->ss(xvsx), sx->ssx, ssx->sx,
          //        ss(xvsx)->s(xvsx), x->sx, s(bot)->bot, xvsx->s(xvsx),
          //        xvs(bot)->bot
          {6, 4, 3, 2, 1, 2, 0, 1, 0}, 5);
    default:
      return detail::fixture(
          AlgKind::SAJ,
          {"bot", "x", "ssb", "xvssb", "s(xvsx)", "xvs(xvsx)", "sx", "ssx", "xvsx", "svss",
           "ss(xvsx)", "sb"},
          {{0, 1},
           {0, 2},
           {1, 3},
           {2, 3},
           {2, 4},
           {3, 5},
           {4, 5},
           {4, 6},
           {5, 7},
           {5, 8},
           {6, 8},
           {7, 9},
           {8, 9},
           {9, 10},
           {10, 11}},
          // sigma: bot->sb, x->sx, ssb->sb, xvssb->sx, s(xvsx)->ss(xvsx),
          //        xvs(xvsx)->sx, sx->ssx, ssx->sx, xvsx->s(xvsx),
          //        svss->s(xvsx), ss(xvsx)->s(xvsx), sb->ssb
          {11, 6, 11, 6, 10, 6, 7, 6, 4, 4, 4, 2}, 1);
  }
}

// --- Self-adjoint tight decomposition ---------------------------------------

// A self-adjoint tight operation is the join of the one-step morphisms
// indexed by a symmetric relation; returns the inclusion-maximum one.
inline Rel decompose_self_adjoint_tight(const UnaryAlgebra& alg) {
  if (alg.kind != AlgKind::SAJ && alg.kind != AlgKind::SAI)
    throw Error("decomposition requires a self-adjoint operation");
  const Jsl& q = alg.base;
  Jsl qop = q.opposite();
  JslMorphism s = alg.sigma_into_op();
  if (!is_tight(s).tight) throw Error("decomposition requires a tight operation");
  Rel r(q.carrier(), q.carrier());
  std::vector<std::size_t> acc(q.size(), q.top());  // bottom of the opposite
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) {
      JslMorphism up = special_up(q, qop, a, b);
      if (up.le(s)) {
        r.set(a, b);
        for (std::size_t x = 0; x < q.size(); ++x) acc[x] = q.meet(acc[x], up.map[x]);
      }
    }
  if (acc != alg.sigma) throw Error("operation is not the join of its one-step approximations");
  if (r != r.converse()) throw Error("decomposition relation is not symmetric");
  return r;
}

// Conversely, any symmetric relation induces a self-adjoint operation.
inline UnaryAlgebra compose_self_adjoint(const Jsl& q, const Rel& r) {
  if (r.src() != q.carrier() || r.tgt() != q.carrier() || r != r.converse())
    throw Error("expected a symmetric relation on the carrier");
  // The join of the one-step morphisms lives in the opposite order, so
  // sigma(x) is the meet of all b related to some a not above x.
  std::vector<std::size_t> m(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) {
    std::size_t v = q.top();
    for (std::size_t a = 0; a < q.size(); ++a)
      if (!q.le(x, a))
        for (auto b = r.row(a).find_first(); b != Bits::npos; b = r.row(a).find_next(b))
          v = q.meet(v, b);
    m[x] = v;
  }
  return check_unary_algebra(q, std::move(m), AlgKind::SAJ);
}

}  // namespace latrel

#endif  // LATREL_DEMORGAN_HPP_
