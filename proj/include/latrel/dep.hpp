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

#ifndef LATREL_DEP_HPP_
#define LATREL_DEP_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latrel/rel.hpp"

namespace latrel {

// A morphism G -> H of the category of relations-with-witnesses: a relation
// rel from G's source to H's target that factors as minus;H = rel = G;plus~.
// (minus, plus) are always the inclusion-maximum witnesses.
struct DepMorphism {
  Rel dom, cod;
  Rel rel;
  Rel minus;  // dom.src x cod.src
  Rel plus;   // cod.tgt x dom.tgt
};

// Maximum witness candidates: minus relates g_s to every h_s whose cod-row
// lies inside rel[g_s]; plus dually on the converse side.
inline std::pair<Rel, Rel> dep_components(const Rel& rel, const Rel& dom, const Rel& cod) {
  Rel minus(dom.src(), cod.src());
  for (std::size_t gs = 0; gs < dom.n_src(); ++gs)
    for (std::size_t hs = 0; hs < cod.n_src(); ++hs)
      if (cod.row(hs).is_subset_of(rel.row(gs))) minus.set(gs, hs);
  Rel dom_c = dom.converse();
  Rel rel_c = rel.converse();
  Rel plus(cod.tgt(), dom.tgt());
  for (std::size_t ht = 0; ht < cod.n_tgt(); ++ht)
    for (std::size_t gt = 0; gt < dom.n_tgt(); ++gt)
      if (dom_c.row(gt).is_subset_of(rel_c.row(ht))) plus.set(ht, gt);
  return {minus, plus};
}

inline std::optional<DepMorphism> dep_try_validate(const Rel& rel, const Rel& dom, const Rel& cod) {
  if (rel.src() != dom.src() || rel.tgt() != cod.tgt()) throw Error("morphism relation is mistyped");
  auto [minus, plus] = dep_components(rel, dom, cod);
  if (minus.compose(cod) != rel) return std::nullopt;
  if (dom.compose(plus.converse()) != rel) return std::nullopt;
  return DepMorphism{dom, cod, rel, minus, plus};
}

inline DepMorphism dep_validate(const Rel& rel, const Rel& dom, const Rel& cod) {
  if (rel.src() != dom.src() || rel.tgt() != cod.tgt()) throw Error("morphism relation is mistyped");
  auto [minus, plus] = dep_components(rel, dom, cod);
  Rel left = minus.compose(cod);
  if (left != rel) {
    for (std::size_t gs = 0; gs < rel.n_src(); ++gs)
      if (left.row(gs) != rel.row(gs))
        throw Error("not a morphism: row " + dom.src().name(gs) + " does not factor through the codomain");
  }
  Rel right = dom.compose(plus.converse());
  if (right != rel) {
    for (std::size_t gs = 0; gs < rel.n_src(); ++gs)
      if (right.row(gs) != rel.row(gs))
        throw Error("not a morphism: row " + dom.src().name(gs) + " does not factor through the domain");
  }
  return DepMorphism{dom, cod, rel, minus, plus};
}

inline DepMorphism dep_identity(const Rel& g) { return dep_validate(g, g, g); }

inline DepMorphism dep_compose(const DepMorphism& r, const DepMorphism& s) {
  if (r.cod != s.dom) throw Error("composition type mismatch");
  return dep_validate(r.minus.compose(s.rel), r.dom, s.cod);
}

inline DepMorphism dep_dual(const DepMorphism& r) {
  DepMorphism out;
  out.dom = r.cod.converse();
  out.cod = r.dom.converse();
  out.rel = r.rel.converse();
  out.minus = r.plus;
  out.plus = r.minus;
  return out;
}

inline DepMorphism dep_empty(const Rel& dom, const Rel& cod) {
  return dep_validate(Rel(dom.src(), cod.tgt()), dom, cod);
}

inline DepMorphism dep_union(const DepMorphism& a, const DepMorphism& b) {
  return dep_validate(a.rel.unite(b.rel), a.dom, a.cod);
}

// Largest morphism: everything non-isolated on the left times everything
// covered on the right.
inline DepMorphism dep_top(const Rel& dom, const Rel& cod) {
  Bits lhs = dom.converse().up(full_bits(dom.n_tgt()));
  Bits rhs = cod.up(full_bits(cod.n_src()));
  return dep_validate(Rel::rectangle(dom.src(), cod.tgt(), lhs, rhs), dom, cod);
}

// Monos are detected through the closure operators: cl over the morphism
// agrees with cl over the domain on every subset. Epis dually.
inline bool is_dep_mono(const DepMorphism& r) {
  bool ok = true;
  for_each_subset(r.dom.n_src(), [&](const Bits& x) {
    if (ok && r.rel.down(r.rel.up(x)) != r.dom.cl(x)) ok = false;
  });
  return ok;
}

inline bool is_dep_epi(const DepMorphism& r) {
  bool ok = true;
  for_each_subset(r.cod.n_tgt(), [&](const Bits& y) {
    if (ok && r.rel.up(r.rel.down(y)) != r.cod.interior(y)) ok = false;
  });
  return ok;
}

// Closes a witness pair to the components of the induced morphism.
inline std::pair<Rel, Rel> cover_close(const Rel& left, const Rel& right, const Rel& dom, const Rel& cod) {
  if (left.src() != dom.src() || left.tgt() != cod.src() || right.src() != cod.tgt() ||
      right.tgt() != dom.tgt())
    throw Error("witness pair is mistyped");
  if (left.compose(cod) != dom.compose(right.converse())) throw Error("not a witness pair");
  Rel minus(dom.src(), cod.src());
  for (std::size_t gs = 0; gs < dom.n_src(); ++gs) {
    Bits closed = cod.cl(left.row(gs));
    for (auto hs = closed.find_first(); hs != Bits::npos; hs = closed.find_next(hs)) minus.set(gs, hs);
  }
  Rel dom_conv = dom.converse();
  Rel plus(cod.tgt(), dom.tgt());
  for (std::size_t ht = 0; ht < cod.n_tgt(); ++ht) {
    Bits closed = dom_conv.cl(right.row(ht));
    for (auto gt = closed.find_first(); gt != Bits::npos; gt = closed.find_next(gt)) plus.set(ht, gt);
  }
  return {minus, plus};
}

// Inverse through the explicit fullness construction: when the open-set map
// of r is bijective, S(h_s, g_t) iff g_t lies in the f-preimage image of
// cod's row. Returns nothing when r is not invertible.
inline std::optional<DepMorphism> dep_inverse(const DepMorphism& r) {
  auto opens_g = r.dom.open_sets();
  auto opens_h = r.cod.open_sets();
  if (opens_g.size() != opens_h.size()) return std::nullopt;
  Rel plus_conv = r.plus.converse();
  // Open(r) as a map between the two open-set families.
  std::map<Bits, Bits> fwd;
  std::set<Bits> image;
  for (const auto& y : opens_g) {
    Bits v = plus_conv.up(y);
    fwd[y] = v;
    image.insert(v);
  }
  if (image.size() != opens_g.size()) return std::nullopt;
  std::map<Bits, Bits> bwd;
  for (const auto& [y, v] : fwd) bwd[v] = y;
  Rel inv_rel(r.cod.src(), r.dom.tgt());
  for (std::size_t hs = 0; hs < r.cod.n_src(); ++hs) {
    Bits img = bwd.at(r.cod.interior(r.cod.row(hs)));
    for (auto gt = img.find_first(); gt != Bits::npos; gt = img.find_next(gt)) inv_rel.set(hs, gt);
  }
  auto s = dep_try_validate(inv_rel, r.cod, r.dom);
  if (!s) return std::nullopt;
  if (dep_compose(r, *s).rel != r.dom || dep_compose(*s, r).rel != r.cod) return std::nullopt;
  return s;
}

inline bool is_dep_iso(const DepMorphism& r) { return dep_inverse(r).has_value(); }

// Restriction of g to representatives of the irreducibles of its open-set
// lattice. Returns the reduced relation together with an isomorphism onto it.
struct DepReduction {
  Rel reduced;
  DepMorphism iso;  // g -> reduced
};

inline DepReduction dep_reduce(const Rel& g) {
  auto opens = g.open_sets();
  // in_G(co-singleton) for each target element.
  std::vector<Bits> interiors(g.n_tgt());
  for (std::size_t t = 0; t < g.n_tgt(); ++t) {
    Bits co = full_bits(g.n_tgt());
    co.reset(t);
    interiors[t] = g.interior(co);
  }
  // Irreducibles of the inclusion-ordered open-set family.
  auto union_of_strict_subs = [&](const Bits& o) {
    Bits u(g.n_tgt());
    for (const auto& p : opens)
      if (p != o && p.is_subset_of(o)) u |= p;
    return u;
  };
  std::vector<std::size_t> j_reps, m_reps;
  for (const auto& o : opens) {
    if (o.any() && union_of_strict_subs(o) != o) {
      // join-irreducible open set; pick the least source row realizing it
      for (std::size_t s = 0; s < g.n_src(); ++s)
        if (g.row(s) == o) {
          j_reps.push_back(s);
          break;
        }
    }
  }
  for (const auto& o : opens) {
    // meet-irreducible iff covered by exactly one open set
    std::size_t cover_count = 0;
    for (const auto& p : opens) {
      if (!o.is_subset_of(p) || p == o) continue;
      bool is_cover = true;
      for (const auto& q : opens)
        if (q != o && q != p && o.is_subset_of(q) && q.is_subset_of(p)) {
          is_cover = false;
          break;
        }
      if (is_cover) ++cover_count;
    }
    if (cover_count == 1) {
      for (std::size_t t = 0; t < g.n_tgt(); ++t)
        if (interiors[t] == o) {
          m_reps.push_back(t);
          break;
        }
    }
  }
  std::sort(j_reps.begin(), j_reps.end());
  std::sort(m_reps.begin(), m_reps.end());

  std::vector<std::string> sn, tn;
  for (auto s : j_reps) sn.push_back(g.src().name(s));
  for (auto t : m_reps) tn.push_back(g.tgt().name(t));
  Rel reduced{FinSet(sn), FinSet(tn)};
  for (std::size_t i = 0; i < j_reps.size(); ++i)
    for (std::size_t k = 0; k < m_reps.size(); ++k)
      if (g.at(j_reps[i], m_reps[k])) reduced.set(i, k);

  // g -> reduced through the witness (row-matching, column-matching).
  Rel left(g.src(), reduced.src());
  for (std::size_t s = 0; s < g.n_src(); ++s)
    for (std::size_t i = 0; i < j_reps.size(); ++i)
      if (g.row(j_reps[i]).is_subset_of(g.row(s))) left.set(s, i);
  Rel rel = left.compose(reduced);
  DepReduction out{reduced, dep_validate(rel, g, reduced)};
  if (!out.reduced.is_reduced()) throw Error("reduction failed to produce a reduced relation");
  if (!dep_inverse(out.iso)) throw Error("reduction iso is not invertible");
  return out;
}

// All morphisms dom -> cod, enumerated per-row: each source row can take any
// union of codomain rows, subject to both factorizations. Guarded.
inline std::vector<Rel> dep_hom_all(const Rel& dom, const Rel& cod) {
  std::vector<Bits> row_choices = cod.open_sets();
  std::vector<Rel> out;
  std::vector<Bits> rows(dom.n_src(), Bits(cod.n_tgt()));
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dom.n_src()) {
      Rel cand(dom.src(), cod.tgt(), rows);
      if (dep_try_validate(cand, dom, cod)) out.push_back(cand);
      return;
    }
    for (const auto& c : row_choices) {
      rows[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace latrel

#endif  // LATREL_DEP_HPP_
