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

#ifndef LATREL_TENSOR_HPP_
#define LATREL_TENSOR_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latrel/equiv.hpp"

namespace latrel {

// Product carrier with lexicographically paired names "(a,b)".
inline FinSet pair_finset(const FinSet& a, const FinSet& b) {
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  return FinSet(std::move(names));
}

// --- Bi-ideals --------------------------------------------------------------

// Subsets of Q x R are stored over cells indexed (a,b) -> a*|R| + b.
inline std::size_t cell(std::size_t a, std::size_t b, const Jsl& r) { return a * r.size() + b; }

inline Bits bi_ideal_bottom(const Jsl& q, const Jsl& r) {
  Bits s(q.size() * r.size());
  for (std::size_t a = 0; a < q.size(); ++a) s.set(cell(a, r.bottom(), r));
  for (std::size_t b = 0; b < r.size(); ++b) s.set(cell(q.bottom(), b, r));
  return s;
}

// Contains the bottom cross, down-closed in the product order, and closed
// under joins taken in one coordinate at a time.
inline bool is_bi_ideal(const Bits& s, const Jsl& q, const Jsl& r) {
  if (!bi_ideal_bottom(q, r).is_subset_of(s)) return false;
  for (auto c = s.find_first(); c != Bits::npos; c = s.find_next(c)) {
    std::size_t a = c / r.size(), b = c % r.size();
    for (std::size_t a2 = 0; a2 < q.size(); ++a2)
      for (std::size_t b2 = 0; b2 < r.size(); ++b2)
        if (q.le(a2, a) && r.le(b2, b) && !s.test(cell(a2, b2, r))) return false;
    for (auto c2 = s.find_first(); c2 != Bits::npos; c2 = s.find_next(c2)) {
      std::size_t a2 = c2 / r.size(), b2 = c2 % r.size();
      if (a == a2 && !s.test(cell(a, r.join(b, b2), r))) return false;
      if (b == b2 && !s.test(cell(q.join(a, a2), b, r))) return false;
    }
  }
  return true;
}

// Least bi-ideal containing the seed: alternate lateral joins and
// down-closure until stable.
inline Bits bi_ideal_generated(const Bits& seed, const Jsl& q, const Jsl& r) {
  Bits s = seed | bi_ideal_bottom(q, r);
  bool grew = true;
  while (grew) {
    grew = false;
    Bits next = s;
    for (auto c = s.find_first(); c != Bits::npos; c = s.find_next(c)) {
      std::size_t a = c / r.size(), b = c % r.size();
      for (auto c2 = s.find_first(); c2 != Bits::npos; c2 = s.find_next(c2)) {
        std::size_t a2 = c2 / r.size(), b2 = c2 % r.size();
        if (a == a2) next.set(cell(a, r.join(b, b2), r));
        if (b == b2) next.set(cell(q.join(a, a2), b, r));
      }
    }
    Bits down = next;
    for (auto c = next.find_first(); c != Bits::npos; c = next.find_next(c)) {
      std::size_t a = c / r.size(), b = c % r.size();
      for (std::size_t a2 = 0; a2 < q.size(); ++a2)
        if (q.le(a2, a))
          for (std::size_t b2 = 0; b2 < r.size(); ++b2)
            if (r.le(b2, b)) down.set(cell(a2, b2, r));
    }
    if (down != s) {
      s = down;
      grew = true;
    }
  }
  return s;
}

// The tensor product as the lattice of all bi-ideals ordered by inclusion.
// The carrier is enumerated through the morphisms Q -> R^op; each morphism h
// corresponds to the bi-ideal { (a,b) : b <= h(a) }.
struct TensorLattice {
  Jsl jsl;
  std::vector<Bits> ideals;
  Jsl left, right;

  std::size_t index_of(const Bits& s) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i] == s) return i;
    throw Error("not an element of the tensor product");
  }

  // The canonical bilinear pairing.
  std::size_t beta(std::size_t a, std::size_t b) const {
    Bits seed(left.size() * right.size());
    seed.set(a * right.size() + b);
    return index_of(bi_ideal_generated(seed, left, right));
  }
};

inline TensorLattice tensor(const Jsl& q, const Jsl& r, std::size_t cell_guard = 20) {
  if (q.size() * r.size() > cell_guard)
    throw Error("tensor carrier enumeration refused for " + std::to_string(q.size() * r.size()) +
                " cells; use bi_ideal_generated for on-demand elements");
  TensorLattice t;
  t.left = q;
  t.right = r;
  Jsl rop = r.opposite();
  for (const auto& h : all_morphisms(q, rop)) {
    Bits s(q.size() * r.size());
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b)
        if (r.le(b, h.map[a])) s.set(cell(a, b, r));
    t.ideals.push_back(s);
  }
  std::sort(t.ideals.begin(), t.ideals.end(), lex_less);
  FinSet carrier = FinSet::range(t.ideals.size(), "t");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < t.ideals.size(); ++i)
    for (std::size_t j = 0; j < t.ideals.size(); ++j)
      if (t.ideals[i].is_subset_of(t.ideals[j])) pairs.emplace_back(i, j);
  t.jsl = Jsl::from_poset(poset_validate(carrier, pairs));
  return t;
}

// A bilinear map (Q,R) -> S given by its value table, indexed by cells.
inline std::optional<std::string> bilinear_defect(const std::vector<std::size_t>& beta, const Jsl& q,
                                                  const Jsl& r, const Jsl& s) {
  if (beta.size() != q.size() * r.size()) throw Error("bilinear table has wrong arity");
  for (std::size_t a = 0; a < q.size(); ++a)
    if (beta[cell(a, r.bottom(), r)] != s.bottom())
      return "bottom is not absorbed at (" + q.name(a) + ",bot)";
  for (std::size_t b = 0; b < r.size(); ++b)
    if (beta[cell(q.bottom(), b, r)] != s.bottom())
      return "bottom is not absorbed at (bot," + r.name(b) + ")";
  for (std::size_t a1 = 0; a1 < q.size(); ++a1)
    for (std::size_t a2 = 0; a2 < q.size(); ++a2)
      for (std::size_t b = 0; b < r.size(); ++b)
        if (beta[cell(q.join(a1, a2), b, r)] != s.join(beta[cell(a1, b, r)], beta[cell(a2, b, r)]))
          return "join in the left argument is not preserved at (" + q.name(a1) + " v " + q.name(a2) +
                 "," + r.name(b) + ")";
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b1 = 0; b1 < r.size(); ++b1)
      for (std::size_t b2 = 0; b2 < r.size(); ++b2)
        if (beta[cell(a, r.join(b1, b2), r)] != s.join(beta[cell(a, b1, r)], beta[cell(a, b2, r)]))
          return "join in the right argument is not preserved at (" + q.name(a) + "," + r.name(b1) +
                 " v " + r.name(b2) + ")";
  return std::nullopt;
}

// Universal property: the unique morphism out of the tensor product whose
// induced bilinear map is beta. Action: join of beta over the bi-ideal.
inline JslMorphism extend_bimorphism(const std::vector<std::size_t>& beta, const TensorLattice& t,
                                     const Jsl& s) {
  if (auto d = bilinear_defect(beta, t.left, t.right, s)) throw Error("not bilinear: " + *d);
  std::vector<std::size_t> m(t.ideals.size());
  for (std::size_t i = 0; i < t.ideals.size(); ++i) {
    std::size_t acc = s.bottom();
    for (auto c = t.ideals[i].find_first(); c != Bits::npos; c = t.ideals[i].find_next(c))
      acc = s.join(acc, beta[c]);
    m[i] = acc;
  }
  return morphism_new(t.jsl, s, std::move(m));
}

// --- Tight homs and tight tensors -------------------------------------------

// The sub-join-semilattice of tight morphisms of JSL[Q,R].
inline HomLattice tight_hom(const Jsl& q, const Jsl& r) {
  HomLattice h;
  h.left = q;
  h.right = r;
  for (auto& f : all_morphisms(q, r))
    if (is_tight(f).tight) h.elems.push_back(std::move(f));
  FinSet carrier = FinSet::range(h.elems.size(), "f");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < h.elems.size(); ++i)
    for (std::size_t j = 0; j < h.elems.size(); ++j)
      if (h.elems[i].le(h.elems[j])) pairs.emplace_back(i, j);
  h.jsl = Jsl::from_poset(poset_validate(carrier, pairs));
  return h;
}

// The tight tensor product: tight morphisms from the opposite of the left
// factor into the right factor.
inline HomLattice tight_tensor(const Jsl& q, const Jsl& r) { return tight_hom(q.opposite(), r); }

// --- Synchronous (Kronecker) product ---------------------------------------

inline Rel sync_product(const Rel& g, const Rel& h) {
  Rel out{pair_finset(g.src(), h.src()), pair_finset(g.tgt(), h.tgt())};
  for (std::size_t a = 0; a < g.n_src(); ++a)
    for (std::size_t c = 0; c < h.n_src(); ++c) {
      std::size_t row = a * h.n_src() + c;
      for (auto b = g.row(a).find_first(); b != Bits::npos; b = g.row(a).find_next(b))
        for (auto d = h.row(c).find_first(); d != Bits::npos; d = h.row(c).find_next(d))
          out.set(row, b * h.n_tgt() + d);
    }
  return out;
}

inline DepMorphism sync_on_morphisms(const DepMorphism& r, const DepMorphism& s) {
  DepMorphism out = dep_validate(sync_product(r.rel, s.rel), sync_product(r.dom, s.dom),
                                 sync_product(r.cod, s.cod));
  if (out.minus != sync_product(r.minus, s.minus) || out.plus != sync_product(r.plus, s.plus))
    throw Error("synchronous components disagree with the computed maxima");
  return out;
}

// --- The relabeling Pirr(Q tensor_t R) = Pirr Q sync Pirr R ------------------

struct TsIso {
  HomLattice tt;                     // Q tensor_t R
  Rel pirr_tt;                       // Pirr of it
  Rel sync;                          // Pirr Q sync Pirr R
  std::vector<std::size_t> src_map;  // J(tt) position -> pair position
  std::vector<std::size_t> tgt_map;  // M(tt) position -> pair position
  DepMorphism fwd, inv;
};

inline TsIso ts_iso(const Jsl& q, const Jsl& r) {
  TsIso out;
  out.tt = tight_tensor(q, r);
  out.pirr_tt = pirr_obj(out.tt.jsl);
  out.sync = sync_product(pirr_obj(q), pirr_obj(r));
  Jsl qop = out.tt.left;  // q.opposite()

  const auto& js_t = out.tt.jsl.join_irreducibles();
  const auto& ms_t = out.tt.jsl.meet_irreducibles();
  const auto& js_q = q.join_irreducibles();
  const auto& js_r = r.join_irreducibles();
  const auto& ms_q = q.meet_irreducibles();
  const auto& ms_r = r.meet_irreducibles();
  if (js_t.size() != js_q.size() * js_r.size() || ms_t.size() != ms_q.size() * ms_r.size())
    throw Error("irreducible counts of the tight tensor are off");

  auto pos_in = [](const std::vector<std::size_t>& v, std::size_t x) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == x) return i;
    throw Error("element is not irreducible");
  };

  out.src_map.resize(js_t.size());
  for (std::size_t a = 0; a < js_q.size(); ++a)
    for (std::size_t b = 0; b < js_r.size(); ++b) {
      JslMorphism up = special_up(qop, r, js_q[a], js_r[b]);
      std::size_t e = out.tt.index_of(up);
      out.src_map[pos_in(js_t, e)] = a * js_r.size() + b;
    }
  out.tgt_map.resize(ms_t.size());
  for (std::size_t a = 0; a < ms_q.size(); ++a)
    for (std::size_t b = 0; b < ms_r.size(); ++b) {
      JslMorphism dn = special_down(qop, r, ms_q[a], ms_r[b]);
      std::size_t e = out.tt.index_of(dn);
      out.tgt_map[pos_in(ms_t, e)] = a * ms_r.size() + b;
    }

  for (std::size_t i = 0; i < js_t.size(); ++i)
    for (std::size_t k = 0; k < ms_t.size(); ++k)
      if (out.pirr_tt.at(i, k) != out.sync.at(out.src_map[i], out.tgt_map[k]))
        throw Error("the relabeling does not preserve edges");

  // As mutually inverse morphisms witnessed by the two bijections.
  Rel fwd_rel(out.pirr_tt.src(), out.sync.tgt());
  for (std::size_t i = 0; i < js_t.size(); ++i)
    for (std::size_t k = 0; k < ms_t.size(); ++k)
      if (out.pirr_tt.at(i, k)) fwd_rel.set(i, out.tgt_map[k]);
  Rel inv_rel(out.sync.src(), out.pirr_tt.tgt());
  for (std::size_t i = 0; i < js_t.size(); ++i)
    for (std::size_t k = 0; k < ms_t.size(); ++k)
      if (out.pirr_tt.at(i, k)) inv_rel.set(out.src_map[i], k);
  out.fwd = dep_validate(fwd_rel, out.pirr_tt, out.sync);
  out.inv = dep_validate(inv_rel, out.sync, out.pirr_tt);
  if (dep_compose(out.fwd, out.inv).rel != out.pirr_tt || dep_compose(out.inv, out.fwd).rel != out.sync)
    throw Error("the relabeling failed to round-trip");
  return out;
}

// --- The duality of tight tensors -------------------------------------------

// nu : (Q^op tensor_t R^op)^op -> Q tensor_t R. The domain carrier consists
// of the tight morphisms Q -> R^op; nu(f)(x) joins the join-irreducibles of
// R whose adjoint image is not below x.
struct NuIso {
  HomLattice dom;                 // tight morphisms Q -> R^op
  HomLattice cod;                 // tight morphisms Q^op -> R
  std::vector<std::size_t> map;   // dom element -> cod element
};

inline NuIso nu_iso(const Jsl& q, const Jsl& r) {
  NuIso out;
  out.dom = tight_hom(q, r.opposite());
  out.cod = tight_tensor(q, r);
  out.map.resize(out.dom.elems.size());
  for (std::size_t i = 0; i < out.dom.elems.size(); ++i) {
    JslMorphism fs = adjoint(out.dom.elems[i]);
    std::vector<std::size_t> m(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) {
      Bits s(r.size());
      for (auto j : r.join_irreducibles())
        if (!q.le(fs.map[j], x)) s.set(j);
      m[x] = r.join_of(s);
    }
    out.map[i] = out.cod.index_of(JslMorphism{out.cod.left, out.cod.right, std::move(m)});
  }
  // Bijective and order-reversing, as a morphism out of the opposite.
  std::set<std::size_t> img(out.map.begin(), out.map.end());
  if (img.size() != out.map.size() || out.dom.elems.size() != out.cod.elems.size())
    throw Error("tight duality map is not bijective");
  for (std::size_t i = 0; i < out.dom.elems.size(); ++i)
    for (std::size_t k = 0; k < out.dom.elems.size(); ++k)
      if (out.dom.elems[i].le(out.dom.elems[k]) !=
          out.cod.elems[out.map[k]].le(out.cod.elems[out.map[i]]))
        throw Error("tight duality map does not reverse the order");
  return out;
}

// --- Tightness inside the relation category ---------------------------------

// The rectangle spanned by a target element's fan-in and a source element's
// fan-out, with its closed-form components.
inline DepMorphism basic_biclique(const Rel& g, const Rel& h, std::size_t g_t, std::size_t h_s) {
  Rel gc = g.converse();
  Rel rel = Rel::rectangle(g.src(), h.tgt(), gc.row(g_t), h.row(h_s));
  DepMorphism out = dep_validate(rel, g, h);
  Rel minus = Rel::rectangle(g.src(), h.src(), full_bits(g.n_src()), h.cl(Bits(h.n_src())))
                  .unite(Rel::rectangle(g.src(), h.src(), gc.row(g_t), h.cl(singleton(h.n_src(), h_s))));
  Rel plus = Rel::rectangle(h.tgt(), g.tgt(), full_bits(h.n_tgt()), gc.cl(Bits(g.n_tgt())))
                 .unite(Rel::rectangle(h.tgt(), g.tgt(), h.row(h_s), gc.cl(singleton(g.n_tgt(), g_t))));
  if (minus != out.minus || plus != out.plus)
    throw Error("biclique components disagree with the computed maxima");
  return out;
}

inline DepMorphism basic_independent(const Rel& g, const Rel& h, std::size_t g_s, std::size_t h_t) {
  Rel gc = g.converse();
  Bits co_s = full_bits(g.n_src());
  co_s.reset(g_s);
  Bits co_t = full_bits(h.n_tgt());
  co_t.reset(h_t);
  Bits left = gc.interior(co_s);               // sources whose fan-out misses g_s's closure
  Bits right = h.interior(co_t);
  Bits all_left = gc.up(full_bits(g.n_tgt()));
  Bits all_right = h.up(full_bits(h.n_src()));
  Rel rel = Rel::rectangle(g.src(), h.tgt(), left, all_right)
                .unite(Rel::rectangle(g.src(), h.tgt(), all_left, right));
  return dep_validate(rel, g, h);
}

// A morphism is tight iff it equals the union of the basic bicliques it
// contains.
inline bool is_tight_dep(const DepMorphism& r) {
  Rel gc = r.dom.converse();
  Rel acc(r.dom.src(), r.cod.tgt());
  for (std::size_t g_t = 0; g_t < r.dom.n_tgt(); ++g_t)
    for (std::size_t h_s = 0; h_s < r.cod.n_src(); ++h_s) {
      Rel bc = Rel::rectangle(r.dom.src(), r.cod.tgt(), gc.row(g_t), r.cod.row(h_s));
      if (bc.subset_of(r.rel)) acc = acc.unite(bc);
    }
  return acc == r.rel;
}

// Re-tuples a tight morphism (G sync H) -> I into a tight morphism
// G -> (H~ sync I).
inline DepMorphism rtup(const DepMorphism& r, const Rel& g, const Rel& h, const Rel& i) {
  if (r.dom != sync_product(g, h) || r.cod != i) throw Error("re-tupling input is mistyped");
  if (!is_tight_dep(r)) throw Error("re-tupling requires a tight morphism");
  Rel hc = h.converse();
  Rel cod = sync_product(hc, i);
  Rel rel(g.src(), cod.tgt());
  for (std::size_t gs = 0; gs < g.n_src(); ++gs)
    for (std::size_t hs = 0; hs < h.n_src(); ++hs)
      for (std::size_t it = 0; it < i.n_tgt(); ++it)
        if (r.rel.at(gs * h.n_src() + hs, it)) rel.set(gs, hs * i.n_tgt() + it);
  DepMorphism out = dep_validate(rel, g, cod);
  if (!is_tight_dep(out)) throw Error("re-tupling failed to stay tight");
  return out;
}

inline DepMorphism rtup_inv(const DepMorphism& s, const Rel& g, const Rel& h, const Rel& i) {
  Rel hc = h.converse();
  if (s.dom != g || s.cod != sync_product(hc, i)) throw Error("re-tupling input is mistyped");
  if (!is_tight_dep(s)) throw Error("re-tupling requires a tight morphism");
  Rel dom = sync_product(g, h);
  Rel rel(dom.src(), i.tgt());
  for (std::size_t gs = 0; gs < g.n_src(); ++gs)
    for (std::size_t hs = 0; hs < h.n_src(); ++hs)
      for (std::size_t it = 0; it < i.n_tgt(); ++it)
        if (s.rel.at(gs, hs * i.n_tgt() + it)) rel.set(gs * h.n_src() + hs, it);
  return dep_validate(rel, dom, i);
}

}  // namespace latrel

#endif  // LATREL_TENSOR_HPP_
