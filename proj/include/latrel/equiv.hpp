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

#ifndef LATREL_EQUIV_HPP_
#define LATREL_EQUIV_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latrel/dep.hpp"
#include "latrel/jsl.hpp"

namespace latrel {

// The join-semilattice of open sets of a relation, with element i carrying
// the literal subset sets[i] of base.tgt.
struct OpenLattice {
  Jsl jsl;
  std::vector<Bits> sets;
  Rel base;

  std::size_t index_of(const Bits& s) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] == s) return i;
    throw Error("subset is not open");
  }
};

inline OpenLattice open_obj(const Rel& g) {
  OpenLattice out;
  out.base = g;
  out.sets = g.open_sets();
  std::vector<std::string> names;
  names.reserve(out.sets.size());
  for (const auto& s : out.sets) names.push_back(subset_name(g.tgt(), s));
  FinSet carrier{names};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < out.sets.size(); ++i)
    for (std::size_t j = 0; j < out.sets.size(); ++j)
      if (out.sets[i].is_subset_of(out.sets[j])) pairs.emplace_back(i, j);
  out.jsl = Jsl::from_poset(poset_validate(carrier, pairs));
  return out;
}

// The powerset semilattice arises as the open sets of the identity relation.
inline OpenLattice power_jsl(const FinSet& z) { return open_obj(Rel::identity(z)); }

// Open on morphisms: Y |-> plus~[Y], restricted to open sets.
inline JslMorphism open_mor(const DepMorphism& r, const OpenLattice& og, const OpenLattice& oh) {
  Rel plus_conv = r.plus.converse();
  std::vector<std::size_t> m(og.sets.size());
  for (std::size_t i = 0; i < og.sets.size(); ++i) m[i] = oh.index_of(plus_conv.up(og.sets[i]));
  return morphism_new(og.jsl, oh.jsl, std::move(m));
}

// The irreducible restriction of the complement of the order: the relation
// "not below" on J(Q) x M(Q).
inline Rel pirr_obj(const Jsl& q) {
  std::vector<std::string> jn, mn;
  for (auto j : q.join_irreducibles()) jn.push_back(q.name(j));
  for (auto m : q.meet_irreducibles()) mn.push_back(q.name(m));
  Rel out{FinSet(jn), FinSet(mn)};
  const auto& js = q.join_irreducibles();
  const auto& ms = q.meet_irreducibles();
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!q.le(js[a], ms[b])) out.set(a, b);
  return out;
}

inline Rel nleq_obj(const Jsl& q) {
  Rel out(q.carrier(), q.carrier());
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      if (!q.le(a, b)) out.set(a, b);
  return out;
}

// Pirr on morphisms, with its components given in closed form.
inline DepMorphism pirr_mor(const JslMorphism& f) {
  Rel pq = pirr_obj(f.dom);
  Rel pr = pirr_obj(f.cod);
  const auto& js = f.dom.join_irreducibles();
  const auto& ms_r = f.cod.meet_irreducibles();
  Rel rel(pq.src(), pr.tgt());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms_r.size(); ++b)
      if (!f.cod.le(f.map[js[a]], ms_r[b])) rel.set(a, b);
  DepMorphism out = dep_validate(rel, pq, pr);
  // Cross-check the closed-form components.
  JslMorphism fs = adjoint(f);
  const auto& js_r = f.cod.join_irreducibles();
  const auto& ms_q = f.dom.meet_irreducibles();
  Rel minus(pq.src(), pr.src());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < js_r.size(); ++b)
      if (f.cod.le(js_r[b], f.map[js[a]])) minus.set(a, b);
  Rel plus(pr.tgt(), pq.tgt());
  for (std::size_t a = 0; a < ms_r.size(); ++a)
    for (std::size_t b = 0; b < ms_q.size(); ++b)
      if (f.dom.le(fs.map[ms_r[a]], ms_q[b])) plus.set(a, b);
  if (minus != out.minus || plus != out.plus)
    throw Error("irreducible components disagree with the computed maxima");
  return out;
}

inline DepMorphism nleq_mor(const JslMorphism& f) {
  Rel nq = nleq_obj(f.dom);
  Rel nr = nleq_obj(f.cod);
  Rel rel(nq.src(), nr.tgt());
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    for (std::size_t b = 0; b < f.cod.size(); ++b)
      if (!f.cod.le(f.map[a], b)) rel.set(a, b);
  return dep_validate(rel, nq, nr);
}

struct DepIsoPair {
  DepMorphism fwd, inv;
};

// The isomorphism Pirr Q -> Nleq Q, (j, x) related iff j is not below x.
inline DepIsoPair e_iso(const Jsl& q) {
  Rel pq = pirr_obj(q);
  Rel nq = nleq_obj(q);
  const auto& js = q.join_irreducibles();
  const auto& ms = q.meet_irreducibles();
  Rel fwd_rel(pq.src(), nq.tgt());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t x = 0; x < q.size(); ++x)
      if (!q.le(js[a], x)) fwd_rel.set(a, x);
  Rel inv_rel(nq.src(), pq.tgt());
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!q.le(x, ms[b])) inv_rel.set(x, b);
  DepIsoPair out{dep_validate(fwd_rel, pq, nq), dep_validate(inv_rel, nq, pq)};
  if (dep_compose(out.fwd, out.inv).rel != pq || dep_compose(out.inv, out.fwd).rel != nq)
    throw Error("irreducible/nleq isomorphism failed to round-trip");
  return out;
}

struct JslIsoPair {
  JslMorphism fwd, inv;
};

// rep: Q -> Open(Pirr Q), q |-> the meet-irreducibles not above q.
struct RepIso {
  OpenLattice lat;  // open sets of pirr_obj(q)
  JslMorphism fwd, inv;
};

inline RepIso rep_iso(const Jsl& q) {
  RepIso out;
  Rel pq = pirr_obj(q);
  out.lat = open_obj(pq);
  const auto& ms = q.meet_irreducibles();
  std::vector<std::size_t> fwd(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    Bits s(ms.size());
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!q.le(a, ms[b])) s.set(b);
    fwd[a] = out.lat.index_of(s);
  }
  std::vector<std::size_t> inv(out.lat.sets.size());
  for (std::size_t i = 0; i < out.lat.sets.size(); ++i) {
    Bits outside(q.size());
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!out.lat.sets[i].test(b)) outside.set(ms[b]);
    inv[i] = q.meet_of(outside);
  }
  out.fwd = morphism_new(q, out.lat.jsl, std::move(fwd));
  out.inv = morphism_new(out.lat.jsl, q, std::move(inv));
  if (jsl_compose(out.inv, out.fwd).map != jsl_identity(q).map ||
      jsl_compose(out.fwd, out.inv).map != jsl_identity(out.lat.jsl).map)
    throw Error("representation isomorphism failed to round-trip");
  return out;
}

// red: G -> Pirr(Open G), with inverse the converse element-of relation.
struct RedIso {
  OpenLattice lat;
  Rel pirr;  // pirr_obj(lat.jsl)
  DepMorphism fwd, inv;
};

inline RedIso red_iso(const Rel& g) {
  RedIso out;
  out.lat = open_obj(g);
  out.pirr = pirr_obj(out.lat.jsl);
  const auto& js = out.lat.jsl.join_irreducibles();
  const auto& ms = out.lat.jsl.meet_irreducibles();

  Rel fwd_rel(g.src(), out.pirr.tgt());
  for (std::size_t s = 0; s < g.n_src(); ++s)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!g.row(s).is_subset_of(out.lat.sets[ms[b]])) fwd_rel.set(s, b);
  Rel inv_rel(out.pirr.src(), g.tgt());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t t = 0; t < g.n_tgt(); ++t)
      if (out.lat.sets[js[a]].test(t)) inv_rel.set(a, t);

  out.fwd = dep_validate(fwd_rel, g, out.pirr);
  out.inv = dep_validate(inv_rel, out.pirr, g);
  if (dep_compose(out.fwd, out.inv).rel != g || dep_compose(out.inv, out.fwd).rel != out.pirr)
    throw Error("reduction isomorphism failed to round-trip");

  // The four component relations in closed form.
  Rel fm(g.src(), out.pirr.src());
  for (std::size_t s = 0; s < g.n_src(); ++s)
    for (std::size_t a = 0; a < js.size(); ++a)
      if (out.lat.sets[js[a]].is_subset_of(g.row(s))) fm.set(s, a);
  Rel fp(out.pirr.tgt(), g.tgt());
  for (std::size_t b = 0; b < ms.size(); ++b)
    for (std::size_t t = 0; t < g.n_tgt(); ++t)
      if (!out.lat.sets[ms[b]].test(t)) fp.set(b, t);
  Rel im(out.pirr.src(), g.src());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t s = 0; s < g.n_src(); ++s)
      if (g.row(s).is_subset_of(out.lat.sets[js[a]])) im.set(a, s);
  Rel ip(g.tgt(), out.pirr.tgt());
  for (std::size_t t = 0; t < g.n_tgt(); ++t) {
    Bits co = full_bits(g.n_tgt());
    co.reset(t);
    Bits inco = g.interior(co);
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (inco.is_subset_of(out.lat.sets[ms[b]])) ip.set(t, b);
  }
  if (fm != out.fwd.minus || fp != out.fwd.plus || im != out.inv.minus || ip != out.inv.plus)
    throw Error("reduction components disagree with the computed maxima");
  return out;
}

// Explicit fullness: the morphism g -> h inducing f between the open-set
// lattices, R(g_s, h_t) iff h_t lies in f(G[g_s]).
inline DepMorphism full_inverse(const JslMorphism& f, const OpenLattice& og, const OpenLattice& oh) {
  if (!f.dom.same_as(og.jsl) || !f.cod.same_as(oh.jsl)) throw Error("fullness input is mistyped");
  const Rel& g = og.base;
  const Rel& h = oh.base;
  Rel rel(g.src(), h.tgt());
  for (std::size_t s = 0; s < g.n_src(); ++s) {
    const Bits& img = oh.sets[f.map[og.index_of(g.interior(g.row(s)))]];
    for (auto t = img.find_first(); t != Bits::npos; t = img.find_next(t)) rel.set(s, t);
  }
  return dep_validate(rel, g, h);
}

// The duality isomorphism (Open G)^op -> Open(G~), X |-> G~[complement X].
struct PartialIso {
  OpenLattice lat_op;   // open sets of the converse relation
  Jsl open_g_op;        // (Open G)^op
  JslMorphism fwd, inv;
};

inline PartialIso partial_iso(const Rel& g, const OpenLattice& og) {
  PartialIso out;
  Rel gc = g.converse();
  out.lat_op = open_obj(gc);
  out.open_g_op = og.jsl.opposite();
  std::vector<std::size_t> fwd(og.sets.size()), inv(out.lat_op.sets.size());
  for (std::size_t i = 0; i < og.sets.size(); ++i) fwd[i] = out.lat_op.index_of(gc.up(~og.sets[i]));
  for (std::size_t i = 0; i < out.lat_op.sets.size(); ++i)
    inv[i] = og.index_of(g.up(~out.lat_op.sets[i]));
  out.fwd = morphism_new(out.open_g_op, out.lat_op.jsl, std::move(fwd));
  out.inv = morphism_new(out.lat_op.jsl, out.open_g_op, std::move(inv));
  for (std::size_t i = 0; i < og.sets.size(); ++i)
    if (out.inv.map[out.fwd.map[i]] != i) throw Error("duality isomorphism failed to round-trip");
  return out;
}

// e : Q >-> P M(Q), q |-> the meet-irreducibles not above q.
inline JslMorphism canonical_embed(const Jsl& q, const OpenLattice& pm) {
  const auto& ms = q.meet_irreducibles();
  std::vector<std::size_t> m(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    Bits s(ms.size());
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (!q.le(a, ms[b])) s.set(b);
    m[a] = pm.index_of(s);
  }
  return morphism_new(q, pm.jsl, std::move(m));
}

// sigma : P J(Q) ->> Q, S |-> join S.
inline JslMorphism canonical_quotient(const Jsl& q, const OpenLattice& pj) {
  const auto& js = q.join_irreducibles();
  std::vector<std::size_t> m(pj.sets.size());
  for (std::size_t i = 0; i < pj.sets.size(); ++i) {
    Bits s(q.size());
    for (std::size_t b = 0; b < js.size(); ++b)
      if (pj.sets[i].test(b)) s.set(js[b]);
    m[i] = q.join_of(s);
  }
  return morphism_new(pj.jsl, q, std::move(m));
}

// Factorization data for a morphism out of a powerset: f = sigma_q . (Jf)^up
// where Jf relates z to the join-irreducibles below f({z}).
inline Rel tight_extend_left(const JslMorphism& f, const OpenLattice& pz, const FinSet& z) {
  if (!f.dom.same_as(pz.jsl)) throw Error("extension input is mistyped");
  const Jsl& q = f.cod;
  const auto& js = q.join_irreducibles();
  std::vector<std::string> jn;
  for (auto j : js) jn.push_back(q.name(j));
  Rel out{z, FinSet(jn)};
  for (std::size_t zi = 0; zi < z.size(); ++zi) {
    std::size_t img = f.map[pz.index_of(singleton(z.size(), zi))];
    for (std::size_t b = 0; b < js.size(); ++b)
      if (q.le(js[b], img)) out.set(zi, b);
  }
  return out;
}

// Dual factorization for a morphism into a powerset: f = (Mf)^up . e_q where
// Mf relates m to z whenever the adjoint sends the co-singleton of z below m.
inline Rel tight_extend_right(const JslMorphism& f, const OpenLattice& pz, const FinSet& z) {
  if (!f.cod.same_as(pz.jsl)) throw Error("extension input is mistyped");
  const Jsl& q = f.dom;
  JslMorphism fs = adjoint(f);
  const auto& ms = q.meet_irreducibles();
  std::vector<std::string> mn;
  for (auto m : ms) mn.push_back(q.name(m));
  Rel out{FinSet(mn), z};
  for (std::size_t b = 0; b < ms.size(); ++b)
    for (std::size_t zi = 0; zi < z.size(); ++zi) {
      Bits co = full_bits(z.size());
      co.reset(zi);
      if (q.le(fs.map[pz.index_of(co)], ms[b])) out.set(b, zi);
    }
  return out;
}

// Dedekind-MacNeille completion: the open sets of the complement of the
// order, with x embedded as the complement of its up-set.
struct DmCompletion {
  OpenLattice lat;
  std::vector<std::size_t> embed;  // carrier index -> lattice element
};

inline DmCompletion dm_completion(const Poset& p) {
  DmCompletion out;
  Rel nleq = p.leq.complement();
  out.lat = open_obj(nleq);
  out.embed.resize(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out.embed[x] = out.lat.index_of(nleq.row(x));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.le(x, y) != out.lat.jsl.le(out.embed[x], out.embed[y]))
        throw Error("completion embedding is not an order-embedding");
  return out;
}

}  // namespace latrel

#endif  // LATREL_EQUIV_HPP_
