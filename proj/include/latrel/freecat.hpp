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

#ifndef LATREL_FREECAT_HPP_
#define LATREL_FREECAT_HPP_

#include <utility>
#include <vector>

#include "latrel/equiv.hpp"

namespace latrel {

// Free poset on a set: the discrete order. Unit and counit are identity
// carrier maps.
inline Poset free_poset(const FinSet& x) {
  return Poset{x, Rel::identity(x)};
}

// Downsets of a poset arise as the open sets of the converse order.
inline OpenLattice downset_lattice(const Poset& p) { return open_obj(p.leq.converse()); }

// Upsets with unions and intersections, a distributive lattice.
inline OpenLattice birkhoff_up(const Poset& p) { return open_obj(p.leq); }

// Join-irreducibles under the reversed order.
inline Poset birkhoff_ji(const Jsl& d) {
  if (!d.is_distributive()) throw Error("duality requires a distributive semilattice");
  const auto& js = d.join_irreducibles();
  std::vector<std::string> names;
  for (auto j : js) names.push_back(d.name(j));
  FinSet carrier{names};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < js.size(); ++b)
      if (d.le(js[b], js[a])) pairs.emplace_back(a, b);
  return poset_validate(carrier, pairs);
}

// alpha: p |-> its principal upset, an element of Ji(Up(P)).
inline std::vector<std::size_t> birkhoff_alpha(const Poset& p, const OpenLattice& up) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = up.index_of(p.leq.row(x));
  // Principal upsets are join-irreducible in the upset lattice.
  const auto& js = up.jsl.join_irreducibles();
  for (auto e : out)
    if (std::find(js.begin(), js.end(), e) == js.end())
      throw Error("principal upset is not join-irreducible");
  return out;
}

// beta: d |-> the join-irreducibles below d, an isomorphism onto the
// downsets of the irreducible poset.
struct BirkhoffBeta {
  OpenLattice lat;  // downsets of (J(D), <=)
  JslMorphism iso;
};

inline BirkhoffBeta birkhoff_beta(const Jsl& d) {
  if (!d.is_distributive()) throw Error("duality requires a distributive semilattice");
  BirkhoffBeta out;
  Poset ji = birkhoff_ji(d);
  out.lat = open_obj(ji.leq);  // upsets of the reversed order = downsets of the original
  const auto& js = d.join_irreducibles();
  std::vector<std::size_t> m(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    Bits s(js.size());
    for (std::size_t a = 0; a < js.size(); ++a)
      if (d.le(js[a], x)) s.set(a);
    m[x] = out.lat.index_of(s);
  }
  out.iso = morphism_new(d, out.lat.jsl, std::move(m));
  if (!is_iso(out.iso)) throw Error("duality representation is not bijective");
  return out;
}

// A bounded-distributive-lattice morphism: preserves bottom, join, top, meet.
inline bool is_dl_morphism(const JslMorphism& f) {
  if (f.map[f.dom.top()] != f.cod.top()) return false;
  for (std::size_t a = 0; a < f.dom.size(); ++a)
    for (std::size_t b = a; b < f.dom.size(); ++b)
      if (f.map[f.dom.meet(a, b)] != f.cod.meet(f.map[a], f.map[b])) return false;
  return true;
}

// --- Free join-semilattice on a poset ----------------------------------------

struct FreeJsl {
  OpenLattice lat;                 // downsets under union
  std::vector<std::size_t> unit;   // p |-> its principal downset
};

inline FreeJsl free_jsl(const Poset& p) {
  FreeJsl out;
  out.lat = downset_lattice(p);
  Rel gc = p.leq.converse();
  out.unit.resize(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out.unit[x] = out.lat.index_of(gc.row(x));
  return out;
}

// Counit: union of a downset of the carrier, as a semilattice morphism.
inline JslMorphism free_jsl_counit(const Jsl& q, const OpenLattice& dn) {
  std::vector<std::size_t> m(dn.sets.size());
  for (std::size_t i = 0; i < dn.sets.size(); ++i) m[i] = q.join_of(dn.sets[i]);
  return morphism_new(dn.jsl, q, std::move(m));
}

// --- Free distributive lattice on a join-semilattice -------------------------

struct FreeDl {
  OpenLattice lat;    // downsets of the carrier, a distributive lattice
  JslMorphism unit;   // a |-> complement of its up-set
};

inline FreeDl free_dl(const Jsl& q) {
  FreeDl out;
  out.lat = downset_lattice(q.poset());
  if (!out.lat.jsl.is_distributive()) throw Error("downset lattice is not distributive");
  std::vector<std::size_t> m(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) m[a] = out.lat.index_of(~q.above(a));
  out.unit = morphism_new(q, out.lat.jsl, std::move(m));
  return out;
}

// Counit on a distributive lattice: the meet of the meet-irreducibles
// outside the downset.
inline JslMorphism free_dl_counit(const Jsl& d, const OpenLattice& dn) {
  if (!d.is_distributive()) throw Error("counit requires a distributive semilattice");
  std::vector<std::size_t> m(dn.sets.size());
  for (std::size_t i = 0; i < dn.sets.size(); ++i) {
    Bits outside(d.size());
    for (auto mm : d.meet_irreducibles())
      if (!dn.sets[i].test(mm)) outside.set(mm);
    m[i] = d.meet_of(outside);
  }
  JslMorphism eps = morphism_new(dn.jsl, d, std::move(m));
  if (!is_dl_morphism(eps)) throw Error("counit is not a lattice morphism");
  return eps;
}

// --- Free boolean algebra on a distributive lattice --------------------------

struct FreeBa {
  OpenLattice lat;    // powerset of the join-irreducibles
  JslMorphism unit;   // a |-> the join-irreducibles below a
};

inline FreeBa free_ba(const Jsl& d) {
  if (!d.is_distributive()) throw Error("free boolean algebra requires a distributive input");
  FreeBa out;
  const auto& js = d.join_irreducibles();
  std::vector<std::string> names;
  for (auto j : js) names.push_back(d.name(j));
  out.lat = power_jsl(FinSet(names));
  std::vector<std::size_t> m(d.size());
  for (std::size_t a = 0; a < d.size(); ++a) {
    Bits s(js.size());
    for (std::size_t k = 0; k < js.size(); ++k)
      if (d.le(js[k], a)) s.set(k);
    m[a] = out.lat.index_of(s);
  }
  out.unit = morphism_new(d, out.lat.jsl, std::move(m));
  if (!is_dl_morphism(out.unit)) throw Error("unit is not a lattice morphism");
  return out;
}

// Counit on a boolean algebra: joins of atom sets.
inline JslMorphism free_ba_counit(const Jsl& b, const OpenLattice& pow_atoms) {
  if (!b.is_boolean()) throw Error("counit requires a boolean semilattice");
  const auto& at = b.join_irreducibles();
  std::vector<std::size_t> m(pow_atoms.sets.size());
  for (std::size_t i = 0; i < pow_atoms.sets.size(); ++i) {
    Bits s(b.size());
    for (std::size_t k = 0; k < at.size(); ++k)
      if (pow_atoms.sets[i].test(k)) s.set(at[k]);
    m[i] = b.join_of(s);
  }
  JslMorphism eps = morphism_new(pow_atoms.jsl, b, std::move(m));
  if (!is_dl_morphism(eps)) throw Error("counit is not a lattice morphism");
  return eps;
}

// --- Enumeration helpers for universal-property checks -----------------------

inline std::vector<std::vector<std::size_t>> all_monotone(const Poset& p, const Poset& q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> m(p.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == p.size()) {
      out.push_back(m);
      return;
    }
    for (std::size_t v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (std::size_t u = 0; u < i && ok; ++u) {
        if (p.le(u, i) && !q.le(m[u], v)) ok = false;
        if (p.le(i, u) && !q.le(v, m[u])) ok = false;
      }
      if (!ok) continue;
      m[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<JslMorphism> all_dl_morphisms(const Jsl& d, const Jsl& e) {
  std::vector<JslMorphism> out;
  for (auto& f : all_morphisms(d, e))
    if (is_dl_morphism(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace latrel

#endif  // LATREL_FREECAT_HPP_
