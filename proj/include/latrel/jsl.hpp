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

#ifndef LATREL_JSL_HPP_
#define LATREL_JSL_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latrel/rel.hpp"

namespace latrel {

// A finite join-semilattice. All tables are computed eagerly at construction
// and shared immutably, so copies are cheap and thread-safe.
class Jsl {
 public:
  struct Core {
    Poset order;
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::vector<std::size_t>> meet;
    std::vector<std::size_t> jirr;  // ascending element indices
    std::vector<std::size_t> mirr;
    Rel covers;
    std::vector<Bits> below;  // below[i] = down-set of i as a carrier subset
    std::vector<Bits> above;
    bool distributive = false;
    bool boolean = false;
  };

  Jsl() = default;

  static Jsl from_poset(const Poset& p) {
    auto core = std::make_shared<Core>();
    core->order = p;
    const std::size_t n = p.size();
    if (n == 0) throw Error("empty carrier has no bottom element");

    core->below.resize(n, Bits(n));
    core->above.resize(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (p.le(a, b)) {
          core->below[b].set(a);
          core->above[a].set(b);
        }

    bool have_bottom = false;
    for (std::size_t a = 0; a < n; ++a)
      if (core->above[a].all()) {
        core->bottom = a;
        have_bottom = true;
        break;
      }
    if (!have_bottom) throw Error("no bottom element");

    core->join.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Bits ub = core->above[a] & core->above[b];
        auto least = least_of(*core, ub);
        if (!least)
          throw Error("no join for (" + p.carrier.name(a) + "," + p.carrier.name(b) + ")");
        core->join[a][b] = core->join[b][a] = *least;
      }

    // With all finite joins and a bottom, all finite meets exist too.
    {
      Bits everyone = full_bits(n);
      auto top = greatest_of(*core, everyone);
      if (!top) throw Error("no top element");
      core->top = *top;
    }
    core->meet.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Bits lb = core->below[a] & core->below[b];
        auto greatest = greatest_of(*core, lb);
        if (!greatest)
          throw Error("no meet for (" + p.carrier.name(a) + "," + p.carrier.name(b) + ")");
        core->meet[a][b] = core->meet[b][a] = *greatest;
      }

    core->covers = poset_covers(p);
    Rel up_cov = core->covers.converse();
    for (std::size_t a = 0; a < n; ++a) {
      if (up_cov.row(a).count() == 1) core->jirr.push_back(a);
      if (core->covers.row(a).count() == 1) core->mirr.push_back(a);
    }

    core->distributive = compute_distributive(*core);
    core->boolean = core->distributive && compute_complemented(*core);

    Jsl q;
    q.c_ = std::move(core);
    return q;
  }

  bool valid() const { return static_cast<bool>(c_); }
  const Poset& poset() const { return c_->order; }
  const FinSet& carrier() const { return c_->order.carrier; }
  std::size_t size() const { return c_->order.size(); }
  const std::string& name(std::size_t i) const { return carrier().name(i); }

  bool le(std::size_t a, std::size_t b) const { return c_->order.le(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return c_->join[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return c_->meet[a][b]; }
  std::size_t bottom() const { return c_->bottom; }
  std::size_t top() const { return c_->top; }
  const Bits& below(std::size_t i) const { return c_->below[i]; }
  const Bits& above(std::size_t i) const { return c_->above[i]; }
  const Rel& covers() const { return c_->covers; }

  std::size_t join_of(const Bits& s) const {
    std::size_t acc = bottom();
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) acc = join(acc, i);
    return acc;
  }

  std::size_t meet_of(const Bits& s) const {
    std::size_t acc = top();
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) acc = meet(acc, i);
    return acc;
  }

  const std::vector<std::size_t>& join_irreducibles() const { return c_->jirr; }
  const std::vector<std::size_t>& meet_irreducibles() const { return c_->mirr; }

  Bits jirr_below(std::size_t a) const {
    Bits s(size());
    for (auto j : c_->jirr)
      if (le(j, a)) s.set(j);
    return s;
  }

  bool is_distributive() const { return c_->distributive; }
  bool is_boolean() const { return c_->boolean; }

  Jsl opposite() const { return from_poset(c_->order.opposite()); }

  bool same_as(const Jsl& o) const {
    return carrier() == o.carrier() && c_->order.leq == o.c_->order.leq;
  }

  // The canonical bijection J(Q) -> M(Q) of a distributive lattice,
  // tau(j) = join of everything not above j.
  std::size_t tau(std::size_t j) const {
    require_distributive();
    Bits not_above = ~c_->above[j];
    return join_of(not_above);
  }

  std::size_t tau_inv(std::size_t m) const {
    require_distributive();
    Bits not_below = ~c_->below[m];
    return meet_of(not_below);
  }

 private:
  void require_distributive() const {
    if (!c_->distributive) throw Error("operation requires a distributive semilattice");
  }

  static std::optional<std::size_t> least_of(const Core& c, const Bits& s) {
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      if (s.is_subset_of(c.above[i])) return i;
    return std::nullopt;
  }

  static std::optional<std::size_t> greatest_of(const Core& c, const Bits& s) {
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      if (s.is_subset_of(c.below[i])) return i;
    return std::nullopt;
  }

  // Every join-irreducible is join-prime.
  static bool compute_distributive(const Core& c) {
    const std::size_t n = c.order.size();
    for (auto j : c.jirr)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (c.order.le(j, c.join[a][b]) && !c.order.le(j, a) && !c.order.le(j, b)) return false;
    return true;
  }

  static bool compute_complemented(const Core& c) {
    const std::size_t n = c.order.size();
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b)
        found = c.join[a][b] == c.top && c.meet[a][b] == c.bottom;
      if (!found) return false;
    }
    return true;
  }

  std::shared_ptr<const Core> c_;
};

inline Jsl jsl_chain(std::size_t length) {
  FinSet carrier = FinSet::range(length + 1, "c");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < length; ++i) pairs.emplace_back(i, i + 1);
  return Jsl::from_poset(poset_validate(carrier, pairs));
}

// Bottom, k incomparable middle elements, top.
inline Jsl jsl_diamond(std::size_t k, const std::string& prefix = "x") {
  std::vector<std::string> names{"bot"};
  for (std::size_t i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
  names.push_back("top");
  FinSet carrier{names};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= k; ++i) {
    pairs.emplace_back(0, i);
    pairs.emplace_back(i, k + 1);
  }
  if (k == 0) pairs.emplace_back(0, 1);
  return Jsl::from_poset(poset_validate(carrier, pairs));
}

inline Jsl jsl_m3() { return jsl_diamond(3); }

// A join- and bottom-preserving map between finite join-semilattices.
struct JslMorphism {
  Jsl dom, cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t a) const { return map[a]; }

  bool le(const JslMorphism& o) const {
    for (std::size_t a = 0; a < map.size(); ++a)
      if (!cod.le(map[a], o.map[a])) return false;
    return true;
  }

  JslMorphism join(const JslMorphism& o) const {
    JslMorphism out = *this;
    for (std::size_t a = 0; a < map.size(); ++a) out.map[a] = cod.join(map[a], o.map[a]);
    return out;
  }

  bool operator==(const JslMorphism& o) const { return map == o.map; }
  bool operator!=(const JslMorphism& o) const { return !(*this == o); }
};

inline std::optional<std::pair<std::size_t, std::size_t>> morphism_defect(const Jsl& dom, const Jsl& cod,
                                                                          const std::vector<std::size_t>& map) {
  if (map.size() != dom.size()) throw Error("morphism map has wrong arity");
  for (auto v : map)
    if (v >= cod.size()) throw Error("morphism image out of codomain");
  if (map[dom.bottom()] != cod.bottom()) return std::make_pair(dom.bottom(), dom.bottom());
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a; b < dom.size(); ++b)
      if (map[dom.join(a, b)] != cod.join(map[a], map[b])) return std::make_pair(a, b);
  return std::nullopt;
}

inline JslMorphism morphism_new(const Jsl& dom, const Jsl& cod, std::vector<std::size_t> map) {
  if (auto w = morphism_defect(dom, cod, map))
    throw Error("not a morphism: join of (" + dom.name(w->first) + "," + dom.name(w->second) +
                ") is not preserved");
  return JslMorphism{dom, cod, std::move(map)};
}

inline JslMorphism jsl_identity(const Jsl& q) {
  std::vector<std::size_t> m(q.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return JslMorphism{q, q, std::move(m)};
}

inline JslMorphism jsl_compose(const JslMorphism& g, const JslMorphism& f) {
  if (!f.cod.same_as(g.dom)) throw Error("morphism composition type mismatch");
  std::vector<std::size_t> m(f.map.size());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = g.map[f.map[a]];
  return JslMorphism{f.dom, g.cod, std::move(m)};
}

// The adjoint f_* : cod^op -> dom^op, f_*(r) = join of the preimage of the
// down-set of r. Satisfies f(q) <= r iff q <= f_*(r).
inline JslMorphism adjoint(const JslMorphism& f) {
  Jsl dop = f.dom.opposite();
  Jsl cop = f.cod.opposite();
  std::vector<std::size_t> m(f.cod.size());
  for (std::size_t r = 0; r < f.cod.size(); ++r) {
    Bits pre(f.dom.size());
    for (std::size_t q = 0; q < f.dom.size(); ++q)
      if (f.cod.le(f.map[q], r)) pre.set(q);
    m[r] = f.dom.join_of(pre);
  }
  return JslMorphism{cop, dop, std::move(m)};
}

inline bool is_mono(const JslMorphism& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.map.size();
}

inline bool is_epi(const JslMorphism& f) {
  std::set<std::size_t> seen(f.map.begin(), f.map.end());
  return seen.size() == f.cod.size();
}

inline bool is_iso(const JslMorphism& f) { return is_mono(f) && is_epi(f); }

inline JslMorphism jsl_inverse(const JslMorphism& f) {
  if (!is_iso(f)) throw Error("not an isomorphism");
  std::vector<std::size_t> m(f.cod.size());
  for (std::size_t a = 0; a < f.map.size(); ++a) m[f.map[a]] = a;
  return JslMorphism{f.cod, f.dom, std::move(m)};
}

// All join-semilattice morphisms dom -> cod. Images are assigned on the
// join-irreducibles in a linear-extension order and extended by joins; each
// candidate is kept when the extension is a morphism restricting to the
// assignment. Output sorted by image tuple.
inline std::vector<JslMorphism> all_morphisms(const Jsl& dom, const Jsl& cod) {
  std::vector<std::size_t> js = dom.join_irreducibles();
  std::sort(js.begin(), js.end(),
            [&](std::size_t a, std::size_t b) { return dom.below(a).count() < dom.below(b).count(); });
  std::vector<JslMorphism> out;
  std::vector<std::size_t> img(js.size());

  auto extend_and_check = [&]() {
    std::vector<std::size_t> m(dom.size());
    for (std::size_t a = 0; a < dom.size(); ++a) {
      std::size_t acc = cod.bottom();
      for (std::size_t k = 0; k < js.size(); ++k)
        if (dom.le(js[k], a)) acc = cod.join(acc, img[k]);
      m[a] = acc;
    }
    for (std::size_t k = 0; k < js.size(); ++k)
      if (m[js[k]] != img[k]) return;
    if (morphism_defect(dom, cod, m)) return;
    out.push_back(JslMorphism{dom, cod, std::move(m)});
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == js.size()) {
      extend_and_check();
      return;
    }
    for (std::size_t v = 0; v < cod.size(); ++v) {
      bool ok = true;
      for (std::size_t p = 0; p < k && ok; ++p)
        if (dom.le(js[p], js[k]) && !cod.le(img[p], v)) ok = false;
      if (!ok) continue;
      img[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](const JslMorphism& a, const JslMorphism& b) { return a.map < b.map; });
  return out;
}

// The hom-semilattice JSL[Q,R]: all morphisms under pointwise join with the
// constantly-bottom map as bottom.
struct HomLattice {
  Jsl jsl;
  std::vector<JslMorphism> elems;
  Jsl left, right;

  std::size_t index_of(const JslMorphism& f) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i].map == f.map) return i;
    throw Error("morphism not in hom carrier");
  }
};

inline HomLattice hom_semilattice(const Jsl& q, const Jsl& r) {
  HomLattice h;
  h.left = q;
  h.right = r;
  h.elems = all_morphisms(q, r);
  FinSet carrier = FinSet::range(h.elems.size(), "f");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < h.elems.size(); ++i)
    for (std::size_t j = 0; j < h.elems.size(); ++j)
      if (h.elems[i].le(h.elems[j])) pairs.emplace_back(i, j);
  h.jsl = Jsl::from_poset(poset_validate(carrier, pairs));
  return h;
}

// Special morphism: bottom below q0, constantly r0 above.
inline JslMorphism special_up(const Jsl& q, const Jsl& r, std::size_t q0, std::size_t r0) {
  std::vector<std::size_t> m(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) m[a] = q.le(a, q0) ? r.bottom() : r0;
  return morphism_new(q, r, std::move(m));
}

// Special morphism: bottom at bottom, r0 on the interval (bot, q0],
// top elsewhere.
inline JslMorphism special_down(const Jsl& q, const Jsl& r, std::size_t q0, std::size_t r0) {
  std::vector<std::size_t> m(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    if (a == q.bottom())
      m[a] = r.bottom();
    else if (q.le(a, q0))
      m[a] = r0;
    else
      m[a] = r.top();
  }
  return morphism_new(q, r, std::move(m));
}

// A morphism is tight iff it is the pointwise join of the special morphisms
// special_up(m,j) lying below it. Returns the witness set when tight.
struct TightWitness {
  bool tight = false;
  std::vector<std::pair<std::size_t, std::size_t>> witness;  // (m in M(dom), j in J(cod))
};

inline TightWitness is_tight(const JslMorphism& f) {
  TightWitness w;
  std::vector<std::size_t> acc(f.dom.size(), f.cod.bottom());
  for (auto m : f.dom.meet_irreducibles())
    for (auto j : f.cod.join_irreducibles()) {
      JslMorphism s = special_up(f.dom, f.cod, m, j);
      if (s.le(f)) {
        w.witness.emplace_back(m, j);
        for (std::size_t a = 0; a < acc.size(); ++a) acc[a] = f.cod.join(acc[a], s.map[a]);
      }
    }
  w.tight = acc == f.map;
  if (!w.tight) w.witness.clear();
  return w;
}

// --- Congruences and subalgebras ------------------------------------------

// An equivalence on the carrier closed under joining related pairs,
// canonically stored as the partition map "element -> least class member".
struct Congruence {
  Jsl base;
  std::vector<std::size_t> cls;

  bool related(std::size_t a, std::size_t b) const { return cls[a] == cls[b]; }
  bool operator==(const Congruence& o) const { return cls == o.cls; }
  bool operator<(const Congruence& o) const { return cls < o.cls; }

  bool refines(const Congruence& o) const {
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (related(a, b) && !o.related(a, b)) return false;
    return true;
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
  }
  std::size_t find(std::size_t a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

inline Congruence canonicalize(const Jsl& q, UnionFind& uf) {
  std::vector<std::size_t> cls(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) cls[i] = uf.find(i);
  return Congruence{q, std::move(cls)};
}

}  // namespace detail

// Least congruence containing the given pairs: close under joining with
// arbitrary elements and re-close the equivalence until stable.
inline Congruence congruence_generated(const Jsl& q,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& gen) {
  detail::UnionFind uf(q.size());
  for (auto [a, b] : gen) uf.unite(a, b);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (std::size_t c = 0; c < q.size(); ++c)
          if (uf.unite(q.join(a, c), q.join(b, c))) grew = true;
      }
  }
  return detail::canonicalize(q, uf);
}

inline Congruence principal_congruence(const Jsl& q, std::size_t a, std::size_t b) {
  return congruence_generated(q, {{a, b}});
}

inline Congruence congruence_join(const Congruence& x, const Congruence& y) {
  detail::UnionFind uf(x.cls.size());
  for (std::size_t i = 0; i < x.cls.size(); ++i) {
    uf.unite(i, x.cls[i]);
    uf.unite(i, y.cls[i]);
  }
  // Union of congruences needs only the transitive re-closure.
  return detail::canonicalize(x.base, uf);
}

// All congruences: close the principal ones (plus the diagonal) under
// binary joins. Guarded: the lattice grows quickly with the carrier.
inline std::vector<Congruence> congruences(const Jsl& q, std::size_t size_guard = 7) {
  if (q.size() > size_guard)
    throw Error("congruence enumeration refused for carrier of size " + std::to_string(q.size()));
  std::set<Congruence> all;
  detail::UnionFind diag(q.size());
  all.insert(detail::canonicalize(q, diag));
  std::vector<Congruence> principals;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a + 1; b < q.size(); ++b) principals.push_back(principal_congruence(q, a, b));
  for (const auto& p : principals) all.insert(p);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> cur(all.begin(), all.end());
    for (const auto& c : cur)
      for (const auto& p : principals)
        if (all.insert(congruence_join(c, p)).second) grew = true;
  }
  return {all.begin(), all.end()};
}

// Builds the congruence lattice itself (ordered by refinement).
inline Jsl congruence_lattice(const Jsl& q, std::size_t size_guard = 7) {
  auto cs = congruences(q, size_guard);
  FinSet carrier = FinSet::range(cs.size(), "th");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (cs[i].refines(cs[j])) pairs.emplace_back(i, j);
  return Jsl::from_poset(poset_validate(carrier, pairs));
}

// A subalgebra: subset containing the bottom and closed under binary joins.
struct Subalgebra {
  Jsl base;
  Bits subset;
};

inline bool is_subalgebra(const Jsl& q, const Bits& s) {
  if (!s.test(q.bottom())) return false;
  for (auto a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    for (auto b = s.find_first(); b != Bits::npos; b = s.find_next(b))
      if (!s.test(q.join(a, b))) return false;
  return true;
}

inline Subalgebra subalgebra_new(const Jsl& q, const Bits& s) {
  if (!is_subalgebra(q, s)) throw Error("not a subalgebra");
  return Subalgebra{q, s};
}

// theta |-> { join of each class }, a subalgebra of the opposite algebra.
inline Subalgebra cong_to_sub(const Congruence& th, const Jsl& base_op) {
  Bits s(th.base.size());
  for (std::size_t a = 0; a < th.base.size(); ++a) {
    Bits c(th.base.size());
    for (std::size_t b = 0; b < th.base.size(); ++b)
      if (th.related(a, b)) c.set(b);
    s.set(th.base.join_of(c));
  }
  return subalgebra_new(base_op, s);
}

// S |-> { (a,b) : a,b lie below exactly the same members of S }.
inline Congruence sub_to_cong(const Subalgebra& sub, const Jsl& base) {
  detail::UnionFind uf(base.size());
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      bool same = true;
      for (auto s = sub.subset.find_first(); s != Bits::npos && same; s = sub.subset.find_next(s))
        if (base.le(a, s) != base.le(b, s)) same = false;
      if (same) uf.unite(a, b);
    }
  return detail::canonicalize(base, uf);
}

}  // namespace latrel

#endif  // LATREL_JSL_HPP_
