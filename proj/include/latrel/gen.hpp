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

#ifndef LATREL_GEN_HPP_
#define LATREL_GEN_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latrel/demorgan.hpp"

namespace latrel {

using Rng = std::mt19937_64;

inline Rel gen_rel(Rng& rng, std::size_t max_src, std::size_t max_tgt, double density = 0.4) {
  std::uniform_int_distribution<std::size_t> ns(0, max_src), nt(0, max_tgt);
  std::bernoulli_distribution edge(density);
  FinSet src = FinSet::range(ns(rng), "x");
  FinSet tgt = FinSet::range(nt(rng), "y");
  Rel r(src, tgt);
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < tgt.size(); ++j)
      if (edge(rng)) r.set(i, j);
  return r;
}

inline Rel gen_rel(std::uint64_t seed, std::size_t max_src, std::size_t max_tgt, double density = 0.4) {
  Rng rng(seed);
  return gen_rel(rng, max_src, max_tgt, density);
}

inline Poset gen_poset(Rng& rng, std::size_t max_size, double density = 0.35) {
  std::uniform_int_distribution<std::size_t> ns(1, max_size ? max_size : 1);
  std::bernoulli_distribution edge(density);
  std::size_t n = ns(rng);
  FinSet carrier = FinSet::range(n, "p");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(i, j);
  return poset_validate(carrier, pairs);
}

inline Poset gen_poset(std::uint64_t seed, std::size_t max_size, double density = 0.35) {
  Rng rng(seed);
  return gen_poset(rng, max_size, density);
}

// Random semilattice: draw posets with a forced bottom element until all
// joins exist. Deterministic per seed; errors out when the retry budget is
// exhausted.
inline Jsl gen_jsl(Rng& rng, std::size_t max_size, std::size_t retries = 256) {
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    std::uniform_int_distribution<std::size_t> ns(1, max_size ? max_size : 1);
    std::bernoulli_distribution edge(0.4);
    std::size_t n = ns(rng);
    FinSet carrier = FinSet::range(n, "q");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(0, i);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edge(rng)) pairs.emplace_back(i, j);
    try {
      return Jsl::from_poset(poset_validate(carrier, pairs));
    } catch (const Error&) {
      continue;
    }
  }
  throw Error("generation exhausted: no valid semilattice within the retry budget");
}

inline Jsl gen_jsl(std::uint64_t seed, std::size_t max_size, std::size_t retries = 256) {
  Rng rng(seed);
  return gen_jsl(rng, max_size, retries);
}

inline UGraph gen_ug(Rng& rng, std::size_t max_v, double density = 0.4) {
  std::uniform_int_distribution<std::size_t> nv(0, max_v);
  std::bernoulli_distribution edge(density);
  FinSet v = FinSet::range(nv(rng), "v");
  Rel e(v, v);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      if (edge(rng)) {
        e.set(i, j);
        e.set(j, i);
      }
  return ugraph_new(v, e);
}

inline UGraph gen_ug(std::uint64_t seed, std::size_t max_v, double density = 0.4) {
  Rng rng(seed);
  return gen_ug(rng, max_v, density);
}

// Random morphism between two given semilattices, drawn uniformly from the
// full enumeration.
inline JslMorphism gen_morphism(Rng& rng, const Jsl& dom, const Jsl& cod) {
  auto all = all_morphisms(dom, cod);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

// Random morphism in the relation category, drawn from the full hom-set.
inline DepMorphism gen_dep_morphism(Rng& rng, const Rel& dom, const Rel& cod) {
  auto all = dep_hom_all(dom, cod);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return dep_validate(all[pick(rng)], dom, cod);
}

}  // namespace latrel

#endif  // LATREL_GEN_HPP_
