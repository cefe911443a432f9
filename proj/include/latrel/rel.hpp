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

#ifndef LATREL_REL_HPP_
#define LATREL_REL_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latrel/base.hpp"

namespace latrel {

// A finite set of named elements. The construction order is the canonical
// index order used everywhere else.
struct FinSet {
  std::vector<std::string> names;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> ns) : names(std::move(ns)) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) throw Error("duplicate element name: " + n);
  }

  std::size_t size() const { return names.size(); }
  const std::string& name(std::size_t i) const { return names.at(i); }

  std::optional<std::size_t> find(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    return std::nullopt;
  }

  std::size_t index(const std::string& n) const {
    if (auto i = find(n)) return *i;
    throw Error("element not in carrier: " + n);
  }

  bool operator==(const FinSet& o) const { return names == o.names; }
  bool operator!=(const FinSet& o) const { return !(*this == o); }

  static FinSet range(std::size_t n, const std::string& prefix = "e") {
    std::vector<std::string> ns;
    ns.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ns.push_back(prefix + std::to_string(i));
    return FinSet(std::move(ns));
  }
};

inline std::string subset_name(const FinSet& x, const Bits& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : members(s)) {
    if (!first) out += ",";
    out += x.name(i);
    first = false;
  }
  return out + "}";
}

// A binary relation between two named finite sets, stored as a dense
// boolean matrix of row bitsets.
class Rel {
 public:
  Rel() = default;
  Rel(FinSet src, FinSet tgt)
      : src_(std::move(src)), tgt_(std::move(tgt)), rows_(src_.size(), Bits(tgt_.size())) {}
  Rel(FinSet src, FinSet tgt, std::vector<Bits> rows)
      : src_(std::move(src)), tgt_(std::move(tgt)), rows_(std::move(rows)) {
    if (rows_.size() != src_.size()) throw Error("relation row count mismatch");
    for (const auto& r : rows_)
      if (r.size() != tgt_.size()) throw Error("relation row width mismatch");
  }

  const FinSet& src() const { return src_; }
  const FinSet& tgt() const { return tgt_; }
  std::size_t n_src() const { return src_.size(); }
  std::size_t n_tgt() const { return tgt_.size(); }

  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  const Bits& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Bits>& rows() const { return rows_; }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
  }

  bool operator==(const Rel& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && rows_ == o.rows_;
  }
  bool operator!=(const Rel& o) const { return !(*this == o); }

  bool same_type(const Rel& o) const { return src_ == o.src_ && tgt_ == o.tgt_; }

  bool subset_of(const Rel& o) const {
    if (!same_type(o)) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!rows_[i].is_subset_of(o.rows_[i])) return false;
    return true;
  }

  static Rel identity(const FinSet& x) {
    Rel d(x, x);
    for (std::size_t i = 0; i < x.size(); ++i) d.set(i, i);
    return d;
  }

  static Rel full(const FinSet& a, const FinSet& b) {
    Rel r(a, b);
    for (auto& row : r.rows_) row.set();
    return r;
  }

  // Rectangle A x B.
  static Rel rectangle(const FinSet& a, const FinSet& b, const Bits& xs, const Bits& ys) {
    Rel r(a, b);
    for (auto i : members(xs)) r.rows_[i] = ys;
    return r;
  }

  Rel converse() const {
    Rel out(tgt_, src_);
    for (std::size_t i = 0; i < n_src(); ++i)
      for (auto j = rows_[i].find_first(); j != Bits::npos; j = rows_[i].find_next(j))
        out.set(j, i);
    return out;
  }

  Rel complement() const {
    Rel out(src_, tgt_);
    for (std::size_t i = 0; i < n_src(); ++i) out.rows_[i] = ~rows_[i];
    return out;
  }

  Rel unite(const Rel& o) const {
    if (!same_type(o)) throw Error("union of relations with different types");
    Rel out = *this;
    for (std::size_t i = 0; i < n_src(); ++i) out.rows_[i] |= o.rows_[i];
    return out;
  }

  Rel intersect(const Rel& o) const {
    if (!same_type(o)) throw Error("intersection of relations with different types");
    Rel out = *this;
    for (std::size_t i = 0; i < n_src(); ++i) out.rows_[i] &= o.rows_[i];
    return out;
  }

  // Relational composite; requires this->tgt == other.src.
  Rel compose(const Rel& o) const {
    if (tgt_ != o.src_) throw Error("composition type mismatch: " + describe_types(*this, o));
    Rel out(src_, o.tgt_);
    for (std::size_t i = 0; i < n_src(); ++i)
      for (auto j = rows_[i].find_first(); j != Bits::npos; j = rows_[i].find_next(j))
        out.rows_[i] |= o.rows_[j];
    return out;
  }

  // Image function R^up: union of the rows indexed by x.
  Bits up(const Bits& x) const {
    Bits out(n_tgt());
    for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i)) out |= rows_[i];
    return out;
  }

  // Preimage function R^down: largest subset whose image lies inside y.
  Bits down(const Bits& y) const {
    Bits out(n_src());
    for (std::size_t i = 0; i < n_src(); ++i)
      if (rows_[i].is_subset_of(y)) out.set(i);
    return out;
  }

  Bits cl(const Bits& x) const { return down(up(x)); }
  Bits interior(const Bits& y) const { return up(down(y)); }

  // Polarities: pol_up(X) is the intersection of the rows over X (the whole
  // target when X is empty), adjoint to pol_down on the converse side.
  Bits pol_up(const Bits& x) const {
    Bits out = full_bits(n_tgt());
    for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i)) out &= rows_[i];
    return out;
  }

  Bits pol_down(const Bits& y) const {
    Bits out = full_bits(n_src());
    for (std::size_t i = 0; i < n_src(); ++i) {
      bool all = true;
      for (auto j = y.find_first(); j != Bits::npos; j = y.find_next(j))
        if (!rows_[i].test(j)) {
          all = false;
          break;
        }
      if (!all) out.reset(i);
    }
    return out;
  }

  // All open sets: the closure of the rows under unions, including the empty
  // union. Sorted lexicographically.
  std::vector<Bits> open_sets() const {
    std::set<Bits> opens;
    opens.insert(Bits(n_tgt()));
    for (const auto& r : rows_) opens.insert(r);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Bits> cur(opens.begin(), opens.end());
      for (const auto& a : cur)
        for (const auto& r : rows_) {
          Bits u = a | r;
          if (opens.insert(u).second) grew = true;
        }
    }
    std::vector<Bits> out(opens.begin(), opens.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  // All closed sets: images of the open sets under R^down.
  std::vector<Bits> closed_sets() const {
    std::set<Bits> cls;
    for (const auto& o : open_sets()) cls.insert(down(o));
    std::vector<Bits> out(cls.begin(), cls.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  bool is_open(const Bits& y) const { return interior(y) == y; }
  bool is_closed(const Bits& x) const { return cl(x) == x; }

  // No empty row and no empty column.
  bool is_strict() const {
    for (const auto& r : rows_)
      if (r.none()) return false;
    Bits seen(n_tgt());
    for (const auto& r : rows_) seen |= r;
    return seen.all();
  }

  // One-sided reducedness: no row is the union of the other rows below it.
  bool rows_reduced() const {
    for (std::size_t i = 0; i < n_src(); ++i) {
      Bits u(n_tgt());
      for (std::size_t k = 0; k < n_src(); ++k)
        if (k != i && rows_[k].is_subset_of(rows_[i])) u |= rows_[k];
      if (u == rows_[i]) return false;
    }
    return true;
  }

  bool is_reduced() const { return rows_reduced() && converse().rows_reduced(); }

 private:
  static std::string describe_types(const Rel& a, const Rel& b) {
    return "(" + std::to_string(a.n_src()) + "x" + std::to_string(a.n_tgt()) + ") ; (" +
           std::to_string(b.n_src()) + "x" + std::to_string(b.n_tgt()) + ")";
  }

  FinSet src_, tgt_;
  std::vector<Bits> rows_;
};

// A finite poset: carrier plus a reflexive, transitive, antisymmetric order
// relation. Construct through poset_validate.
struct Poset {
  FinSet carrier;
  Rel leq;

  std::size_t size() const { return carrier.size(); }
  bool le(std::size_t a, std::size_t b) const { return leq.at(a, b); }

  Poset opposite() const { return Poset{carrier, leq.converse()}; }
};

// Reflexive-transitive closure of generating pairs; reports a violating
// cycle if antisymmetry fails.
inline Poset poset_validate(const FinSet& carrier, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = carrier.size();
  Rel leq = Rel::identity(carrier);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("order pair out of carrier");
    leq.set(a, b);
  }
  // Warshall closure over row bitsets.
  std::vector<Bits> rows(leq.rows());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  Rel closed(carrier, carrier, rows);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (closed.at(i, j) && closed.at(j, i))
        throw Error("antisymmetry violated: cycle through " + carrier.name(i) + " and " +
                    carrier.name(j));
  return Poset{carrier, closed};
}

inline Poset poset_from_rel(const FinSet& carrier, const Rel& r) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r.n_src(); ++i)
    for (auto j = r.row(i).find_first(); j != Bits::npos; j = r.row(i).find_next(j))
      pairs.emplace_back(i, j);
  return poset_validate(carrier, pairs);
}

// Covering relation of a poset: strict order minus its square.
inline Rel poset_covers(const Poset& p) {
  const std::size_t n = p.size();
  Rel strict = p.leq;
  for (std::size_t i = 0; i < n; ++i) strict.set(i, i, false);
  Rel two = strict.compose(strict);
  Rel cov(p.carrier, p.carrier);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (strict.at(i, j) && !two.at(i, j)) cov.set(i, j);
  return cov;
}

}  // namespace latrel

#endif  // LATREL_REL_HPP_
