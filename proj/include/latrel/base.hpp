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

#ifndef LATREL_BASE_HPP_
#define LATREL_BASE_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latrel {

// Subsets of a finite carrier, indexed by the carrier's canonical order.
using Bits = boost::dynamic_bitset<>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Subset enumeration beyond this many elements is refused.
inline constexpr std::size_t kSubsetEnumLimit = 20;

inline Bits empty_bits(std::size_t n) { return Bits(n); }

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

inline Bits singleton(std::size_t n, std::size_t i) {
  Bits b(n);
  b.set(i);
  return b;
}

inline std::vector<std::size_t> members(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

// Lexicographic order on subsets viewed as ascending index sequences,
// e.g. {} < {0} < {0,1} < {0,2} < {1}.
inline bool lex_less(const Bits& a, const Bits& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Bits::npos && j != Bits::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == Bits::npos && j != Bits::npos;
}

// Visits all subsets of an n-element carrier; n is guarded.
template <typename F>
void for_each_subset(std::size_t n, F&& fn) {
  if (n > kSubsetEnumLimit)
    throw Error("subset enumeration refused for carrier of size " + std::to_string(n));
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < lim; ++m) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) b.set(i);
    fn(b);
  }
}

}  // namespace latrel

#endif  // LATREL_BASE_HPP_
