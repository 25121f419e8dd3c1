#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace fcadi {

// Dense bit sets are the workhorse representation throughout: object sets,
// attribute sets, incidence rows/columns and order relations are all Bitsets.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline Bitset full_set(std::size_t n) {
  Bitset b(n);
  b.set();
  return b;
}

inline std::vector<std::size_t> set_bits(const Bitset& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

}  // namespace fcadi
