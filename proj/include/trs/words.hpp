// words.hpp
//
// Dense symbol-vector helpers shared by the codecs.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "trs/gf.hpp"

namespace trs {

using Word = std::vector<Symbol>;

inline std::size_t weight(std::span<const Symbol> w) {
  std::size_t count = 0;
  for (Symbol s : w) count += (s != 0);
  return count;
}

inline std::size_t hamming_distance(std::span<const Symbol> a,
                                    std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += (a[i] != b[i]);
  return count;
}

// Coordinatewise characteristic-2 sum; doubles as the difference.
inline Word xor_words(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("xor_words: length mismatch");
  }
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

}  // namespace trs
