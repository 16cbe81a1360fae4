// oracle.hpp
//
// Brute-force ground truth for tiny instances of the tripled code:
// exhaustive codeword enumeration, true minimum distance, and
// nearest-codeword (maximum-likelihood) decoding.  Deliberately dumb and
// independent of the cascade decoder so the two can be checked against
// each other.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trs/construction.hpp"
#include "trs/words.hpp"

namespace trs {

struct TinyCodeTable {
  std::size_t n0 = 0;
  std::size_t k0 = 0;
  std::vector<Word> codewords;   // all q^k0 of them, message-enumeration order
  std::size_t min_distance = 0;  // minimum nonzero Hamming weight
};

// Enumerates the whole code through the message space (q^k0 words).
// Refuses anything above 2^24 codewords.
inline TinyCodeTable enumerate_codewords(const NestedTriple& triple) {
  const CodeParams params = triple.params();
  const double log2_size =
      static_cast<double>(params.k0) * triple.field().m();
  if (log2_size > 24.0) {
    throw std::invalid_argument(
        "enumerate_codewords: q^k0 exceeds the 2^24 size guard");
  }
  const std::uint64_t q = triple.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < params.k0; ++i) total *= q;

  TinyCodeTable table;
  table.n0 = params.n0;
  table.k0 = params.k0;
  table.codewords.reserve(total);
  table.min_distance = params.n0 + 1;

  MessageTriple msg{Word(triple.code_a().k(), 0), Word(triple.code_b().k(), 0),
                    Word(triple.code_z().k(), 0)};
  for (std::uint64_t index = 0; index < total; ++index) {
    // Mixed-radix digits of index laid out over (msg_a | msg_b | msg_z),
    // last symbol fastest.
    std::uint64_t rest = index;
    for (std::size_t pos = params.k0; pos > 0; --pos) {
      const Symbol digit = static_cast<Symbol>(rest % q);
      rest /= q;
      const std::size_t p = pos - 1;
      if (p < msg.a.size()) {
        msg.a[p] = digit;
      } else if (p < msg.a.size() + msg.b.size()) {
        msg.b[p - msg.a.size()] = digit;
      } else {
        msg.z[p - msg.a.size() - msg.b.size()] = digit;
      }
    }
    Word cw = triple.encode(msg);
    if (index != 0) {
      const std::size_t w = weight(cw);
      if (w < table.min_distance) table.min_distance = w;
    }
    table.codewords.push_back(std::move(cw));
  }
  return table;
}

struct NearestResult {
  std::size_t index = 0;     // into TinyCodeTable::codewords
  std::size_t distance = 0;  // Hamming distance to the input
  bool unique = true;        // whether the minimizer is unique
};

inline NearestResult nearest_codeword(const TinyCodeTable& table,
                                      std::span<const Symbol> r) {
  if (table.codewords.empty()) {
    throw std::invalid_argument("nearest_codeword: empty table");
  }
  if (r.size() != table.n0) {
    throw std::invalid_argument("nearest_codeword: word length != n0");
  }
  NearestResult best;
  best.distance = table.n0 + 1;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < table.codewords.size(); ++i) {
    const std::size_t dist = hamming_distance(table.codewords[i], r);
    if (dist < best.distance) {
      best.index = i;
      best.distance = dist;
      ties = 1;
    } else if (dist == best.distance) {
      ++ties;
    }
  }
  best.unique = (ties == 1);
  return best;
}

}  // namespace trs
