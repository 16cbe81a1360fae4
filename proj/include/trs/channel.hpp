// channel.hpp
//
// Symbol error models for Monte Carlo runs, plus the per-trial RNG stream
// derivation.  Every random draw goes through bounded-draw helpers on top
// of std::mt19937_64 so that results depend only on (seed, trial index),
// not on any stdlib distribution implementation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "trs/gf.hpp"
#include "trs/words.hpp"

namespace trs {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Independent stream for one trial; reordering or parallelizing trials
// cannot change what any single trial draws.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (trial + 1));
  const std::uint64_t a = detail::splitmix64(state);
  const std::uint64_t b = detail::splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

// Uniform draw from [0, bound) by rejection; unbiased and portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound == 0");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ChannelModel {
  enum class Kind { FixedWeight, QSymmetric };

  Kind kind = Kind::FixedWeight;
  std::size_t tau = 0;  // FixedWeight: exact error weight over the 3n symbols
  double p = 0.0;       // QSymmetric: per-symbol error probability

  static ChannelModel fixed_weight(std::size_t tau) {
    return ChannelModel{Kind::FixedWeight, tau, 0.0};
  }
  static ChannelModel q_symmetric(double p) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("q_symmetric: p outside [0, 1]");
    }
    return ChannelModel{Kind::QSymmetric, 0, p};
  }
};

// Error word of the model over `length` symbols.  FixedWeight picks tau
// distinct positions and uniform nonzero values; QSymmetric corrupts each
// symbol independently to a uniformly random different value with
// probability p.
inline Word sample_error(const ChannelModel& model, std::size_t length,
                         const Field& field, std::mt19937_64& rng) {
  Word error(length, 0);
  const std::uint64_t nonzero = field.q() - 1;
  switch (model.kind) {
    case ChannelModel::Kind::FixedWeight: {
      if (model.tau > length) {
        throw std::invalid_argument("sample_error: tau > word length");
      }
      // Partial Fisher-Yates for the position sample.
      std::vector<std::uint32_t> idx(length);
      for (std::size_t i = 0; i < length; ++i) {
        idx[i] = static_cast<std::uint32_t>(i);
      }
      for (std::size_t i = 0; i < model.tau; ++i) {
        const std::size_t j = i + uniform_below(rng, length - i);
        std::swap(idx[i], idx[j]);
        error[idx[i]] = static_cast<Symbol>(1 + uniform_below(rng, nonzero));
      }
      break;
    }
    case ChannelModel::Kind::QSymmetric: {
      for (std::size_t i = 0; i < length; ++i) {
        if (uniform_unit(rng) < model.p) {
          error[i] = static_cast<Symbol>(1 + uniform_below(rng, nonzero));
        }
      }
      break;
    }
  }
  return error;
}

inline Word random_message(std::size_t length, const Field& field,
                           std::mt19937_64& rng) {
  Word msg(length);
  for (std::size_t i = 0; i < length; ++i) {
    msg[i] = static_cast<Symbol>(uniform_below(rng, field.q()));
  }
  return msg;
}

}  // namespace trs
