// simulate.hpp
//
// Seeded Monte Carlo frame-error-rate measurement for the tripled code,
// with an analytic bounded-distance MDS reference for comparison curves.
// Trial i draws everything from an RNG stream derived from (seed, i), so a
// record is a pure function of (triple, model, trials, seed).

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trs/cascade.hpp"
#include "trs/channel.hpp"
#include "trs/construction.hpp"
#include "trs/words.hpp"

namespace trs {

struct SimRecord {
  ChannelModel model;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;       // decoder output == transmitted word
  std::uint64_t miscorrections = 0;  // reported success, wrong codeword
  std::uint64_t failures_step1 = 0;
  std::uint64_t failures_step2 = 0;
  std::uint64_t failures_allcand = 0;
  double mean_decode_seconds = 0.0;
  double mds_reference = 0.0;  // companion bounded-distance MDS value

  std::uint64_t failures() const {
    return failures_step1 + failures_step2 + failures_allcand;
  }
  double fer() const {
    return trials == 0
               ? 0.0
               : static_cast<double>(miscorrections + failures()) /
                     static_cast<double>(trials);
  }
};

// Bounded-distance reference for an MDS code with the same (n0, k0):
// a weight-tau pattern decodes iff tau <= floor((n0-k0)/2).
inline bool mds_reference(std::size_t n0, std::size_t k0, std::size_t tau) {
  if (k0 > n0) throw std::invalid_argument("mds_reference: k0 > n0");
  return tau <= (n0 - k0) / 2;
}

// Frame error probability of the same reference decoder on the q-ary
// symmetric channel: P[Binomial(n0, p) > floor((n0-k0)/2)].
inline double mds_reference_qsc(std::size_t n0, std::size_t k0, double p) {
  if (k0 > n0) throw std::invalid_argument("mds_reference_qsc: k0 > n0");
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const std::size_t t = (n0 - k0) / 2;
  // Sum the binomial pmf up to t with the multiplicative recurrence.
  double pmf = 1.0;
  for (std::size_t i = 0; i < n0; ++i) pmf *= 1.0 - p;  // P[X = 0]
  double cdf = pmf;
  const double ratio = p / (1.0 - p);
  for (std::size_t x = 1; x <= t && x <= n0; ++x) {
    pmf *= ratio * static_cast<double>(n0 - x + 1) / static_cast<double>(x);
    cdf += pmf;
  }
  if (cdf > 1.0) cdf = 1.0;
  return 1.0 - cdf;
}

inline double mds_reference_for(const ChannelModel& model, std::size_t n0,
                                std::size_t k0) {
  if (model.kind == ChannelModel::Kind::FixedWeight) {
    return mds_reference(n0, k0, model.tau) ? 0.0 : 1.0;
  }
  return mds_reference_qsc(n0, k0, model.p);
}

inline SimRecord run_simulation(const NestedTriple& triple,
                                const ChannelModel& model,
                                std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_simulation: trials < 1");
  const std::size_t n0 = triple.n0();
  const CodeParams params = triple.params();
  const Field& field = triple.field();

  SimRecord rec;
  rec.model = model;
  rec.trials = trials;
  // The reference column reports the analytic frame error value, so the
  // FixedWeight convention is inverted here: 0 = reference decodes.
  rec.mds_reference = mds_reference_for(model, params.n0, params.k0);

  std::chrono::duration<double> decode_time{0};
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, trial);
    MessageTriple msg{random_message(triple.code_a().k(), field, rng),
                      random_message(triple.code_b().k(), field, rng),
                      random_message(triple.code_z().k(), field, rng)};
    const Word transmitted = triple.encode(msg);
    const Word error = sample_error(model, n0, field, rng);
    const Word received = xor_words(transmitted, error);

    const auto t0 = std::chrono::steady_clock::now();
    const CascadeOutcome outcome =
        cascade_decode(triple, std::span<const Symbol>(received));
    decode_time += std::chrono::steady_clock::now() - t0;

    switch (outcome.status) {
      case CascadeStatus::Success:
        if (outcome.codeword == transmitted) {
          ++rec.successes;
        } else {
          ++rec.miscorrections;
        }
        break;
      case CascadeStatus::Step1Failure: ++rec.failures_step1; break;
      case CascadeStatus::Step2Failure: ++rec.failures_step2; break;
      case CascadeStatus::AllCandidatesFailed: ++rec.failures_allcand; break;
    }
  }
  rec.mean_decode_seconds =
      decode_time.count() / static_cast<double>(trials);
  return rec;
}

inline std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

inline std::string csv_header() {
  return "model,param,trials,successes,miscorrections,failures,fer,"
         "mds_reference";
}

inline std::string csv_row(const SimRecord& rec) {
  std::string row;
  if (rec.model.kind == ChannelModel::Kind::FixedWeight) {
    row += "fixed," + std::to_string(rec.model.tau);
  } else {
    row += "qsc," + format_double(rec.model.p);
  }
  row += ',' + std::to_string(rec.trials);
  row += ',' + std::to_string(rec.successes);
  row += ',' + std::to_string(rec.miscorrections);
  row += ',' + std::to_string(rec.failures());
  row += ',' + format_double(rec.fer());
  row += ',' + format_double(rec.mds_reference);
  return row;
}

inline void write_csv(std::ostream& os, std::span<const SimRecord> records) {
  os << csv_header() << '\n';
  for (const SimRecord& rec : records) os << csv_row(rec) << '\n';
}

}  // namespace trs
