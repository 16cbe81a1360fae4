// cascade.hpp
//
// Four-step decoder for the tripled code, guaranteed up to
// floor((d0-1)/2) symbol errors over the 3n coordinates:
//
//   1. Decode r_z - alpha*r_b + (alpha-1)*r_a in C_z.  The combination
//      cancels a and b, leaving z plus a combined error; the support of
//      the corrected error is E_abz.
//   2. Decode r_b - r_a in C_b with every position of E_abz erased.
//      Errors hidden from step 1 by cancellation each cost at least two
//      error symbols, which is exactly the erasure budget the punctured
//      code has left.
//   3. Strip b_hat and z_hat from the three blocks and decode each of the
//      resulting noisy copies of a in C_a; up to three candidates survive.
//   4. Keep the candidate whose implied total error weight is minimal.
//      Within the guarantee radius the true a wins strictly, because two
//      distinct candidates would put two words of the 3n-repetition of
//      C_a within 2*tau < 3*d_a of each other.
//
// Failures at steps 1 and 2, and the all-candidates-dropped case in step
// 3, are reported as statuses; they are reachable only beyond the radius.

#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "trs/construction.hpp"
#include "trs/gf.hpp"
#include "trs/rs.hpp"
#include "trs/words.hpp"

namespace trs {

struct ReceivedWord {
  Word a;
  Word b;
  Word z;

  static ReceivedWord from_flat(std::span<const Symbol> word) {
    if (word.size() % 3 != 0) {
      throw std::invalid_argument("ReceivedWord: length not divisible by 3");
    }
    const std::size_t n = word.size() / 3;
    return ReceivedWord{Word(word.begin(), word.begin() + n),
                        Word(word.begin() + n, word.begin() + 2 * n),
                        Word(word.begin() + 2 * n, word.end())};
  }

  Word flat() const {
    Word out;
    out.reserve(3 * a.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), z.begin(), z.end());
    return out;
  }
};

enum class CascadeStatus {
  Success,
  Step1Failure,         // C_z decoding of the combined word failed
  Step2Failure,         // too many erasures or punctured C_b decoding failed
  AllCandidatesFailed,  // every C_a stream decoding failed
};

inline const char* to_string(CascadeStatus s) {
  switch (s) {
    case CascadeStatus::Success: return "success";
    case CascadeStatus::Step1Failure: return "step1_failure";
    case CascadeStatus::Step2Failure: return "step2_failure";
    case CascadeStatus::AllCandidatesFailed: return "all_candidates_failed";
  }
  return "unknown";
}

struct CascadeCandidate {
  Word a;                    // surviving C_a codeword
  Word message;              // its length-k_a message
  std::size_t stream = 0;    // 0: from r_a, 1: from r_b-b, 2: from r_z-...
  std::size_t weight_a = 0;  // |r_a - a|
  std::size_t weight_b = 0;  // |r_b - b_hat - a|
  std::size_t weight_z = 0;  // |r_z - alpha*b_hat - z_hat - a|
  std::size_t total = 0;
};

struct DecodeTrace {
  Word z_hat;
  std::vector<std::size_t> e_locs;  // E_abz, support of the step-1 error
  Word b_hat;
  std::vector<CascadeCandidate> candidates;
  std::optional<std::size_t> chosen;  // index into candidates
  std::size_t tau_min = std::numeric_limits<std::size_t>::max();
};

struct CascadeOutcome {
  CascadeStatus status = CascadeStatus::Step1Failure;
  Word codeword;          // length 3n, on success
  MessageTriple message;  // on success
  DecodeTrace trace;

  bool ok() const { return status == CascadeStatus::Success; }
};

// r_z - alpha*r_b + (alpha-1)*r_a computed coordinatewise; on a noiseless
// word this is exactly the component codeword z.
inline Word combine_step1(const NestedTriple& triple, const ReceivedWord& r) {
  const std::size_t n = triple.n();
  if (r.a.size() != n || r.b.size() != n || r.z.size() != n) {
    throw std::invalid_argument("combine_step1: block length != n");
  }
  const Field& f = triple.field();
  const Symbol alpha = triple.alpha();
  const Symbol alpha1 = alpha ^ 1;  // alpha - 1 == alpha + 1
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Symbol>(r.z[i] ^ f.mul(alpha, r.b[i]) ^
                                 f.mul(alpha1, r.a[i]));
  }
  return out;
}

inline CascadeOutcome cascade_decode(const NestedTriple& triple,
                                     const ReceivedWord& r) {
  const std::size_t n = triple.n();
  const Field& f = triple.field();
  const Symbol alpha = triple.alpha();
  CascadeOutcome out;

  // Step 1: recover z from the a- and b-free combination.
  const Word combined = combine_step1(triple, r);
  const RSDecodeOutcome step1 = triple.code_z().decode(combined);
  if (!step1.ok()) {
    out.status = CascadeStatus::Step1Failure;
    return out;
  }
  out.trace.z_hat = step1.codeword;
  for (std::size_t i = 0; i < n; ++i) {
    if (step1.error_vector[i] != 0) out.trace.e_locs.push_back(i);
  }

  // Step 2: recover b from r_b - r_a with the step-1 error support erased.
  // More erasures than d_b - 1 would leave the punctured code with no
  // designed distance.
  if (out.trace.e_locs.size() + 1 > triple.code_b().d()) {
    out.status = CascadeStatus::Step2Failure;
    return out;
  }
  const Word diff_ba = xor_words(r.b, r.a);
  const RSDecodeOutcome step2 = triple.code_b().decode(diff_ba, out.trace.e_locs);
  if (!step2.ok()) {
    out.status = CascadeStatus::Step2Failure;
    return out;
  }
  out.trace.b_hat = step2.codeword;

  // Step 3: three independent noisy copies of a.
  std::array<Word, 3> streams;
  streams[0] = r.a;
  streams[1] = xor_words(r.b, out.trace.b_hat);
  streams[2] = Word(n);
  for (std::size_t i = 0; i < n; ++i) {
    streams[2][i] = static_cast<Symbol>(
        r.z[i] ^ f.mul(alpha, out.trace.b_hat[i]) ^ out.trace.z_hat[i]);
  }
  for (std::size_t s = 0; s < 3; ++s) {
    RSDecodeOutcome dec = triple.code_a().decode(streams[s]);
    if (!dec.ok()) continue;  // dropped, not fatal
    CascadeCandidate cand;
    cand.a = std::move(dec.codeword);
    cand.message = std::move(dec.message);
    cand.stream = s;
    cand.weight_a = hamming_distance(streams[0], cand.a);
    cand.weight_b = hamming_distance(streams[1], cand.a);
    cand.weight_z = hamming_distance(streams[2], cand.a);
    cand.total = cand.weight_a + cand.weight_b + cand.weight_z;
    out.trace.candidates.push_back(std::move(cand));
  }
  if (out.trace.candidates.empty()) {
    out.status = CascadeStatus::AllCandidatesFailed;
    return out;
  }

  // Step 4: minimum implied error weight; ties go to the lowest stream
  // index (candidates are kept in stream order).
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.trace.candidates.size(); ++i) {
    if (out.trace.candidates[i].total < out.trace.candidates[best].total) {
      best = i;
    }
  }
  const CascadeCandidate& chosen = out.trace.candidates[best];
  out.trace.chosen = best;
  out.trace.tau_min = chosen.total;

  out.status = CascadeStatus::Success;
  out.codeword = triple.compose(chosen.a, out.trace.b_hat, out.trace.z_hat);
  out.message = MessageTriple{chosen.message, step2.message, step1.message};
  return out;
}

inline CascadeOutcome cascade_decode(const NestedTriple& triple,
                                     std::span<const Symbol> flat) {
  if (flat.size() != triple.n0()) {
    throw std::invalid_argument("cascade_decode: length != 3n");
  }
  return cascade_decode(triple, ReceivedWord::from_flat(flat));
}

// Test-side accounting for a known transmitted word: how the true error
// pattern looks to the cascade.  Exists only relative to ground truth and
// is used by the simulator and the verification suites.
struct GroundTruthAnalysis {
  std::size_t tau = 0;                     // total symbol errors over 3n
  std::vector<std::size_t> e_locs_true;    // support of the step-1 combination
  std::vector<std::size_t> cancelled;      // nonzero error columns hidden from
                                           // step 1 by cancellation
  std::size_t step2_errors = 0;            // errors step 2 faces outside the
                                           // true erasure set
  bool accounting_holds = false;           // |E*| + 2|I| <= tau
};

inline GroundTruthAnalysis analyze_ground_truth(const NestedTriple& triple,
                                                std::span<const Symbol> error) {
  const std::size_t n = triple.n();
  if (error.size() != 3 * n) {
    throw std::invalid_argument("analyze_ground_truth: error length != 3n");
  }
  const Field& f = triple.field();
  const Symbol alpha = triple.alpha();
  const Symbol alpha1 = alpha ^ 1;

  GroundTruthAnalysis out;
  out.tau = weight(error);
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol ea = error[i];
    const Symbol eb = error[n + i];
    const Symbol ez = error[2 * n + i];
    const Symbol combined =
        static_cast<Symbol>(ez ^ f.mul(alpha, eb) ^ f.mul(alpha1, ea));
    if (combined != 0) {
      out.e_locs_true.push_back(i);
    } else if (ea != 0 || eb != 0 || ez != 0) {
      // A single nonzero term cannot cancel (alpha is not 0 or 1), so a
      // hidden column always carries at least two error symbols.
      out.cancelled.push_back(i);
      if (eb != ea) ++out.step2_errors;
    }
  }
  out.accounting_holds =
      out.e_locs_true.size() + 2 * out.cancelled.size() <= out.tau;
  return out;
}

// Overload taking transmitted and received words.
inline GroundTruthAnalysis analyze_ground_truth(
    const NestedTriple& triple, std::span<const Symbol> transmitted,
    std::span<const Symbol> received) {
  return analyze_ground_truth(triple, xor_words(received, transmitted));
}

}  // namespace trs
