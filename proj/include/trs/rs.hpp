// rs.hpp
//
// Reed-Solomon codes in evaluation form: the code of length n is the image
// of all polynomials of degree < k evaluated at n distinct field points, so
// d = n - k + 1 (MDS) and codes with the same points and nested dimensions
// are nested as sets.
//
// Decoding interpolates the received word and runs a partial extended
// Euclidean algorithm on (prod (x - x_i), interpolation), stopping at
// degree (n+k)/2; the result is exact whenever 2*errors + erasures <= d-1.
// Erasures are handled by puncturing to the surviving positions, decoding
// there, and re-extending the message polynomial to the full point set,
// which is distance-exact for MDS codes.

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trs/gf.hpp"
#include "trs/poly.hpp"
#include "trs/words.hpp"

namespace trs {

enum class DecodeStatus { Success, Failure };

struct RSDecodeOutcome {
  DecodeStatus status = DecodeStatus::Failure;
  Word codeword;      // length n, empty on failure
  Word message;       // length k polynomial coefficients, empty on failure
  Word error_vector;  // received - codeword, empty on failure
  std::size_t error_weight = 0;

  bool ok() const { return status == DecodeStatus::Success; }
};

// Coordinate indices whose values are unreliable and carry no vote.
using ErasureSet = std::vector<std::size_t>;

class RSCode {
 public:
  RSCode(std::shared_ptr<const Field> field, std::size_t n, std::size_t k)
      : RSCode(std::move(field), n, k, Word{}) {}

  // Default evaluation points are the first n entries of
  // (1, g, g^2, ..., g^(q-2), 0) for the field generator g.
  RSCode(std::shared_ptr<const Field> field, std::size_t n, std::size_t k,
         Word eval_points)
      : field_(std::move(field)), n_(n), k_(k), points_(std::move(eval_points)) {
    if (!field_) throw std::invalid_argument("RSCode: null field");
    const std::uint32_t q = field_->q();
    if (n_ < 1 || n_ > q) {
      throw std::invalid_argument("RSCode: need 1 <= n <= q, got n=" +
                                  std::to_string(n_));
    }
    if (k_ < 1 || k_ > n_) {
      throw std::invalid_argument("RSCode: need 1 <= k <= n, got k=" +
                                  std::to_string(k_));
    }
    if (points_.empty()) {
      points_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        points_[i] = (i < q - 1) ? field_->exp_at(static_cast<std::uint32_t>(i))
                                 : 0;
      }
    }
    if (points_.size() != n_) {
      throw std::invalid_argument("RSCode: eval point count != n");
    }
    std::vector<bool> seen(q, false);
    for (Symbol pt : points_) {
      if (pt >= q) throw std::invalid_argument("RSCode: eval point >= q");
      if (seen[pt]) throw std::invalid_argument("RSCode: duplicate eval point");
      seen[pt] = true;
    }

    master_ = poly::from_roots(*field_, points_);
    const poly::Poly dmaster = poly::derivative(master_);
    winv_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      winv_[i] = field_->inv(poly::eval(*field_, dmaster, points_[i]));
    }
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t d() const { return n_ - k_ + 1; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const Word& eval_points() const { return points_; }

  // codeword_i = f(x_i) where f's coefficients are the message.
  Word encode(std::span<const Symbol> message) const {
    if (message.size() != k_) {
      throw std::invalid_argument("encode: message length != k");
    }
    Word out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = poly::eval(*field_, message, points_[i]);
    }
    return out;
  }

  bool is_codeword(std::span<const Symbol> word) const {
    if (word.size() != n_) return false;
    const poly::Poly f = poly::interpolate(
        *field_, std::span<const Symbol>(points_).first(k_), word.first(k_));
    for (std::size_t i = k_; i < n_; ++i) {
      if (poly::eval(*field_, f, points_[i]) != word[i]) return false;
    }
    return true;
  }

  // Bounded-distance errors-and-erasures decoding.  Exact recovery whenever
  // 2*wt(error outside erasures) + |erasures| <= d - 1; beyond that the
  // outcome is Failure or a miscorrection, never an exception.
  RSDecodeOutcome decode(std::span<const Symbol> received,
                         const ErasureSet& erasures = {}) const {
    if (received.size() != n_) {
      throw std::invalid_argument("decode: received length != n");
    }
    if (erasures.empty()) {
      RSDecodeOutcome out = gao_decode(received);
      finish(received, out);
      return out;
    }

    std::vector<bool> erased(n_, false);
    for (std::size_t pos : erasures) {
      if (pos >= n_) throw std::invalid_argument("decode: erasure index >= n");
      if (erased[pos]) throw std::invalid_argument("decode: duplicate erasure");
      erased[pos] = true;
    }
    std::vector<std::size_t> keep;
    keep.reserve(n_ - erasures.size());
    for (std::size_t i = 0; i < n_; ++i) {
      if (!erased[i]) keep.push_back(i);
    }
    if (keep.size() < k_) return RSDecodeOutcome{};  // s >= d: hopeless

    Word punct_points(keep.size()), punct_recv(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      punct_points[i] = points_[keep[i]];
      punct_recv[i] = received[keep[i]];
    }
    const RSCode punctured(field_, keep.size(), k_, std::move(punct_points));
    RSDecodeOutcome out = punctured.gao_decode(punct_recv);
    if (!out.ok()) return RSDecodeOutcome{};
    out.codeword = encode(out.message);  // re-extend to all n points
    finish(received, out);
    return out;
  }

  // The [n', k, n'-k+1] code on the retained points.
  RSCode puncture(const std::vector<std::size_t>& keep) const {
    check_keep(keep);
    Word pts(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) pts[i] = points_[keep[i]];
    return RSCode(field_, keep.size(), k_, std::move(pts));
  }

  // Inverse of puncturing for codewords: interpolate the degree-<k
  // polynomial from k retained coordinates and evaluate it everywhere.
  Word reextend(std::span<const Symbol> punctured_word,
                const std::vector<std::size_t>& keep) const {
    check_keep(keep);
    if (punctured_word.size() != keep.size()) {
      throw std::invalid_argument("reextend: word/keep length mismatch");
    }
    Word xs(k_), ys(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      xs[i] = points_[keep[i]];
      ys[i] = punctured_word[i];
    }
    const poly::Poly f = poly::interpolate(*field_, xs, ys);
    Word out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = poly::eval(*field_, f, points_[i]);
    }
    return out;
  }

 private:
  void check_keep(const std::vector<std::size_t>& keep) const {
    if (keep.size() < k_) {
      throw std::invalid_argument("puncture: fewer than k retained positions");
    }
    std::vector<bool> seen(n_, false);
    for (std::size_t pos : keep) {
      if (pos >= n_) throw std::invalid_argument("puncture: index >= n");
      if (seen[pos]) throw std::invalid_argument("puncture: duplicate index");
      seen[pos] = true;
    }
  }

  void finish(std::span<const Symbol> received, RSDecodeOutcome& out) const {
    if (!out.ok()) return;
    out.message.resize(k_, 0);
    out.error_vector = xor_words(received, out.codeword);
    out.error_weight = weight(out.error_vector);
  }

  // Errors-only decoding up to floor((n-k)/2) wrong symbols.
  RSDecodeOutcome gao_decode(std::span<const Symbol> received) const {
    RSDecodeOutcome out;

    poly::Poly r0 = master_;
    poly::Poly r1 = interpolate_received(received);
    poly::Poly v0;       // 0
    poly::Poly v1{1};

    // Stop at the first remainder of degree < (n+k)/2.  The error locations
    // end up among the roots of v1, whose degree stays <= (n-k)/2.
    while (2 * poly::degree(r1) >= static_cast<int>(n_ + k_)) {
      auto [quot, rem] = poly::divmod(*field_, std::move(r0), r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      poly::Poly vnext = poly::add(v0, poly::mul(*field_, quot, v1));
      v0 = std::move(v1);
      v1 = std::move(vnext);
    }

    auto [f, frem] = poly::divmod(*field_, std::move(r1), v1);
    if (poly::degree(frem) >= 0) return out;                      // not divisible
    if (poly::degree(f) >= static_cast<int>(k_)) return out;      // too many errors
    f.resize(k_, 0);
    out.status = DecodeStatus::Success;
    out.message = std::move(f);
    out.codeword = encode(out.message);
    return out;
  }

  // Lagrange interpolation with the per-code master polynomial and
  // barycentric weights precomputed.
  poly::Poly interpolate_received(std::span<const Symbol> ys) const {
    poly::Poly out(n_, 0);
    poly::Poly basis(n_);
    const Field& f = *field_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (ys[i] == 0) continue;
      Symbol carry = master_[n_];
      for (std::size_t j = n_; j > 0; --j) {
        basis[j - 1] = carry;
        carry = static_cast<Symbol>(master_[j - 1] ^ f.mul(carry, points_[i]));
      }
      const Symbol scale = f.mul(ys[i], winv_[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        out[j] ^= f.mul(basis[j], scale);
      }
    }
    poly::trim(out);
    return out;
  }

  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::size_t k_;
  Word points_;
  poly::Poly master_;  // prod (x - x_i), degree n
  Word winv_;          // 1 / master'(x_i)
};

}  // namespace trs
