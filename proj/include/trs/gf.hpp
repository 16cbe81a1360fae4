// gf.hpp
//
// GF(2^m) arithmetic for 2 <= m <= 16.  Elements are integers in [0, 2^m)
// in polynomial basis.  Multiplication and inversion go through log/antilog
// tables built once at construction; a Field is immutable afterwards and
// safe to share across threads.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trs {

// Field element value.  Always < q; ops assume both operands belong to the
// same field.
using Symbol = std::uint16_t;

namespace detail {

// Primitive polynomials over GF(2), indexed by degree m.  Standard table
// entries; the Field constructor re-validates primitivity anyway.
inline constexpr std::uint32_t kDefaultPrimPoly[17] = {
    0,       0,
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x89,    // x^7 + x^3 + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

}  // namespace detail

class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;

  explicit Field(unsigned m) : Field(m, default_prim_poly(m)) {}

  // prim_poly is the bit mask of a degree-m polynomial over GF(2); bit i is
  // the coefficient of x^i.  Rejected unless x generates the full
  // multiplicative group, i.e. the polynomial is primitive.
  Field(unsigned m, std::uint32_t prim_poly) : m_(m), poly_(prim_poly) {
    if (m < kMinDegree || m > kMaxDegree) {
      throw std::invalid_argument("field degree m must be in [2, 16], got " +
                                  std::to_string(m));
    }
    q_ = 1u << m;
    if (std::uint32_t(1) << m != (prim_poly & ~(q_ - 1u))) {
      throw std::invalid_argument("prim_poly must have degree exactly m");
    }

    // Walk x^0, x^1, x^2, ... reducing mod prim_poly.  x is primitive iff
    // the walk first returns to 1 after exactly q-1 steps.
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      if (i > 0 && cur == 1) {
        throw std::invalid_argument(
            "prim_poly is not primitive: x has multiplicative order " +
            std::to_string(i));
      }
      exp_[i] = static_cast<Symbol>(cur);
      exp_[i + q_ - 1] = static_cast<Symbol>(cur);
      log_[cur] = static_cast<std::int32_t>(i);
      cur <<= 1;
      if (cur & q_) cur ^= poly_;
    }
    if (cur != 1) {
      throw std::invalid_argument(
          "prim_poly is not primitive (or not irreducible): x^" +
          std::to_string(q_ - 1) + " != 1");
    }
  }

  static std::uint32_t default_prim_poly(unsigned m) {
    if (m < kMinDegree || m > kMaxDegree) {
      throw std::invalid_argument("field degree m must be in [2, 16], got " +
                                  std::to_string(m));
    }
    return detail::kDefaultPrimPoly[m];
  }

  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t prim_poly() const { return poly_; }

  // x itself; primitive by construction, so it generates all of F_q^*.
  Symbol generator() const { return 2; }

  Symbol add(Symbol a, Symbol b) const { return a ^ b; }
  // Characteristic 2: subtraction and addition coincide.
  Symbol sub(Symbol a, Symbol b) const { return a ^ b; }

  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::size_t>(log_[a]) +
                static_cast<std::size_t>(log_[b])];
  }

  Symbol inv(Symbol a) const {
    if (a == 0) throw std::domain_error("inverse of 0 is undefined");
    return exp_[q_ - 1 - static_cast<std::uint32_t>(log_[a])];
  }

  Symbol div(Symbol a, Symbol b) const {
    if (b == 0) throw std::domain_error("division by 0");
    if (a == 0) return 0;
    std::int64_t idx = log_[a] - log_[b];
    if (idx < 0) idx += q_ - 1;
    return exp_[static_cast<std::size_t>(idx)];
  }

  Symbol pow(Symbol a, std::int64_t e) const {
    if (a == 0) {
      if (e == 0) return 1;
      if (e > 0) return 0;
      throw std::domain_error("0 raised to a negative power");
    }
    const std::int64_t ord = static_cast<std::int64_t>(q_) - 1;
    std::int64_t em = e % ord;
    if (em < 0) em += ord;
    const std::int64_t idx = static_cast<std::int64_t>(log_[a]) * em % ord;
    return exp_[static_cast<std::size_t>(idx)];
  }

  // g^i for i in [0, q-1); exp_at(log_of(a)) == a for nonzero a.
  Symbol exp_at(std::uint32_t i) const { return exp_[i % (q_ - 1)]; }
  std::uint32_t log_of(Symbol a) const {
    if (a == 0) throw std::domain_error("log of 0 is undefined");
    return static_cast<std::uint32_t>(log_[a]);
  }

  bool operator==(const Field& other) const {
    return m_ == other.m_ && poly_ == other.poly_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  unsigned m_;
  std::uint32_t poly_;
  std::uint32_t q_;
  std::vector<Symbol> exp_;        // length 2(q-1), doubled to skip the mod
  std::vector<std::int32_t> log_;  // length q, log_[0] == -1
};

}  // namespace trs
