// construction.hpp
//
// Length-tripling code built from three nested Reed-Solomon codes, a
// generalized Plotkin (u | u+v) construction.  The components
// C_z <= C_b <= C_a live over one field and one evaluation-point set:
//
//   C = { (a | a+b | a+alpha*b+z) : a in C_a, b in C_b, z in C_z },
//
// with a fixed mixing parameter alpha outside {0, 1}.  The result has
// length 3n, dimension k_a + k_b + k_z and minimum distance
// min{3 d_a, 2 d_b, d_z}.  Nesting is automatic here: the component codes
// share evaluation points and k_z <= k_b <= k_a, so the lower-degree
// polynomial spaces are contained in the higher ones.

#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trs/gf.hpp"
#include "trs/rs.hpp"
#include "trs/words.hpp"

namespace trs {

struct CodeParams {
  std::size_t n0;  // 3n
  std::size_t k0;  // k_a + k_b + k_z
  std::size_t d0;  // min{3 d_a, 2 d_b, d_z}
};

struct MessageTriple {
  Word a;  // length k_a
  Word b;  // length k_b
  Word z;  // length k_z
};

class NestedTriple {
 public:
  // Default alpha is the field generator.
  NestedTriple(std::shared_ptr<const Field> field, std::size_t n,
               std::size_t k_a, std::size_t k_b, std::size_t k_z,
               std::optional<Symbol> alpha = std::nullopt)
      : code_a_(field, n, k_a),
        code_b_(field, n, k_b),
        code_z_(field, n, k_z),
        alpha_(alpha.value_or(field ? field->generator() : 0)) {
    if (!(k_a >= k_b && k_b >= k_z && k_z >= 1)) {
      throw std::invalid_argument(
          "NestedTriple: dimensions must satisfy k_a >= k_b >= k_z >= 1");
    }
    if (alpha_ == 0 || alpha_ == 1) {
      throw std::invalid_argument("NestedTriple: alpha must not be 0 or 1");
    }
    if (alpha_ >= field->q()) {
      throw std::invalid_argument("NestedTriple: alpha outside the field");
    }
  }

  const RSCode& code_a() const { return code_a_; }
  const RSCode& code_b() const { return code_b_; }
  const RSCode& code_z() const { return code_z_; }
  Symbol alpha() const { return alpha_; }
  const Field& field() const { return code_a_.field(); }
  const std::shared_ptr<const Field>& field_ptr() const {
    return code_a_.field_ptr();
  }
  std::size_t n() const { return code_a_.n(); }
  std::size_t n0() const { return 3 * code_a_.n(); }

  CodeParams params() const {
    const std::size_t d_a = code_a_.d(), d_b = code_b_.d(), d_z = code_z_.d();
    return CodeParams{3 * code_a_.n(),
                      code_a_.k() + code_b_.k() + code_z_.k(),
                      std::min({3 * d_a, 2 * d_b, d_z})};
  }

  Word encode(const MessageTriple& msg) const {
    return compose(code_a_.encode(msg.a), code_b_.encode(msg.b),
                   code_z_.encode(msg.z));
  }

  // Blockwise mixing of component codewords: (a | a+b | a+alpha*b+z).
  Word compose(std::span<const Symbol> a, std::span<const Symbol> b,
               std::span<const Symbol> z) const {
    const std::size_t n = code_a_.n();
    if (a.size() != n || b.size() != n || z.size() != n) {
      throw std::invalid_argument("compose: component length != n");
    }
    const Field& f = field();
    Word out(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = a[i];
      out[n + i] = a[i] ^ b[i];
      out[2 * n + i] = static_cast<Symbol>(a[i] ^ f.mul(alpha_, b[i]) ^ z[i]);
    }
    return out;
  }

  // Algebraic inverse of compose; tolerates non-codewords (the components
  // just fail membership).
  std::array<Word, 3> extract_components(std::span<const Symbol> word) const {
    const std::size_t n = code_a_.n();
    if (word.size() != 3 * n) {
      throw std::invalid_argument("extract_components: length != 3n");
    }
    const Field& f = field();
    std::array<Word, 3> abz{Word(n), Word(n), Word(n)};
    for (std::size_t i = 0; i < n; ++i) {
      const Symbol a = word[i];
      const Symbol b = word[n + i] ^ a;
      abz[0][i] = a;
      abz[1][i] = b;
      abz[2][i] = static_cast<Symbol>(word[2 * n + i] ^ a ^ f.mul(alpha_, b));
    }
    return abz;
  }

  bool is_codeword(std::span<const Symbol> word) const {
    if (word.size() != 3 * code_a_.n()) return false;
    const std::array<Word, 3> abz = extract_components(word);
    return code_a_.is_codeword(abz[0]) && code_b_.is_codeword(abz[1]) &&
           code_z_.is_codeword(abz[2]);
  }

 private:
  RSCode code_a_;
  RSCode code_b_;
  RSCode code_z_;
  Symbol alpha_;
};

}  // namespace trs
