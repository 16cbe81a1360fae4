// poly.hpp
//
// Dense univariate polynomial arithmetic over a Field.  Coefficients are
// stored lowest degree first.  The zero polynomial is any all-zero (or
// empty) vector and has degree -1.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trs/gf.hpp"

namespace trs::poly {

using Poly = std::vector<Symbol>;

inline int degree(std::span<const Symbol> p) {
  for (std::size_t i = p.size(); i > 0; --i) {
    if (p[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(std::span<const Symbol> a, std::span<const Symbol> b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
  trim(out);
  return out;
}

inline Poly mul(const Field& f, std::span<const Symbol> a,
                std::span<const Symbol> b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] ^= f.mul(a[i], b[j]);
    }
  }
  trim(out);
  return out;
}

inline Poly mul_scalar(const Field& f, std::span<const Symbol> a, Symbol c) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(out);
  return out;
}

inline Symbol eval(const Field& f, std::span<const Symbol> p, Symbol x) {
  Symbol acc = 0;
  for (std::size_t i = p.size(); i > 0; --i) {
    acc = static_cast<Symbol>(f.mul(acc, x) ^ p[i - 1]);
  }
  return acc;
}

// Quotient and remainder of num / den.  den must be nonzero.
inline std::pair<Poly, Poly> divmod(const Field& f, Poly num,
                                    std::span<const Symbol> den) {
  const int dd = degree(den);
  if (dd < 0) throw std::domain_error("polynomial division by zero");
  trim(num);
  int dn = degree(num);
  if (dn < dd) return {Poly{}, std::move(num)};
  Poly quot(static_cast<std::size_t>(dn - dd) + 1, 0);
  const Symbol lead_inv = f.inv(den[static_cast<std::size_t>(dd)]);
  while (dn >= dd) {
    const Symbol coef = f.mul(num[static_cast<std::size_t>(dn)], lead_inv);
    const std::size_t shift = static_cast<std::size_t>(dn - dd);
    quot[shift] = coef;
    for (int i = 0; i <= dd; ++i) {
      num[shift + static_cast<std::size_t>(i)] ^=
          f.mul(coef, den[static_cast<std::size_t>(i)]);
    }
    // The leading term cancels exactly; find the new degree.
    while (dn >= 0 && num[static_cast<std::size_t>(dn)] == 0) --dn;
  }
  trim(num);
  return {std::move(quot), std::move(num)};
}

// prod_{i} (x - points[i])
inline Poly from_roots(const Field& f, std::span<const Symbol> points) {
  Poly out{1};
  for (Symbol pt : points) {
    Poly next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] ^= out[i];
      next[i] ^= f.mul(out[i], pt);  // -pt == pt in characteristic 2
    }
    out = std::move(next);
  }
  return out;
}

// Formal derivative; the field has characteristic 2, so even-degree terms
// vanish and odd-degree coefficients shift down unchanged.
inline Poly derivative(std::span<const Symbol> p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); i += 2) {
    out.resize(i, 0);
    out[i - 1] = p[i];
  }
  trim(out);
  return out;
}

// Unique polynomial of degree < |xs| through (xs[i], ys[i]); Lagrange form,
// O(n^2).  The xs must be pairwise distinct.
inline Poly interpolate(const Field& f, std::span<const Symbol> xs,
                        std::span<const Symbol> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("interpolate: point/value length mismatch");
  }
  if (xs.empty()) return {};
  const Poly master = from_roots(f, xs);
  const Poly dmaster = derivative(master);
  Poly out(xs.size(), 0);
  Poly basis;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    // master / (x - xs[i]) by synthetic division.
    basis.assign(xs.size(), 0);
    Symbol carry = master[xs.size()];
    for (std::size_t j = xs.size(); j > 0; --j) {
      basis[j - 1] = carry;
      carry = static_cast<Symbol>(master[j - 1] ^ f.mul(carry, xs[i]));
    }
    const Symbol scale = f.div(ys[i], eval(f, dmaster, xs[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      out[j] ^= f.mul(basis[j], scale);
    }
  }
  trim(out);
  return out;
}

}  // namespace trs::poly
