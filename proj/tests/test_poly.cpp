#include "trs/poly.hpp"

#include <memory>
#include <random>

#include "trs/words.hpp"

#include <gtest/gtest.h>

namespace trs {
namespace {

poly::Poly random_poly(std::mt19937_64& rng, const Field& f,
                       std::size_t max_len) {
  poly::Poly p(rng() % (max_len + 1));
  for (auto& c : p) c = static_cast<Symbol>(rng() % f.q());
  return p;
}

TEST(Poly, DegreeAndTrim) {
  EXPECT_EQ(poly::degree(poly::Poly{}), -1);
  EXPECT_EQ(poly::degree(poly::Poly{0, 0}), -1);
  EXPECT_EQ(poly::degree(poly::Poly{5}), 0);
  EXPECT_EQ(poly::degree(poly::Poly{0, 1, 0}), 1);
  poly::Poly p{1, 2, 0, 0};
  poly::trim(p);
  EXPECT_EQ(p, (poly::Poly{1, 2}));
}

TEST(Poly, EvalHorner) {
  const Field f(4);
  // f(x) = 1 + x over GF(4): f(0)=1, f(1)=0, f(g)=1^g.
  const poly::Poly p{1, 1};
  EXPECT_EQ(poly::eval(f, p, 0), 1);
  EXPECT_EQ(poly::eval(f, p, 1), 0);
  EXPECT_EQ(poly::eval(f, p, 2), 3);
  EXPECT_EQ(poly::eval(f, poly::Poly{}, 2), 0);
}

TEST(Poly, DivmodInvariant) {
  const Field f(8);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    poly::Poly num = random_poly(rng, f, 24);
    poly::Poly den = random_poly(rng, f, 12);
    if (poly::degree(den) < 0) den = poly::Poly{1};
    const auto [quot, rem] = poly::divmod(f, num, den);
    EXPECT_LT(poly::degree(rem), poly::degree(den));
    const poly::Poly recomposed =
        poly::add(poly::mul(f, quot, den), rem);
    poly::trim(num);
    EXPECT_EQ(recomposed, num);
  }
}

TEST(Poly, FromRootsVanishesExactlyOnRoots) {
  const Field f(4);
  const Word roots{1, 2, 3};
  const poly::Poly p = poly::from_roots(f, roots);
  EXPECT_EQ(poly::degree(p), 3);
  for (Symbol r : roots) EXPECT_EQ(poly::eval(f, p, r), 0);
  EXPECT_NE(poly::eval(f, p, 0), 0);
}

TEST(Poly, DerivativeCharacteristic2) {
  // d/dx (x^3 + x) = x^2 + 1; even-degree terms vanish.
  const poly::Poly p{0, 1, 0, 1};
  EXPECT_EQ(poly::derivative(p), (poly::Poly{1, 0, 1}));
  EXPECT_EQ(poly::derivative(poly::Poly{7}), poly::Poly{});
}

TEST(Poly, InterpolateRoundTrip) {
  const Field f(16, Field::default_prim_poly(16));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    // n distinct points.
    Word xs;
    std::vector<bool> used(f.q(), false);
    while (xs.size() < n) {
      const Symbol x = static_cast<Symbol>(rng() % f.q());
      if (!used[x]) {
        used[x] = true;
        xs.push_back(x);
      }
    }
    poly::Poly p = random_poly(rng, f, n);
    p.resize(n);  // degree < n
    Word ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = poly::eval(f, p, xs[i]);
    const poly::Poly q = poly::interpolate(f, xs, ys);
    poly::trim(p);
    EXPECT_EQ(q, p);
  }
}

}  // namespace
}  // namespace trs
