#include <doctest.h>

#include "cubmot/error.hpp"
#include "cubmot/graded_ring.hpp"
#include "cubmot/mukai.hpp"

using namespace cubmot;

namespace {

const VarietyData X = VarietyData::cubic_fourfold();

// Hilbert polynomial of a cubic fourfold: chi(O(t)) = C(t+5,5) - C(t+2,5).
Rational chi(long t) { return binomial(t + 5, 5) - binomial(t + 2, 5); }

}  // namespace

TEST_CASE("truncated multiplication") {
  TruncPoly one_h(X, {1, 1, 0, 0, 0});
  CHECK(one_h * one_h == TruncPoly(X, {1, 2, 1, 0, 0}));
  CHECK((TruncPoly::monomial(X, 3) * TruncPoly::monomial(X, 2)).is_zero());
  CHECK_THROWS_AS(mul(one_h, TruncPoly::monomial(VarietyData::k3(), 1)), Error);
}

TEST_CASE("(1+h)^6 / (1+3h) against a hand-expanded geometric series") {
  // oracle: (1+3h)^{-1} = sum (-3h)^k, convolved with the binomial row of (1+h)^6
  long row[5] = {1, 6, 15, 20, 15};
  long geo[5] = {1, -3, 9, -27, 81};
  Vector expect(5);
  for (int k = 0; k < 5; ++k) {
    long s = 0;
    for (int i = 0; i <= k; ++i) s += row[i] * geo[k - i];
    expect[static_cast<std::size_t>(k)] = s;
  }
  TruncPoly got = pow(TruncPoly(X, {1, 1, 0, 0, 0}), 6) * inverse(TruncPoly(X, {1, 3, 0, 0, 0}));
  CHECK(got.coeffs() == expect);
  CHECK(tangent_chern(X) == TruncPoly(X, {1, 3, 6, 2, 9}));
}

TEST_CASE("integration and the Euler characteristic") {
  CHECK(integrate(TruncPoly::monomial(X, 4)) == 3);
  CHECK(integrate(TruncPoly::monomial(X, 3)) == 0);
  // oracle: Betti numbers 1,0,1,0,23,0,1,0,1
  CHECK(integrate(TruncPoly::monomial(X, 4, tangent_chern(X)[4])) == 1 + 1 + 23 + 1 + 1);
}

TEST_CASE("adjunction: c_1 = n + 2 - e") {
  CHECK(first_chern(X) == TruncPoly::monomial(X, 1, 3));
  VarietyData quadric = VarietyData::hypersurface(3, 2);
  CHECK(tangent_chern(quadric)[1] == 2);
  VarietyData quintic3 = VarietyData::hypersurface(4, 5);
  CHECK(tangent_chern(quintic3)[1] == 0);
}

TEST_CASE("Todd class and its square root") {
  ToddPair trivial = todd_and_sqrt(TruncPoly::constant(X, 1));
  CHECK(trivial.td == TruncPoly::constant(X, 1));
  CHECK(trivial.sqrt_td == TruncPoly::constant(X, 1));
  ToddPair tp = todd_and_sqrt(tangent_chern(X));
  CHECK(integrate(tp.td) == chi(0));
  CHECK(tp.sqrt_td * tp.sqrt_td == tp.td);
  CHECK(tp.sqrt_td[0] == 1);
  CHECK_THROWS_AS(todd_and_sqrt(TruncPoly::constant(X, 2)), Error);
}

TEST_CASE("Todd class of projective space reproduces chi(O) = 1") {
  // P^4 as a degree-1 hypersurface in P^5
  VarietyData p4 = VarietyData::hypersurface(5, 1);
  CHECK(integrate(todd_and_sqrt(tangent_chern(p4)).td) == 1);
}

TEST_CASE("Mukai vectors of line bundles") {
  CHECK(mukai_vector_line(X, 0)[0] == 1);
  CHECK(mukai_pairing(mukai_vector_line(X, 0), mukai_vector_line(X, 0)) == chi(0));
  VarietyData s = VarietyData::k3();
  CHECK(mukai_pairing(mukai_vector_line(s, 0), mukai_vector_line(s, 0)) == 2);
}

TEST_CASE("the Mukai pairing of O(i), O(j) is chi(O(j-i)) for i, j in [-4, 4]") {
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      CHECK(mukai_pairing(mukai_vector_line(X, i), mukai_vector_line(X, j)) == chi(j - i));
}

TEST_CASE("dual is a sign-alternating involution") {
  CHECK(dual(TruncPoly(X, {1, 1, 0, 0, 0})) == TruncPoly(X, {1, -1, 0, 0, 0}));
  CHECK(dual(TruncPoly::monomial(X, 2)) == TruncPoly::monomial(X, 2));
  TruncPoly v(X, {rat(1, 2), -3, rat(7, 5), 11, rat(-1, 9)});
  CHECK(dual(dual(v)) == v);
}
