#include <doctest.h>

#include "cubmot/error.hpp"
#include "cubmot/instances.hpp"
#include "cubmot/mukai.hpp"
#include "cubmot/realization.hpp"

using namespace cubmot;

namespace {

const VarietyData X = VarietyData::cubic_fourfold();

Rational chi(long t) { return binomial(t + 5, 5) - binomial(t + 2, 5); }

std::vector<Matrix> two_grams() {
  Rng rng(11);
  return {default_prim_gram(), random_nondegenerate_gram(rng, 22)};
}

}  // namespace

TEST_CASE("Gram of the exceptional collection") {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(mukai_pairing(mukai_vector_line(X, i), mukai_vector_line(X, j)) == chi(j - i));
  CHECK(mukai_pairing(mukai_vector_line(X, 1), mukai_vector_line(X, 0)) == 0);
}

TEST_CASE("lambda classes") {
  auto [l1, l2] = lambda_basis(X);
  CHECK(l1[0] == 3);
  CHECK(l2[4] == rat(-153, 2048));
  CHECK(mukai_pairing(l1, l1) == -2);
  CHECK(mukai_pairing(l2, l2) == -2);
  CHECK(mukai_pairing(l1, l2) == 1);
  CHECK(mukai_pairing(l2, l1) == 1);
  Matrix span = Matrix::from_columns({mukai_vector_line(X, 0).coeffs(), mukai_vector_line(X, 1).coeffs(),
                                      mukai_vector_line(X, 2).coeffs(), l1.coeffs(), l2.coeffs()},
                                     5);
  CHECK(span.rank() == 5);
}

TEST_CASE("single mutation") {
  MukaiSpace space(X, QuadSpace(default_prim_gram()));
  MukaiVector o = space.line(0), o1 = space.line(1);
  // oracle: <v(O), v(O(1))> = chi(O(1)) = 6
  CHECK(mutate_project(space, o, o1) == o1 - Rational(6) * o);
  CHECK(mutate_project(space, o, o) == space.from_poly(TruncPoly(X)));
  MukaiVector perp = mutate_project(space, o, o1);
  CHECK(mutate_project(space, o, perp) == perp);
  MukaiVector twice = Rational(2) * o;
  CHECK_THROWS_AS(mutate_project(space, twice, o1), Error);
}

TEST_CASE("Kuznetsov projection for two Gram matrices") {
  for (const Matrix& g : two_grams()) {
    MukaiSpace space(X, QuadSpace(g));
    auto [l1, l2] = lambda_basis(X);
    for (Side side : {Side::left, Side::right}) {
      // left projects off O, O(1), O(2); right off O(-3), O(-2), O(-1)
      CHECK(kuznetsov_project(space, space.line(side == Side::left ? 1 : -2), side).poly.is_zero());
      Vector e = zero_vector(g.rows());
      e[3] = 1;
      CHECK(kuznetsov_project(space, space.from_prim(e), side) == space.from_prim(e));
      for (int k = 0; k <= 4; ++k) {
        MukaiVector p = kuznetsov_project(space, space.from_poly(TruncPoly::monomial(X, k)), side);
        CHECK(kuznetsov_project(space, p, side) == p);
        for (int i = 0; i < 3; ++i) CHECK(space.pair(space.line(i), p) == 0);
        Matrix m = Matrix::from_columns({p.poly.coeffs(), l1.coeffs(), l2.coeffs()}, 5);
        CHECK(m.rank() == 2);
      }
    }
  }
}

TEST_CASE("kernel classes act as the mutation projections") {
  MukaiSpace space(X, QuadSpace(default_prim_gram()));
  for (Side side : {Side::left, Side::right}) {
    CorrClass k = kernel_class(X, side);
    for (int i = -3; i <= 3; ++i) {
      MukaiVector v = space.line(i);
      CHECK(apply_kernel(space, k, v) == kuznetsov_project(space, v, side));
    }
    Vector e = zero_vector(22);
    e[0] = 1;
    CHECK(apply_kernel(space, k, space.from_prim(e)) == space.from_prim(e));
  }
}

TEST_CASE("kernel composition identities in the tautological ring") {
  CorrClass l = kernel_class(X, Side::left), r = kernel_class(X, Side::right);
  CHECK(compose(l, l) == l);
  CHECK(compose(r, r) == r);
  CHECK(compose(l, r) == r);
  CHECK(compose(r, l) == l);
}
