#include <doctest.h>

#include "cubmot/error.hpp"
#include "cubmot/instances.hpp"
#include "cubmot/realization.hpp"

using namespace cubmot;

namespace {

const VarietyData X = VarietyData::cubic_fourfold();

RealizationConfig small_config() { return RealizationConfig(QuadSpace(Matrix{{2, 1}, {1, 2}})); }

CorrClass random_corr(Rng& rng, int n) {
  auto bm = basis_monomials(n);
  CorrClass f(X, n);
  for (int t = 0; t < 3; ++t)
    f.add_term(bm[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(bm.size()) - 1))],
               rat(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3)));
  return f;
}

}  // namespace

TEST_CASE("cubic model: products and pairing") {
  auto cfg = small_config();
  const auto& m = *cfg.model;
  CHECK(m.size() == 7);
  CHECK(m.integral(m.h_index(4)) == 3);
  CHECK(m.pairing().determinant() != 0);
  // e_1 e_2 = (G_12 / 3) h^4, so \int e_1 e_2 = G_12
  CHECK(m.pairing()(m.prim_offset(), m.prim_offset() + 1) == 1);
  CHECK(m.pairing()(m.prim_offset(), m.prim_offset()) == 2);
  // h . e = 0
  CHECK(m.product(m.h_index(1), m.prim_offset()).empty());
  CHECK(m.pairing() * m.pairing_inverse() == Matrix::identity(7));
}

TEST_CASE("K3 model") {
  auto m = CohomologyModel::k3(QuadSpace(Matrix{{-2}}), 4);
  CHECK(m->size() == 4);
  CHECK(m->pairing()(1, 1) == 4);
  CHECK(m->pairing()(2, 2) == -2);
  CHECK(m->pairing()(0, 3) == 1);
  CHECK(m->is_k3());
}

TEST_CASE("degrees of realized classes agree with the free ring") {
  auto cfg = RealizationConfig::default_config();
  CHECK(degree(realize(CorrClass::mono(X, {4, 4, 0}, 2), cfg)) == 9);
  RealizedClass d = realize(CorrClass::diag(X, 2, 1, 2), cfg);
  CHECK(d == realized_diagonal(cfg.model));
  // \int Delta . Delta = chi_top = 5 + 22
  CHECK(degree(multiply(d, d)) == 27);
  CHECK(degree(realize(intersect(CorrClass::small_diag(X), CorrClass::mono(X, {2, 1, 1}, 3)), cfg)) == 3);
}

TEST_CASE("realization is a ring map on X^2 and X^3") {
  auto cfg = small_config();
  Rng rng(31);
  for (int n = 2; n <= 3; ++n)
    for (int t = 0; t < 15; ++t) {
      CorrClass a = random_corr(rng, n), b = random_corr(rng, n);
      CHECK(realize(intersect(a, b), cfg) == multiply(realize(a, cfg), realize(b, cfg)));
      CHECK(realize(a + b, cfg) == realize(a, cfg) + realize(b, cfg));
    }
}

TEST_CASE("realization respects composition, transpose and push-forward") {
  auto cfg = small_config();
  Rng rng(32);
  for (int t = 0; t < 15; ++t) {
    CorrClass f = random_corr(rng, 2), g = random_corr(rng, 2);
    CHECK(realize(compose(g, f), cfg) == compose(realize(g, cfg), realize(f, cfg)));
    CHECK(realize(transpose(f), cfg) == transpose(realize(f, cfg)));
    CorrClass x = random_corr(rng, 3);
    CHECK(realize(push(x, {1, 3}), cfg) == push(realize(x, cfg), {1, 3}));
  }
}

TEST_CASE("degrees on X^3 monomials do not depend on the Gram") {
  RealizationConfig a = small_config();
  RealizationConfig b(QuadSpace(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 5}}));
  for (const auto& m : basis_monomials(3)) {
    CorrClass c = CorrClass::basis(X, 3, m);
    CHECK(degree(realize(c, a)) == degree(c));
    CHECK(degree(realize(c, b)) == degree(c));
  }
}

TEST_CASE("action matrices") {
  auto cfg = small_config();
  CKProjectors p = ck_projectors(X);
  Matrix a0 = action_matrix(realize(p.pi0, cfg));
  // pi^0 keeps 1 and kills everything else
  Vector one = cfg.model->h_power(0);
  CHECK(a0 * one == one);
  CHECK(a0 * cfg.model->h_power(2) == zero_vector(7));
  Matrix ad = action_matrix(realized_diagonal(cfg.model));
  CHECK(ad == Matrix::identity(7));
  Matrix a4 = action_matrix(realize(p.pi4_prim, cfg));
  CHECK(a4 * a4 == a4);
  CHECK(a4.rank() == 2);
}

TEST_CASE("transport along the diagonal is the identity") {
  auto cfg = small_config();
  RealizedClass d = realized_diagonal(cfg.model);
  RealizedClass delta = realize(CorrClass::small_diag(X), cfg);
  CHECK(transport(d, delta) == delta);
  CHECK(transport(d, d) == d);
}

TEST_CASE("P is symmetric, V-free and independent of the Gram") {
  PolynomialP p1 = derive_P(small_config());
  PolynomialP p2 = derive_P(RealizationConfig(QuadSpace(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 5}})));
  CHECK(p1 == p2);
  CHECK(p1.is_symmetric());
  CHECK(p1.coeffs.at({4, 4, 0}) == rat(-1, 9));
  CHECK(p1.coeffs.at({2, 3, 3}) == rat(1, 9));
  CHECK(p1.coeffs.size() == 6);
}

TEST_CASE("closed-form remainder degrees") {
  auto cfg = small_config();
  RealizedClass r = small_diagonal_remainder(cfg);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        RealizedClass m = realize(CorrClass::mono(X, {a, b, c}, 3), cfg);
        CHECK(degree(multiply(r, m)) == remainder_degree_closed_form(a, b, c));
      }
}

TEST_CASE("configuration validation") {
  CHECK(validate_config(default_prim_gram()).back().passed);
  auto bad = validate_config(default_prim_gram(21));
  CHECK_FALSE(bad.back().passed);
  CHECK(bad.back().id == "euler-consistency");
  auto asym = validate_config(Matrix{{1, 2}, {0, 1}});
  CHECK(asym.size() == 1);
  CHECK_FALSE(asym[0].passed);
  auto sing = validate_config(Matrix{{1, 1}, {1, 1}});
  CHECK(sing.size() == 2);
  CHECK_FALSE(sing[1].passed);
}

TEST_CASE("kernel identities hold at the realization level") {
  for (const auto& c : verify_kernel_identities(small_config())) {
    INFO(c.id << " " << c.detail);
    CHECK(c.passed);
  }
}
