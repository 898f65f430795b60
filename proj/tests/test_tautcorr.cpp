#include <doctest.h>

#include "cubmot/error.hpp"
#include "cubmot/instances.hpp"
#include "cubmot/tautcorr.hpp"

using namespace cubmot;

namespace {

const VarietyData X = VarietyData::cubic_fourfold();

CorrClass hh(int a, int b, const Rational& c = 1) { return c * CorrClass::mono(X, {a, b, 0}, 2); }
CorrClass D2() { return CorrClass::diag(X, 2, 1, 2); }

CorrClass random_corr(Rng& rng) {
  CorrClass f(X, 2);
  for (int t = 0; t < 4; ++t)
    f += hh(uniform_int(rng, 0, 4), uniform_int(rng, 0, 4), rat(uniform_int(rng, -5, 5), uniform_int(rng, 1, 4)));
  f += rat(uniform_int(rng, -2, 2)) * D2();
  return f;
}

CorrClass random_corr3(Rng& rng) {
  auto bm = basis_monomials(3);
  CorrClass f(X, 3);
  for (int t = 0; t < 3; ++t)
    f.add_term(bm[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(bm.size()) - 1))],
               rat(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3)));
  return f;
}

}  // namespace

TEST_CASE("monomial codes round trip") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : basis_monomials(n)) CHECK(parse_monomial(m.code(n), n) == m);
  CHECK(BasisMonomial::diagonal_h(0, 1, 3).code(3) == "D12 h3^3");
  CHECK(BasisMonomial::plain_h({2, 4, 0}).code(2) == "h1^2 h2^4");
  CHECK(BasisMonomial::small_diagonal().code(3) == "delta");
  CHECK(basis_monomials(1).size() == 5);
  CHECK(basis_monomials(2).size() == 26);
  CHECK(basis_monomials(3).size() == 125 + 15 + 1);
  CHECK_THROWS_AS(parse_monomial("D12 h1", 3), Error);
}

TEST_CASE("normal-form ordering: monomials, then diagonals, then delta") {
  auto bm = basis_monomials(3);
  CHECK(bm.front().kind == BasisMonomial::Kind::plain);
  CHECK(bm.back().kind == BasisMonomial::Kind::small);
}

TEST_CASE("excess intersection rules") {
  // Delta . h_1 = (1/3) sum_{i=1}^{4} h^i x h^{5-i}
  CorrClass expect = hh(1, 4, rat(1, 3)) + hh(2, 3, rat(1, 3)) + hh(3, 2, rat(1, 3)) + hh(4, 1, rat(1, 3));
  CHECK(intersect(D2(), CorrClass::h(X, 2, 1)) == expect);
  // oracle: multiply the k = 1 relation by h_1^3 and drop exponents above 4
  CorrClass k4(X, 2);
  for (const auto& [m, c] : expect.terms()) k4 += c * CorrClass::mono(X, {m.exps[0] + 3, m.exps[1], 0}, 2);
  CHECK(diagonal_pushforward(X, 2, 0, 1, 4) == k4);
  CHECK(k4 == hh(4, 4, rat(1, 3)));
  // Delta . Delta = Delta_*(c_4) = 9 Delta_*(h^4) = 3 h^4 x h^4
  CHECK(intersect(D2(), D2()) == hh(4, 4, 3));
}

TEST_CASE("Delta . h_1 = Delta . h_2") {
  CHECK(intersect(D2(), CorrClass::h(X, 2, 1)) == intersect(D2(), CorrClass::h(X, 2, 2)));
}

TEST_CASE("intersections on X^3") {
  CHECK((intersect(CorrClass::h(X, 1, 1, 2), CorrClass::h(X, 1, 1, 3))).is_zero());
  CorrClass d12 = CorrClass::diag(X, 3, 1, 2), d13 = CorrClass::diag(X, 3, 1, 3), d23 = CorrClass::diag(X, 3, 2, 3);
  CHECK(intersect(d12, d13) == CorrClass::small_diag(X));
  CHECK(intersect(d12, d23) == CorrClass::small_diag(X));
  CHECK(intersect(d13, d23) == CorrClass::small_diag(X));
  CorrClass dh = intersect(pull(D2(), 3, {1, 2}), pull(CorrClass::h(X, 1, 1, 4), 3, {3}));
  CHECK(dh == CorrClass::basis(X, 3, BasisMonomial::diagonal_h(0, 1, 4)));
  CHECK_THROWS_AS(intersect(D2(), d12), Error);
}

TEST_CASE("small diagonal rederived through other pulls") {
  CorrClass a = intersect(pull(D2(), 3, {1, 2}), pull(D2(), 3, {1, 3}));
  CorrClass b = intersect(pull(D2(), 3, {1, 2}), pull(D2(), 3, {2, 3}));
  CorrClass c = intersect(pull(D2(), 3, {2, 3}), pull(D2(), 3, {1, 3}));
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a == CorrClass::small_diag(X));
}

TEST_CASE("associativity and commutativity of the product on X^3") {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    CorrClass a = random_corr3(rng), b = random_corr3(rng), c = random_corr3(rng);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
  }
}

TEST_CASE("reduction is linear and idempotent") {
  RawExpr x{3, {{rat(2), {{RawFactor::Kind::diagonal, 1, 1, 1, 2}, {RawFactor::Kind::h, 3, 2}}},
                {rat(-1, 3), {{RawFactor::Kind::small}, {RawFactor::Kind::h, 1, 1}}}}};
  RawExpr y{3, {{rat(5), {{RawFactor::Kind::diagonal, 1, 1, 2, 3}, {RawFactor::Kind::diagonal, 1, 1, 1, 3}}}}};
  RawExpr xy{3, x.terms};
  xy.terms.insert(xy.terms.end(), y.terms.begin(), y.terms.end());
  CorrClass rx = reduce(X, x), ry = reduce(X, y);
  CHECK(reduce(X, xy) == rx + ry);
  CHECK(ry == 5 * CorrClass::small_diag(X));
  // re-reducing a normal form is a fixed point
  RawExpr again{3, {}};
  for (const auto& [m, c] : rx.terms()) {
    RawTerm t{c, {}};
    if (m.kind == BasisMonomial::Kind::small) t.factors.push_back({RawFactor::Kind::small});
    if (m.kind == BasisMonomial::Kind::diagonal) t.factors.push_back({RawFactor::Kind::diagonal, 1, 1, m.i + 1, m.j + 1});
    for (int s = 0; s < 3; ++s)
      if (m.exps[static_cast<std::size_t>(s)] > 0) t.factors.push_back({RawFactor::Kind::h, s + 1, m.exps[static_cast<std::size_t>(s)]});
    again.terms.push_back(t);
  }
  CHECK(reduce(X, again) == rx);
}

TEST_CASE("push-forward along p13") {
  CHECK(push(CorrClass::small_diag(X), {1, 3}) == D2());
  CHECK(push(CorrClass::mono(X, {2, 4, 1}, 3), {1, 3}) == hh(2, 1, 3));
  // oracle: the middle factor is free, so integrating h^4 over it gives 3
  CHECK(push(CorrClass::basis(X, 3, BasisMonomial::diagonal_h(0, 2, 4)), {1, 3}) == 3 * D2());
  CHECK(push(CorrClass::basis(X, 3, BasisMonomial::diagonal_h(0, 1, 2)), {1, 3}) == hh(0, 2));
  CHECK(push(CorrClass::basis(X, 3, BasisMonomial::diagonal_h(1, 2, 3)), {1, 3}) == hh(3, 0));
  CHECK(push(CorrClass::h(X, 2, 2, 4), {1}) == 3 * CorrClass::unit(X, 1));
  CHECK(push(D2(), {2}) == CorrClass::unit(X, 1));
  Projection p{Projection::Dir::push, 3, 2, {1, 3}};
  CHECK(push_pull(CorrClass::small_diag(X), p) == D2());
  Projection bad{Projection::Dir::push, 3, 1, {1}};
  CHECK_THROWS_AS(push_pull(CorrClass::small_diag(X), bad), Error);
}

TEST_CASE("composition") {
  CHECK(compose(D2(), hh(2, 1)) == hh(2, 1));
  CHECK(compose(hh(2, 1), D2()) == hh(2, 1));
  CHECK(compose(hh(2, 2), hh(0, 2)) == hh(0, 2, 3));
  CHECK(compose_via_pullpush(hh(2, 2), hh(0, 2)) == hh(0, 2, 3));
  CHECK(compose(hh(1, 0), hh(0, 2)).is_zero());
  CHECK_THROWS_AS(compose(CorrClass::small_diag(X), D2()), Error);
}

TEST_CASE("closed composition rules agree with pull-push through X^3") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    CorrClass f = random_corr(rng), g = random_corr(rng);
    CHECK(compose(g, f) == compose_via_pullpush(g, f));
    CHECK(transpose(compose(g, f)) == compose(transpose(f), transpose(g)));
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(hh(1, 3)) == hh(3, 1));
  CHECK(transpose(D2()) == D2());
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    CorrClass f = random_corr(rng);
    CHECK(transpose(transpose(f)) == f);
  }
}

TEST_CASE("Chow-Kunneth projectors") {
  CKProjectors p = ck_projectors(X);
  CHECK(p.pi0 == hh(4, 0, rat(1, 3)));
  CHECK(compose(p.pi0, p.pi0) == p.pi0);
  CHECK(transpose(p.pi0) == p.pi8);
  CHECK(p.pi0 + p.pi2 + p.pi4 + p.pi6 + p.pi8 == D2());
  std::vector<CorrClass> ps{p.pi0, p.pi2, p.pi6, p.pi8, p.pi4};
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      CorrClass c = compose(ps[i], ps[j]);
      if (i == j) CHECK(c == ps[i]);
      else CHECK(c.is_zero());
    }
  CHECK(compose(p.pi4_prim, p.pi4) == p.pi4_prim);
  CHECK(compose(p.pi4, p.pi4_prim) == p.pi4_prim);
  CHECK(compose(p.pi4_prim, p.pi4_prim) == p.pi4_prim);
  CHECK(transpose(p.pi4_prim) == p.pi4_prim);
}

TEST_CASE("multiplication by h kills the primitive projector") {
  CKProjectors p = ck_projectors(X);
  for (int a = 0; a <= 3; ++a) {
    CorrClass z = hh(a, 3 - a);
    CHECK(compose(p.pi4_prim, intersect(z, CorrClass::h(X, 2, 1))).is_zero());
    CHECK(compose(intersect(z, CorrClass::h(X, 2, 2)), p.pi4_prim).is_zero());
  }
}

TEST_CASE("degree on X^n") {
  CHECK(degree(CorrClass::h(X, 1, 1, 4)) == 3);
  CHECK(degree(hh(4, 4)) == 9);
  CHECK(degree(intersect(D2(), hh(2, 2))) == 3);
  CHECK(degree(intersect(CorrClass::small_diag(X), CorrClass::mono(X, {2, 1, 1}, 3))) == 3);
}
