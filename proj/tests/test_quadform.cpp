#include <doctest.h>

#include "cubmot/error.hpp"
#include "cubmot/instances.hpp"
#include "cubmot/quadform.hpp"

using namespace cubmot;

namespace {

Matrix perm(std::initializer_list<int> p) {
  std::vector<int> v(p);
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<std::size_t>(v[i]), i) = 1;
  return m;
}

// brute force: all products of generators of length <= 8
std::size_t brute_order(const std::vector<Matrix>& gens, std::size_t n) {
  std::vector<Matrix> seen{Matrix::identity(n)};
  for (int len = 0; len < 8; ++len) {
    std::vector<Matrix> next = seen;
    for (const auto& a : seen)
      for (const auto& g : gens) {
        Matrix p = g * a;
        if (std::find(next.begin(), next.end(), p) == next.end()) next.push_back(p);
      }
    seen = next;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(group_closure({Matrix::identity(2)}, Matrix::identity(2)).order() == 1);
  CHECK(group_closure({perm({1, 0})}, Matrix::identity(2)).order() == 2);
  Matrix c3 = perm({1, 2, 0});
  CHECK(group_closure({c3}, Matrix::identity(3)).order() == brute_order({c3}, 3));
  CHECK(brute_order({c3}, 3) == 3);
  Matrix s = perm({1, 0, 2});
  CHECK(group_closure({c3, s}, Matrix::identity(3)).order() == 6);
  CHECK_THROWS_AS(group_closure({Matrix{{2, 0}, {0, 1}}}, Matrix::identity(2)), Error);
  // infinite: a hyperbolic rotation of [[0,1],[1,0]]
  try {
    group_closure({Matrix{{2, 0}, {0, rat(1, 2)}}}, Matrix{{0, 1}, {1, 0}}, 50);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("radical") {
  CHECK(radical(QuadSpace(Matrix::identity(2))).cols() == 0);
  Matrix r = radical(QuadSpace(Matrix::diagonal({1, 0})));
  REQUIRE(r.cols() == 1);
  CHECK(r(0, 0) == 0);
  CHECK(r(1, 0) != 0);
  CHECK(radical(QuadSpace(Matrix{{0, 1}, {1, 0}})).cols() == 0);
}

TEST_CASE("fixed spaces") {
  QuadSpace v2(Matrix::identity(2));
  CHECK(fixed_space_form(v2, GroupAction::trivial(2)).basis.cols() == 2);
  FixedSpace f = fixed_space_form(v2, group_closure({perm({1, 0})}, Matrix::identity(2)));
  REQUIRE(f.basis.cols() == 1);
  CHECK(f.basis(0, 0) == f.basis(1, 0));
  CHECK(f.form.gram()(0, 0) == 2 * f.basis(0, 0) * f.basis(0, 0));
  // oracle: averaging projector of the 3-cycle is (1/3) J
  QuadSpace v3(Matrix::identity(3));
  FixedSpace f3 = fixed_space_form(v3, group_closure({perm({1, 2, 0})}, Matrix::identity(3)));
  Matrix j(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) j(a, b) = rat(1, 3);
  CHECK(f3.averaging == j);
  REQUIRE(f3.basis.cols() == 1);
  Rational c = f3.basis(0, 0);
  CHECK(f3.form.gram()(0, 0) == 3 * c * c);
}

TEST_CASE("reflect_to") {
  QuadSpace v(Matrix::identity(2));
  Isometry id = reflect_to({1, 0}, {1, 0}, v);
  CHECK(id.reflections == 0);
  CHECK(id.matrix == Matrix::identity(2));
  Isometry s = reflect_to({1, 0}, {0, 1}, v);
  CHECK(s.reflections == 1);
  CHECK(s.matrix == reflection(v, {1, -1}));
  QuadSpace w(Matrix::diagonal({1, -1, 1}));
  Vector x{1, 0, 0}, y{0, 0, 1};
  Isometry m = reflect_to(x, y, w);
  CHECK(m.matrix * x == y);
  CHECK(is_isometry(m.matrix, w.gram(), w.gram()));
  // q(x - y) = 0 forces the two-reflection branch
  QuadSpace h(Matrix::diagonal({1, 1, -1}));
  Vector a{1, 0, 0}, b{1, 1, 1};
  CHECK(h.q(a - b) == 0);
  Isometry t = reflect_to(a, b, h);
  CHECK(t.reflections == 2);
  CHECK(t.matrix * a == b);
  CHECK(is_isometry(t.matrix, h.gram(), h.gram()));
  CHECK_THROWS_AS(reflect_to({1, 0}, {1, 1}, v), Error);
  CHECK_THROWS_AS(reflect_to({1, 0, 1}, {1, 0, 1}, h), Error);
}

TEST_CASE("equivariant transport") {
  QuadSpace v(Matrix::identity(2));
  GroupAction swap = group_closure({perm({1, 0})}, Matrix::identity(2));
  CHECK(equivariant_transport({1, 1}, {1, 1}, v, swap).matrix == Matrix::identity(2));
  QuadSpace v4(Matrix::identity(4));
  GroupAction block = group_closure({perm({2, 3, 0, 1})}, Matrix::identity(4));
  Vector x{1, 0, 1, 0}, y{0, 1, 0, 1};
  Isometry m = equivariant_transport(x, y, v4, block);
  CHECK(m.matrix * x == y);
  CHECK(is_isometry(m.matrix, v4.gram(), v4.gram()));
  CHECK(commutes_with(m.matrix, block, block));
  // (V^G)^perp is fixed pointwise
  Vector z{1, 0, -1, 0};
  CHECK(m.matrix * z == z);
  CHECK_THROWS_AS(equivariant_transport({1, 0, 0, 0}, y, v4, block), Error);
  // trivial group reduces to reflect_to
  QuadSpace w(Matrix::diagonal({1, -1, 1}));
  CHECK(equivariant_transport({1, 0, 0}, {0, 0, 1}, w, GroupAction::trivial(3)).matrix ==
        reflect_to({1, 0, 0}, {0, 0, 1}, w).matrix);
}

TEST_CASE("orthogonal basis with the isotropic fallback") {
  QuadSpace h(Matrix{{0, 1}, {1, 0}});
  auto b = orthogonal_basis(h, Matrix::identity(2));
  REQUIRE(b.size() == 2);
  CHECK(h.q(b[0]) != 0);
  CHECK(h.q(b[1]) != 0);
  CHECK(h.pair(b[0], b[1]) == 0);
  CHECK_THROWS_AS(orthogonal_basis(QuadSpace(Matrix::diagonal({1, 0})), Matrix::identity(2)), Error);
}

TEST_CASE("Witt: trivial W and the one-dimensional case") {
  QuadSpace v(Matrix::identity(2));
  WittInput in{v, v, GroupAction::trivial(2), GroupAction::trivial(2), Matrix(2, 0), Matrix(2, 0),
               Matrix{{0, 1}, {1, 0}}, Matrix(2, 0)};
  WittResult r = equivariant_witt(in);
  CHECK(r.extension == in.phi_v);
  Matrix e1{{1}, {0}};
  WittInput one{v, v, GroupAction::trivial(2), GroupAction::trivial(2), e1, e1, Matrix::identity(2), e1};
  WittResult s = equivariant_witt(one);
  REQUIRE(s.u1.cols() == 1);
  CHECK(s.u1(0, 0) == 0);
  Vector img = s.extension * s.u1.column(0);
  CHECK(v.q(img) == v.q(s.u1.column(0)));
  CHECK(img[0] == 0);
}

TEST_CASE("Witt: precondition errors") {
  QuadSpace v(Matrix::identity(2));
  GroupAction swap = group_closure({perm({1, 0})}, Matrix::identity(2));
  Matrix w{{1}, {1}};
  // phi swaps coordinates with a sign: an isometry that does not commute with the swap
  WittInput bad_phi{v, v, swap, swap, w, w, Matrix{{1, 0}, {0, -1}}, w};
  CHECK_THROWS_AS(equivariant_witt(bad_phi), Error);
  Matrix e1{{1}, {0}};
  WittInput not_fixed{v, v, swap, swap, e1, e1, Matrix::identity(2), e1};
  CHECK_THROWS_AS(equivariant_witt(not_fixed), Error);
  QuadSpace h(Matrix{{0, 1}, {1, 0}});
  WittInput degenerate{h, h, GroupAction::trivial(2), GroupAction::trivial(2), e1, e1, Matrix::identity(2), e1};
  try {
    equivariant_witt(degenerate);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
    CHECK(std::string(e.what()).find("degenerate") != std::string::npos);
  }
}

TEST_CASE("Witt: randomized instances give equivariant isometries") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    WittInstance inst = random_witt_instance(rng);
    CAPTURE(inst.description);
    WittResult r = equivariant_witt(inst.input);
    CHECK(is_isometry(r.extension, inst.input.v1.gram(), inst.input.v2.gram()));
    CHECK(commutes_with(r.extension, inst.input.g1, inst.input.g2));
    CHECK(r.extension * inst.input.w1 == inst.input.psi_w);
    CHECK(r.u1.cols() == r.u2.cols());
    if (r.u1.cols() > 0) CHECK(r.map.determinant() != 0);
  }
}

TEST_CASE("Witt: a permuted W basis still yields a valid certificate") {
  Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    WittInstance inst = random_witt_instance(rng);
    if (inst.input.w1.cols() < 2) continue;
    WittInput swapped = inst.input;
    std::vector<Vector> c1 = inst.input.w1.columns(), c2 = inst.input.psi_w.columns();
    std::swap(c1[0], c1[1]);
    std::swap(c2[0], c2[1]);
    swapped.w1 = Matrix::from_columns(c1, inst.input.w1.rows());
    swapped.psi_w = Matrix::from_columns(c2, inst.input.psi_w.rows());
    WittResult r = equivariant_witt(swapped);
    CHECK(is_isometry(r.extension, swapped.v1.gram(), swapped.v2.gram()));
    CHECK(commutes_with(r.extension, swapped.g1, swapped.g2));
  }
}

TEST_CASE("fixed spaces of random invariant forms are non-degenerate") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    WittInstance inst = random_witt_instance(rng);
    FixedSpace f = fixed_space_form(inst.input.v1, inst.input.g1);
    CHECK(f.form.is_nondegenerate());
  }
}

TEST_CASE("degenerate W is rejected") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    WittInstance inst = random_degenerate_witt_instance(rng);
    try {
      equivariant_witt(inst.input);
      FAIL("accepted " << inst.description);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unsupported);
    }
  }
}
