#include "cubmot/quadform.hpp"

#include <algorithm>
#include <map>

#include "cubmot/error.hpp"

namespace cubmot {

QuadSpace::QuadSpace(Matrix gram) : gram_(std::move(gram)) {
  require(gram_.is_symmetric(), ErrorKind::domain, "Gram matrix must be symmetric");
}

Matrix QuadSpace::restricted_gram(const Matrix& basis) const {
  return basis.transpose() * gram_ * basis;
}

Matrix QuadSpace::orthogonal_complement(const Matrix& basis) const {
  if (basis.cols() == 0) return Matrix::identity(dim());
  return (basis.transpose() * gram_).nullspace();
}

GroupAction GroupAction::trivial(std::size_t dim) {
  return {{}, {Matrix::identity(dim)}};
}

bool is_isometry(const Matrix& m, const Matrix& gram1, const Matrix& gram2) {
  if (m.rows() != gram2.rows() || m.cols() != gram1.rows()) return false;
  return m.transpose() * gram2 * m == gram1;
}

namespace {

struct MatrixLess {
  bool operator()(const Matrix& a, const Matrix& b) const {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        int s = cmp(a(r, c), b(r, c));
        if (s != 0) return s < 0;
      }
    return false;
  }
};

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

}  // namespace

GroupAction group_closure(const std::vector<Matrix>& gens, const Matrix& gram, std::size_t cap) {
  const std::size_t n = gram.rows();
  for (const auto& g : gens) {
    require(g.rows() == n && g.cols() == n, ErrorKind::structural, "generator has wrong size");
    require(is_isometry(g, gram, gram), ErrorKind::domain, "generator is not an isometry");
  }
  GroupAction out;
  out.generators = gens;
  std::map<Matrix, bool, MatrixLess> seen;
  out.elements.push_back(Matrix::identity(n));
  seen.emplace(out.elements.front(), true);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (const auto& g : gens) {
      Matrix next = g * out.elements[i];
      if (seen.count(next)) continue;
      require(out.elements.size() < cap, ErrorKind::unsupported,
              "group not verifiably finite (closure exceeded cap)");
      seen.emplace(next, true);
      out.elements.push_back(std::move(next));
    }
  }
  return out;
}

std::pair<GroupAction, GroupAction> paired_closure(const std::vector<Matrix>& gens1,
                                                   const Matrix& gram1,
                                                   const std::vector<Matrix>& gens2,
                                                   const Matrix& gram2, std::size_t cap) {
  require(gens1.size() == gens2.size(), ErrorKind::structural,
          "paired actions need matching generator lists");
  std::vector<Matrix> joint;
  for (std::size_t i = 0; i < gens1.size(); ++i) joint.push_back(block_diag(gens1[i], gens2[i]));
  GroupAction both = group_closure(joint, block_diag(gram1, gram2), cap);
  GroupAction a{gens1, {}}, b{gens2, {}};
  const std::size_t n1 = gram1.rows(), n2 = gram2.rows();
  std::map<Matrix, bool, MatrixLess> seen1, seen2;
  for (const auto& e : both.elements) {
    a.elements.push_back(e.block(0, 0, n1, n1));
    b.elements.push_back(e.block(n1, n1, n2, n2));
    seen1.emplace(a.elements.back(), true);
    seen2.emplace(b.elements.back(), true);
  }
  // Each side must be a faithful copy of the abstract group for elementwise
  // equivariance checks to mean anything.
  require(seen1.size() == both.order() && seen2.size() == both.order(), ErrorKind::domain,
          "paired generators do not define isomorphic actions");
  return {a, b};
}

bool is_fixed(const GroupAction& g, const Vector& v) {
  for (const auto& e : g.elements)
    if (e * v != v) return false;
  return true;
}

bool commutes_with(const Matrix& m, const GroupAction& g1, const GroupAction& g2) {
  if (g1.order() != g2.order()) return false;
  for (std::size_t i = 0; i < g1.order(); ++i)
    if (m * g1.elements[i] != g2.elements[i] * m) return false;
  return true;
}

Matrix radical(const QuadSpace& v) { return v.gram().nullspace(); }

FixedSpace fixed_space_form(const QuadSpace& v, const GroupAction& g) {
  require(g.dim() == v.dim(), ErrorKind::structural, "group acts on a different dimension");
  Matrix avg(v.dim(), v.dim());
  for (const auto& e : g.elements) avg += e;
  avg *= Rational(1) / Rational(static_cast<long>(g.order()));
  Matrix basis = avg.column_space();
  QuadSpace form(v.restricted_gram(basis));
  if (v.is_nondegenerate())
    require(basis.cols() == 0 || form.is_nondegenerate(), ErrorKind::internal,
            "restriction to the fixed space is degenerate although V is not");
  return {basis, form, avg};
}

Matrix reflection(const QuadSpace& v, const Vector& axis) {
  Rational qv = v.q(axis);
  require(qv != 0, ErrorKind::domain, "cannot reflect in an isotropic vector");
  Matrix m = Matrix::identity(v.dim());
  Vector gv = v.gram() * axis;  // z -> <axis, z> = gv . z
  Rational f = Rational(2) / qv;
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) -= f * axis[r] * gv[c];
  return m;
}

Isometry reflect_to(const Vector& x, const Vector& y, const QuadSpace& v) {
  require(x.size() == v.dim() && y.size() == v.dim(), ErrorKind::structural,
          "vectors do not live in V");
  Rational qx = v.q(x);
  require(qx == v.q(y), ErrorKind::domain, "q(x) != q(y)");
  require(qx != 0, ErrorKind::domain, "q(x) = 0: isotropic vectors are not transported");
  if (x == y) return {Matrix::identity(v.dim()), 0};
  Vector diff = x - y;
  if (v.q(diff) != 0) return {reflection(v, diff), 1};
  // q(x-y) + q(x+y) = 4 q(x) != 0
  Vector sum = x + y;
  return {reflection(v, y) * reflection(v, sum), 2};
}

Isometry equivariant_transport(const Vector& x, const Vector& y, const QuadSpace& v,
                               const GroupAction& g) {
  require(is_fixed(g, x) && is_fixed(g, y), ErrorKind::domain, "x and y must be G-fixed");
  require(v.q(x) == v.q(y), ErrorKind::domain, "q(x) != q(y)");
  require(v.q(x) != 0, ErrorKind::domain, "q(x) = 0: isotropic vectors are not transported");
  FixedSpace fs = fixed_space_form(v, g);
  const std::size_t k = fs.basis.cols();
  // V = V^G (+) (V^G)^perp; work in the adapted basis [fixed | complement].
  Matrix comp = v.orthogonal_complement(fs.basis);
  Matrix adapted = fs.basis.hstack(comp);
  Vector xc = fs.basis.solve(Matrix::from_columns({x}, v.dim())).column(0);
  Vector yc = fs.basis.solve(Matrix::from_columns({y}, v.dim())).column(0);
  Isometry inner = reflect_to(xc, yc, fs.form);
  Matrix block = Matrix::identity(v.dim());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) block(r, c) = inner.matrix(r, c);
  return {adapted * block * adapted.inverse(), inner.reflections};
}

std::vector<Vector> orthogonal_basis(const QuadSpace& v, const Matrix& basis) {
  std::vector<Vector> pending = basis.columns();
  std::vector<Vector> out;
  while (!pending.empty()) {
    std::size_t pick = pending.size();
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (v.q(pending[i]) != 0) { pick = i; break; }
    Vector x;
    if (pick < pending.size()) {
      x = pending[pick];
      pending.erase(pending.begin() + static_cast<long>(pick));
    } else {
      std::size_t a = 0, b = 0;
      bool found = false;
      for (std::size_t i = 0; i < pending.size() && !found; ++i)
        for (std::size_t j = i + 1; j < pending.size() && !found; ++j)
          if (v.pair(pending[i], pending[j]) != 0) { a = i; b = j; found = true; }
      require(found, ErrorKind::unsupported, "unsupported: degenerate complement");
      x = pending[a] + pending[b];
      pending.erase(pending.begin() + static_cast<long>(a));
    }
    // Project the rest onto x^perp.
    Rational qx = v.q(x);
    for (auto& p : pending) p = p - (v.pair(x, p) / qx) * x;
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

bool in_span(const Matrix& basis, const Vector& v) {
  if (basis.cols() == 0) return is_zero(v);
  return basis.hstack(Matrix::from_columns({v}, v.size())).rank() == basis.rank();
}

}  // namespace

WittResult equivariant_witt(const WittInput& in) {
  const QuadSpace& v1 = in.v1;
  const QuadSpace& v2 = in.v2;
  require(v1.is_nondegenerate() && v2.is_nondegenerate(), ErrorKind::domain,
          "V1 and V2 must be non-degenerate");
  require(in.g1.order() == in.g2.order() && in.g1.dim() == v1.dim() && in.g2.dim() == v2.dim(),
          ErrorKind::structural, "group actions do not match the spaces");
  require(in.phi_v.rows() == v2.dim() && in.phi_v.cols() == v1.dim(), ErrorKind::structural,
          "phi_V has the wrong shape");
  require(is_isometry(in.phi_v, v1.gram(), v2.gram()), ErrorKind::domain,
          "phi_V is not an isometry");
  require(commutes_with(in.phi_v, in.g1, in.g2), ErrorKind::domain,
          "non-equivariant phi_V");
  require(in.w1.rows() == v1.dim() && in.w2.rows() == v2.dim() &&
              in.psi_w.rows() == v2.dim() && in.psi_w.cols() == in.w1.cols(),
          ErrorKind::structural, "W bases / psi_W have the wrong shape");
  require(in.w1.rank() == in.w1.cols() && in.w2.rank() == in.w2.cols(), ErrorKind::domain,
          "W bases must be linearly independent");
  require(in.w1.cols() == in.w2.cols(), ErrorKind::domain, "dim W1 != dim W2");
  for (const auto& c : in.w1.columns())
    require(is_fixed(in.g1, c), ErrorKind::domain, "W1 is not contained in V1^G");
  for (const auto& c : in.w2.columns())
    require(is_fixed(in.g2, c), ErrorKind::domain, "W2 is not contained in V2^G");
  for (const auto& c : in.psi_w.columns())
    require(in_span(in.w2, c), ErrorKind::domain, "psi_W does not land in W2");
  require(in.psi_w.rank() == in.w1.cols(), ErrorKind::domain, "psi_W is not injective");
  require(v2.restricted_gram(in.psi_w) == v1.restricted_gram(in.w1), ErrorKind::domain,
          "psi_W is not an isometry W1 -> W2");
  require(QuadSpace(v1.restricted_gram(in.w1)).is_nondegenerate(), ErrorKind::unsupported,
          "unsupported: degenerate complement (W is degenerate)");

  // Diagonalise W1; psi carries the orthogonal basis to an orthogonal basis of W2.
  std::vector<Vector> xs = orthogonal_basis(v1, in.w1);
  Matrix coords = in.w1.solve(Matrix::from_columns(xs, v1.dim()));
  Matrix targets = in.psi_w * coords;

  WittResult res;
  Matrix phi = in.phi_v;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Vector y = phi * xs[j];
    Vector target = targets.column(j);
    // Both y and target are G-fixed and orthogonal to the already matched
    // targets, so the transport leaves those untouched.
    Isometry tau = equivariant_transport(y, target, v2, in.g2);
    phi = tau.matrix * phi;
    ++res.transport_steps;
  }
  res.extension = phi;
  res.u1 = v1.orthogonal_complement(in.w1);
  res.u2 = v2.orthogonal_complement(in.w2);
  require(res.u1.cols() == res.u2.cols(), ErrorKind::internal, "dim U1 != dim U2");
  if (res.u1.cols() > 0) res.map = res.u2.solve(phi * res.u1);
  else res.map = Matrix(0, 0);
  require(res.u2 * res.map == phi * res.u1, ErrorKind::internal,
          "extension does not carry U1 into U2");
  return res;
}

}  // namespace cubmot
