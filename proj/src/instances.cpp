#include "cubmot/instances.hpp"

#include <algorithm>
#include <numeric>

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

Vector random_vector(Rng& rng, std::size_t n, int range) {
  Vector v(n);
  for (auto& x : v) x = uniform_int(rng, -range, range);
  return v;
}

Vector random_anisotropic(Rng& rng, const QuadSpace& v) {
  for (;;) {
    Vector x = random_vector(rng, v.dim(), 2);
    if (v.q(x) != 0) return x;
  }
}

Matrix permutation_matrix(const std::vector<int>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
  return m;
}

// A random permutation group of order <= 8 on n points, given by generators.
std::vector<Matrix> random_permutation_generators(Rng& rng, int n) {
  for (;;) {
    int ngens = uniform_int(rng, 0, 2);
    std::vector<std::vector<int>> gens;
    for (int g = 0; g < ngens; ++g) {
      std::vector<int> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    std::vector<Matrix> mats;
    for (const auto& p : gens) mats.push_back(permutation_matrix(p));
    if (mats.empty()) return mats;
    try {
      group_closure(mats, Matrix::identity(static_cast<std::size_t>(n)), 8);
      return mats;
    } catch (const Error&) {
      // more than 8 elements: draw again
    }
  }
}

Matrix average_over(const std::vector<Matrix>& elements, const Matrix& m, bool congruence) {
  Matrix acc(m.rows(), m.cols());
  for (const auto& g : elements) acc += congruence ? g.transpose() * m * g : g.inverse() * m * g;
  return acc;
}

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix random_nondegenerate_gram(Rng& rng, int rank) {
  const std::size_t n = static_cast<std::size_t>(rank);
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      int d = 0;
      while (d == 0) d = uniform_int(rng, -3, 3);
      g(i, i) = d;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, rank - 1));
      std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, rank - 1));
      if (i == j) continue;
      Rational c = uniform_int(rng, -1, 1);
      g(i, j) = c;
      g(j, i) = c;
    }
    if (g.determinant() != 0) return g;
  }
}

Matrix random_unimodular(Rng& rng, int n, int steps) {
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
    if (i == j) continue;
    Rational c = uniform_int(rng, -1, 1);
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) += c * m(r, j);
  }
  return m;
}

Matrix random_isometry(Rng& rng, const QuadSpace& v) {
  Matrix m = reflection(v, random_anisotropic(rng, v));
  if (uniform_int(rng, 0, 1)) m = reflection(v, random_anisotropic(rng, v)) * m;
  return m;
}

WittInstance random_witt_instance(Rng& rng) {
  for (;;) {
    const int n = uniform_int(rng, 2, 6);
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<Matrix> gens = random_permutation_generators(rng, n);
    GroupAction perm = group_closure(gens, Matrix::identity(un));
    Matrix s(un, un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = i; j < un; ++j) {
        s(i, j) = uniform_int(rng, -2, 2);
        s(j, i) = s(i, j);
      }
    Matrix g1 = average_over(perm.elements, s, true);
    if (g1.determinant() == 0) continue;
    Matrix r(un, un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) r(i, j) = uniform_int(rng, -2, 2);
    Matrix p = average_over(perm.elements, r, false);
    if (p.determinant() == 0) continue;
    Matrix pinv = p.inverse();
    Matrix g2 = pinv.transpose() * g1 * pinv;

    QuadSpace v1(g1), v2(g2);
    GroupAction a1 = group_closure(gens, g1), a2 = group_closure(gens, g2);
    if (gens.empty()) a1 = a2 = GroupAction::trivial(un);
    FixedSpace f1 = fixed_space_form(v1, a1);
    const int maxw = std::min<int>(2, static_cast<int>(f1.basis.cols()));
    const int k = uniform_int(rng, 0, maxw);
    std::vector<Vector> ws;
    for (int i = 0; i < k; ++i) ws.push_back(f1.basis * random_vector(rng, f1.basis.cols(), 2));
    Matrix w1 = Matrix::from_columns(ws, un);
    if (w1.rank() != static_cast<std::size_t>(k)) continue;
    if (k > 0 && v1.restricted_gram(w1).determinant() == 0) continue;

    // W2 is the image of W1 under phi_V followed by an equivariant isometry of V2.
    Matrix tau = Matrix::identity(un);
    FixedSpace f2 = fixed_space_form(v2, a2);
    if (f2.basis.cols() > 0 && uniform_int(rng, 0, 3) > 0) {
      Vector axis = f2.basis * random_vector(rng, f2.basis.cols(), 2);
      if (v2.q(axis) != 0) tau = reflection(v2, axis);
    }
    WittInstance inst;
    inst.input = {v1, v2, a1, a2, w1, Matrix(), p, Matrix()};
    inst.input.psi_w = tau * p * w1;
    inst.input.w2 = inst.input.psi_w;
    if (k == 0) inst.input.w2 = inst.input.psi_w = Matrix(un, 0);
    inst.description = "dim V = " + std::to_string(n) + ", |G| = " + std::to_string(a1.order()) +
                       ", dim W = " + std::to_string(k);
    return inst;
  }
}

WittInstance random_degenerate_witt_instance(Rng& rng) {
  // V = H + V', H a hyperbolic plane spanned by isotropic e_0, e_1; G permutes V'.
  for (;;) {
    const int rest = uniform_int(rng, 1, 4);
    const int n = rest + 2;
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<Matrix> sub = random_permutation_generators(rng, rest);
    std::vector<Matrix> gens;
    for (const auto& s : sub) {
      Matrix g = Matrix::identity(un);
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) g(2 + i, 2 + j) = s(i, j);
      gens.push_back(g);
    }
    GroupAction perm = gens.empty() ? GroupAction::trivial(un) : group_closure(gens, Matrix::identity(un));
    Matrix s(un, un);
    for (std::size_t i = 2; i < un; ++i)
      for (std::size_t j = i; j < un; ++j) {
        s(i, j) = uniform_int(rng, -2, 2);
        s(j, i) = s(i, j);
      }
    Matrix g = average_over(perm.elements, s, true);
    g(0, 1) = g(1, 0) = 1;
    if (g.determinant() == 0) continue;
    QuadSpace v(g);
    GroupAction a = gens.empty() ? GroupAction::trivial(un) : group_closure(gens, g);
    std::vector<Vector> ws;
    Vector e0 = zero_vector(un);
    e0[0] = uniform_int(rng, 1, 3);
    ws.push_back(e0);
    if (uniform_int(rng, 0, 1)) {
      FixedSpace f = fixed_space_form(v, a);
      Vector extra = zero_vector(un);
      for (std::size_t c = 0; c < f.basis.cols(); ++c) {
        Vector b = f.basis.column(c);
        b[0] = b[1] = 0;  // stay orthogonal to e_0
        if (!is_zero(b)) {
          extra = b;
          break;
        }
      }
      if (!is_zero(extra) && is_fixed(a, extra)) ws.push_back(extra);
    }
    Matrix w = Matrix::from_columns(ws, un);
    WittInstance inst;
    inst.input = {v, v, a, a, w, w, Matrix::identity(un), w};
    inst.description = "degenerate W, dim V = " + std::to_string(n) + ", dim W = " + std::to_string(ws.size());
    return inst;
  }
}

GammaInstance random_gamma_instance(Rng& rng, const Matrix& gram, int max_alg, bool with_group) {
  QuadSpace v(gram);
  const std::size_t r = gram.rows();
  const int k = uniform_int(rng, 0, max_alg);
  std::vector<Vector> alg;
  for (;;) {
    std::vector<Vector> raw;
    for (int i = 0; i < k; ++i) {
      Vector x = zero_vector(r);
      for (int t = 0; t < 3; ++t) x[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(r) - 1))] = uniform_int(rng, -2, 2);
      raw.push_back(x);
    }
    Matrix m = Matrix::from_columns(raw, r);
    if (k > 0 && (m.rank() != static_cast<std::size_t>(k) || v.restricted_gram(m).determinant() == 0)) continue;
    alg = k > 0 ? orthogonal_basis(v, m) : std::vector<Vector>{};
    break;
  }

  // V' = V in the basis P: x -> P^{-1} x is an isometry V -> V'.
  Matrix p = random_unimodular(rng, static_cast<int>(r), static_cast<int>(r));
  Matrix gram2 = p.transpose() * gram * p;
  Matrix pinv = p.inverse();
  Matrix psi = random_isometry(rng, v);
  Matrix iso = pinv * psi;

  GammaInstance inst{FourfoldData{RealizationConfig(v), alg, std::nullopt},
                     FourfoldData{RealizationConfig(QuadSpace(gram2)), {}, std::nullopt}, iso, pinv};
  if (k > 0) {
    // A different orthogonal basis of the image of the algebraic span.
    Matrix img = iso * Matrix::from_columns(alg, r);
    Matrix mix = random_unimodular(rng, k, 2 * k);
    inst.x2.alg_basis = orthogonal_basis(inst.x2.cfg.prim, img * mix);
  }
  if (with_group) {
    Matrix t = inst.x.transcendental_basis();
    Vector u;
    do u = t * random_vector(rng, t.cols(), 1);
    while (v.q(u) == 0);
    Matrix g = reflection(v, u);
    Matrix g2 = iso * g * iso.inverse();
    inst.x.group = group_closure({g}, gram);
    inst.x2.group = group_closure({g2}, gram2);
  }
  return inst;
}

}  // namespace cubmot
