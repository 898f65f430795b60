#pragma once

#include <cstddef>
#include <vector>

#include "cubmot/matrix.hpp"

namespace cubmot {

/// Finite-dimensional quadratic space over Q given by its Gram matrix.
class QuadSpace {
 public:
  QuadSpace() = default;
  explicit QuadSpace(Matrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  bool is_nondegenerate() const { return gram_.determinant() != 0; }

  Rational pair(const Vector& u, const Vector& v) const { return bilinear(u, gram_, v); }
  Rational q(const Vector& v) const { return pair(v, v); }

  /// Gram matrix of the columns of `basis`.
  Matrix restricted_gram(const Matrix& basis) const;
  /// Basis (columns) of the orthogonal complement of span(basis).
  Matrix orthogonal_complement(const Matrix& basis) const;

 private:
  Matrix gram_;
};

/// Finite group acting on Q^n by isometries, stored as its full element list.
struct GroupAction {
  std::vector<Matrix> generators;
  std::vector<Matrix> elements;  // elements[0] is the identity

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t dim() const noexcept { return elements.empty() ? 0 : elements.front().rows(); }
  static GroupAction trivial(std::size_t dim);
};

/// Closure of `gens` under multiplication. Throws Error{domain} if a generator is
/// not an isometry of `gram`, Error{unsupported} when more than `cap` elements appear.
GroupAction group_closure(const std::vector<Matrix>& gens, const Matrix& gram, std::size_t cap = 4096);

/// Closes two actions of the same abstract group (generators matched by index),
/// returning element lists aligned index-by-index.
std::pair<GroupAction, GroupAction> paired_closure(const std::vector<Matrix>& gens1,
                                                   const Matrix& gram1,
                                                   const std::vector<Matrix>& gens2,
                                                   const Matrix& gram2,
                                                   std::size_t cap = 4096);

bool is_fixed(const GroupAction& g, const Vector& v);
bool commutes_with(const Matrix& m, const GroupAction& g1, const GroupAction& g2);

/// Kernel of the Gram matrix (columns).
Matrix radical(const QuadSpace& v);

struct FixedSpace {
  Matrix basis;  // columns spanning V^G
  QuadSpace form;
  Matrix averaging;  // (1/|G|) sum g
};

/// V^G with its restricted form. Throws Error{internal} if the restriction is
/// degenerate while V is non-degenerate.
FixedSpace fixed_space_form(const QuadSpace& v, const GroupAction& g);

/// Linear map between quadratic spaces, stored in ambient coordinates.
struct Isometry {
  Matrix matrix;          // target_dim x source_dim
  int reflections = 0;    // number of reflections used, when built from them
};

/// Reflection s_v(z) = z - 2 <v,z>/q(v) v. Requires q(v) != 0.
Matrix reflection(const QuadSpace& v, const Vector& axis);

/// Isometry of V with M x = y, from at most two reflections.
Isometry reflect_to(const Vector& x, const Vector& y, const QuadSpace& v);

/// G-equivariant isometry of V sending x to y (x, y G-fixed), built as a
/// reflection map on V^G extended by the identity on (V^G)^perp.
Isometry equivariant_transport(const Vector& x, const Vector& y, const QuadSpace& v,
                               const GroupAction& g);

/// True iff M^T G2 M = G1.
bool is_isometry(const Matrix& m, const Matrix& gram1, const Matrix& gram2);

/// Orthogonal basis of span(basis) under `gram`, choosing anisotropic vectors
/// first-come; if every remaining vector is isotropic, e_i + e_j with <e_i,e_j> != 0.
/// Throws Error{unsupported} when the span is degenerate.
std::vector<Vector> orthogonal_basis(const QuadSpace& v, const Matrix& basis);

struct WittInput {
  QuadSpace v1, v2;
  GroupAction g1, g2;  // aligned element lists (same abstract group)
  Matrix w1, w2;       // bases (columns) of W_i inside V_i^G
  Matrix phi_v;        // G-equivariant isometry V1 -> V2
  Matrix psi_w;        // columns: images in V2 of the columns of w1, spanning W2
};

struct WittResult {
  Matrix extension;  // G-equivariant isometry V1 -> V2 agreeing with psi on W1
  Matrix u1, u2;     // bases of U_i = W_i^perp
  Matrix map;        // coordinates: extension(u1) = u2 * map
  int transport_steps = 0;
};

/// Equivariant Witt cancellation: a G-equivariant isometry U1 -> U2.
WittResult equivariant_witt(const WittInput& in);

}  // namespace cubmot
