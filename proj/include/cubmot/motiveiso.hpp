#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubmot/quadform.hpp"
#include "cubmot/realization.hpp"

namespace cubmot {

/// Primitive quadratic space of a cubic fourfold with its algebraic classes.
struct FourfoldData {
  RealizationConfig cfg;
  std::vector<Vector> alg_basis;      // pairwise orthogonal, anisotropic
  std::optional<GroupAction> group;   // acts on V, fixes every alg_basis vector

  Matrix alg_matrix() const;
  /// Basis (columns) of the orthogonal complement of the algebraic classes.
  Matrix transcendental_basis() const;
};

/// Throws Error{domain} for isotropic or non-orthogonal algebraic bases or a
/// group that moves an algebraic class.
void validate(const FourfoldData& d);

struct SurfaceData {
  QuadSpace prim2;                  // complement of h in H^2
  std::vector<Vector> ns_basis;     // orthogonal anisotropic algebraic classes in prim2
  int h_squared = 2;
  ModelPtr model;

  SurfaceData(QuadSpace prim, std::vector<Vector> ns, int h2 = 2);
  Matrix transcendental_basis() const;
};

void validate(const SurfaceData& d);

/// Embeds a vector of the primitive part into the model's basis coordinates.
Vector embed_prim(const CohomologyModel& m, const Vector& v);
/// sum_k a_k (x) b_k where b_k = f(dual basis): the class whose action is f on span(a).
RealizedClass transfer_class(const ModelPtr& from, const ModelPtr& to, const Matrix& basis,
                             const QuadSpace& form, const Matrix& f);

struct RefinedProjectors {
  RealizedClass alg;  // (1/3) h^2 x h^2 + sum a x a / q(a)
  RealizedClass tr;   // realize(pi^4) - alg
};

RefinedProjectors build_refined_projectors(const FourfoldData& d);

struct GammaSummand {
  std::string name;
  RealizedClass cls;
};

struct GammaCert {
  std::vector<GammaSummand> summands;
  RealizedClass gamma;
  Matrix v_map;                 // Gamma_* restricted to V, in V coordinates
  int witt_steps = 0;
  std::vector<NamedCheck> checks;

  bool passed() const;
};

/// Builds Gamma from an isometry of transcendental parts. `iso_tr` maps V to V'
/// (only its restriction to the transcendental part is used); `ambient` is an
/// isometry V -> V' fed to the Witt solver (identity when omitted, which needs
/// equal Gram matrices).
GammaCert build_gamma(const FourfoldData& x, const FourfoldData& x2, const Matrix& iso_tr,
                      const std::optional<Matrix>& ambient = std::nullopt);

/// Identity checks on an arbitrary Gamma between the two fourfolds.
std::vector<NamedCheck> check_gamma(const RealizedClass& gamma, const FourfoldData& x,
                                    const FourfoldData& x2);

/// Delta and small-diagonal transport, the latter directly and through P.
std::vector<NamedCheck> verify_frobenius(const GammaCert& cert, const FourfoldData& x,
                                         const FourfoldData& x2);

/// Gamma with summand `index` multiplied by `factor` (0 drops it).
RealizedClass corrupt_gamma(const GammaCert& cert, std::size_t index, const Rational& factor);

struct SurfaceProjectors {
  RealizedClass pi0, pi2_alg, pi2_tr, pi4;
  std::vector<NamedCheck> checks;
};

SurfaceProjectors surface_ck(const SurfaceData& s);

/// Gamma_tr on X x S from an isometry iso: V -> prim2 of the transcendental parts.
GammaCert build_gamma_cubic_k3(const FourfoldData& x, const SurfaceData& s, const Matrix& iso);

}  // namespace cubmot
