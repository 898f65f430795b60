#pragma once

#include <utility>

#include "cubmot/graded_ring.hpp"
#include "cubmot/quadform.hpp"
#include "cubmot/tautcorr.hpp"

namespace cubmot {

/// <v, w> = \int v^\vee w exp(c_1/2). Not symmetric in general.
Rational mukai_pairing(const TruncPoly& v, const TruncPoly& w);

/// The two classes spanning the polynomial part of the Kuznetsov component,
/// evaluated at T = h.
std::pair<TruncPoly, TruncPoly> lambda_basis(const VarietyData& vd);

/// Element of (polynomials in h) + (primitive part).
struct MukaiVector {
  TruncPoly poly;
  Vector prim;

  bool operator==(const MukaiVector& rhs) const { return poly == rhs.poly && prim == rhs.prim; }
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(const Rational& s, const MukaiVector& a);

class MukaiSpace {
 public:
  MukaiSpace(VarietyData vd, QuadSpace prim);

  const VarietyData& variety() const noexcept { return vd_; }
  const QuadSpace& prim() const noexcept { return prim_; }

  MukaiVector from_poly(const TruncPoly& p) const;
  MukaiVector from_prim(const Vector& v) const;
  MukaiVector line(int i) const { return from_poly(mukai_vector_line(vd_, i)); }

  /// Mukai pairing on the polynomial parts, Gram of the primitive part, zero across.
  Rational pair(const MukaiVector& a, const MukaiVector& b) const;

 private:
  VarietyData vd_;
  QuadSpace prim_;
};

enum class Side { left, right };

/// Left: a - <vE, a> vE.  Right: a - <a, vE> vE.  Requires <vE, vE> = 1.
MukaiVector mutate_project(const MukaiSpace& space, const MukaiVector& vE, const MukaiVector& a,
                           Side side = Side::left);

/// Exceptional objects of the mutation, in the order they are applied.
std::vector<int> mutation_twists(Side side);

/// Projection onto the complement of v(O), v(O(1)), v(O(2)).
MukaiVector kuznetsov_project(const MukaiSpace& space, const MukaiVector& a, Side side = Side::left);

/// Delta - (twisted dual of v(E)) x v(E) as a class on X x X.
CorrClass mutation_kernel(const VarietyData& vd, const TruncPoly& vE, Side side);

/// Composite of the three single-mutation kernels.
CorrClass kernel_class(const VarietyData& vd, Side side);

/// Action f_*(a) = p2_*(f . p1^* a) of a tautological correspondence.
MukaiVector apply_kernel(const MukaiSpace& space, const CorrClass& f, const MukaiVector& a);

}  // namespace cubmot
