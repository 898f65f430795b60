#include "cubmot/mukai.hpp"

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

TruncPoly half_c1_exp(const VarietyData& vd, int sign) {
  TruncPoly c1 = first_chern(vd);
  c1 *= Rational(sign, 2);
  return exp_nilpotent(c1);
}

}  // namespace

Rational mukai_pairing(const TruncPoly& v, const TruncPoly& w) {
  return integrate(dual(v) * w * half_c1_exp(v.variety(), 1));
}

std::pair<TruncPoly, TruncPoly> lambda_basis(const VarietyData& vd) {
  require(vd == VarietyData::cubic_fourfold(), ErrorKind::structural,
          "lambda classes are defined for the cubic fourfold");
  TruncPoly l1(vd, {3, rat(5, 4), rat(-7, 32), rat(-77, 384), rat(41, 2048)});
  TruncPoly l2(vd, {-3, rat(-1, 4), rat(15, 32), rat(1, 384), rat(-153, 2048)});
  return {l1, l2};
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) { return {a.poly + b.poly, a.prim + b.prim}; }
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) { return {a.poly - b.poly, a.prim - b.prim}; }
MukaiVector operator*(const Rational& s, const MukaiVector& a) { return {s * a.poly, s * a.prim}; }

MukaiSpace::MukaiSpace(VarietyData vd, QuadSpace prim) : vd_(vd), prim_(std::move(prim)) {
  require(prim_.gram().is_symmetric(), ErrorKind::config, "primitive Gram must be symmetric");
  require(prim_.is_nondegenerate(), ErrorKind::config, "primitive Gram must be non-degenerate");
}

MukaiVector MukaiSpace::from_poly(const TruncPoly& p) const {
  require(p.variety() == vd_, ErrorKind::structural, "polynomial over different variety data");
  return {p, zero_vector(prim_.dim())};
}

MukaiVector MukaiSpace::from_prim(const Vector& v) const {
  require(v.size() == prim_.dim(), ErrorKind::structural, "primitive vector has the wrong length");
  return {TruncPoly(vd_), v};
}

Rational MukaiSpace::pair(const MukaiVector& a, const MukaiVector& b) const {
  return mukai_pairing(a.poly, b.poly) + prim_.pair(a.prim, b.prim);
}

MukaiVector mutate_project(const MukaiSpace& space, const MukaiVector& vE, const MukaiVector& a,
                           Side side) {
  require(space.pair(vE, vE) == 1, ErrorKind::domain, "mutation needs an exceptional class: <v,v> != 1");
  Rational c = side == Side::left ? space.pair(vE, a) : space.pair(a, vE);
  return a - c * vE;
}

std::vector<int> mutation_twists(Side side) {
  if (side == Side::left) return {2, 1, 0};
  return {-3, -2, -1};
}

MukaiVector kuznetsov_project(const MukaiSpace& space, const MukaiVector& a, Side side) {
  MukaiVector out = a;
  for (int i : mutation_twists(side)) out = mutate_project(space, space.line(i), out, side);
  return out;
}

CorrClass mutation_kernel(const VarietyData& vd, const TruncPoly& vE, Side side) {
  // F_*(a) = a - (\int A a) vE with A the twisted dual of vE.
  TruncPoly a = dual(vE) * half_c1_exp(vd, side == Side::left ? 1 : -1);
  CorrClass k = CorrClass::diag(vd, 2, 1, 2);
  for (int i = 0; i <= vd.dim; ++i)
    for (int j = 0; j <= vd.dim; ++j) {
      Rational c = a[i] * vE[j];
      if (c != 0) k.add_term(BasisMonomial::plain_h({i, j, 0}), -c);
    }
  return k;
}

CorrClass kernel_class(const VarietyData& vd, Side side) {
  CorrClass k = CorrClass::diag(vd, 2, 1, 2);
  for (int i : mutation_twists(side)) k = compose(mutation_kernel(vd, mukai_vector_line(vd, i), side), k);
  return k;
}

MukaiVector apply_kernel(const MukaiSpace& space, const CorrClass& f, const MukaiVector& a) {
  require(f.n() == 2 && f.variety() == space.variety(), ErrorKind::structural,
          "kernel must be a correspondence on X x X");
  const VarietyData& vd = space.variety();
  MukaiVector out{TruncPoly(vd), zero_vector(space.prim().dim())};
  for (const auto& [m, c] : f.terms()) {
    if (m.kind == BasisMonomial::Kind::diagonal) {
      out = out + c * a;
      continue;
    }
    // (h^i x h^j)_* a = (\int h^i a) h^j; the primitive part integrates to zero.
    Rational s = integrate(TruncPoly::monomial(vd, m.exps[0]) * a.poly);
    out.poly += TruncPoly::monomial(vd, m.exps[1], c * s);
  }
  return out;
}

}  // namespace cubmot
