#pragma once

#include <string>
#include <utility>

#include "cubmot/rational.hpp"

namespace cubmot {

enum class VarietyKind { hypersurface, k3 };

/// Numerical data of X: dimension d, ambient P^{n+1} and degree e = \int_X h^d.
/// For a K3 surface `degree` stores \int_S h^2.
struct VarietyData {
  int dim = 4;
  int ambient_dim = 5;
  int degree = 3;
  VarietyKind kind = VarietyKind::hypersurface;

  static VarietyData cubic_fourfold() { return {4, 5, 3, VarietyKind::hypersurface}; }
  static VarietyData hypersurface(int ambient_dim, int degree) {
    return {ambient_dim - 1, ambient_dim, degree, VarietyKind::hypersurface};
  }
  static VarietyData k3(int h_squared = 2) { return {2, 3, h_squared, VarietyKind::k3}; }

  bool operator==(const VarietyData&) const = default;
};

/// Element of Q[h]/(h^{d+1}).
class TruncPoly {
 public:
  explicit TruncPoly(VarietyData vd);
  TruncPoly(VarietyData vd, Vector coeffs);

  static TruncPoly constant(VarietyData vd, const Rational& c);
  /// c * h^k (zero when k > d)
  static TruncPoly monomial(VarietyData vd, int k, const Rational& c = 1);

  const VarietyData& variety() const noexcept { return vd_; }
  int dim() const noexcept { return vd_.dim; }
  const Vector& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  bool operator==(const TruncPoly& rhs) const;

  TruncPoly& operator+=(const TruncPoly& rhs);
  TruncPoly& operator-=(const TruncPoly& rhs);
  TruncPoly& operator*=(const Rational& s);

  std::string to_string() const;

 private:
  VarietyData vd_;
  Vector coeffs_;
};

TruncPoly operator+(TruncPoly a, const TruncPoly& b);
TruncPoly operator-(TruncPoly a, const TruncPoly& b);
TruncPoly operator-(TruncPoly a);
TruncPoly operator*(const Rational& s, TruncPoly a);
/// Truncated product; throws Error{structural} on mismatched variety data.
TruncPoly mul(const TruncPoly& a, const TruncPoly& b);
inline TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) { return mul(a, b); }

TruncPoly pow(const TruncPoly& a, int n);
/// Multiplicative inverse; requires a nonzero constant term.
TruncPoly inverse(const TruncPoly& a);
/// exp(a) for a with zero constant term.
TruncPoly exp_nilpotent(const TruncPoly& a);
/// log(a) for a with constant term 1.
TruncPoly log_unipotent(const TruncPoly& a);

/// e * coeffs[d]
Rational integrate(const TruncPoly& a);

/// Sign-alternating involution v^\vee = sum (-1)^i v_i.
TruncPoly dual(const TruncPoly& v);

/// Total Chern class of T_X. Hypersurfaces use adjunction (1+h)^{n+2}/(1+e h);
/// a K3 returns the tabulated 1 + 24 pt with pt = h^2 / degree.
TruncPoly tangent_chern(const VarietyData& vd);

struct ToddPair {
  TruncPoly td;
  TruncPoly sqrt_td;
};

/// Todd class and its square root with constant term 1, from a total Chern class.
ToddPair todd_and_sqrt(const TruncPoly& c);

/// c_1(T_X) as an element of the ring.
TruncPoly first_chern(const VarietyData& vd);

/// v(O_X(i)) = exp(i h) sqrt(td(T_X)).
TruncPoly mukai_vector_line(const VarietyData& vd, int i);

}  // namespace cubmot
