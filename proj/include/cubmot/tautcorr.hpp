#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubmot/graded_ring.hpp"

namespace cubmot {

/// Basis monomial of the free tautological ring on X^n (n <= 3).
///   plain:    h_1^a h_2^b h_3^c
///   diagonal: Delta_{ij} h_k^c   (slots i < j; for n = 2 the bare Delta)
///   small:    delta               (n = 3 only, bare)
struct BasisMonomial {
  enum class Kind : std::uint8_t { plain = 0, diagonal = 1, small = 2 };
  Kind kind = Kind::plain;
  std::array<std::uint8_t, 3> exps{0, 0, 0};  // unused slots stay 0
  std::uint8_t i = 0, j = 0;                   // diagonal slots (0-based)

  static BasisMonomial plain_h(std::array<int, 3> e);
  static BasisMonomial diagonal_h(int i, int j, int complement_exp = 0);
  static BasisMonomial small_diagonal();

  /// Normal-form order: monomials (lexicographic), then diagonals, then delta.
  auto operator<=>(const BasisMonomial&) const = default;

  /// "h1^2 h2^4", "D12 h3^3", "D12", "delta", "1".
  std::string code(int n) const;
};

BasisMonomial parse_monomial(const std::string& code, int n);

/// Formal Q-linear combination of normal-form basis monomials on X^n.
class CorrClass {
 public:
  CorrClass(VarietyData vd, int n);

  static CorrClass zero(VarietyData vd, int n) { return CorrClass(vd, n); }
  static CorrClass unit(VarietyData vd, int n);
  static CorrClass basis(VarietyData vd, int n, const BasisMonomial& m, const Rational& c = 1);
  /// h_slot^power (slot 1-based), zero when power > d.
  static CorrClass h(VarietyData vd, int n, int slot, int power = 1);
  /// h_1^a h_2^b (h_3^c), zero when an exponent exceeds d.
  static CorrClass mono(VarietyData vd, std::array<int, 3> e, int n);
  /// Delta_{ij} (1-based slots); for n = 2 only (1,2).
  static CorrClass diag(VarietyData vd, int n, int i, int j);
  static CorrClass small_diag(VarietyData vd);

  const VarietyData& variety() const noexcept { return vd_; }
  int n() const noexcept { return n_; }
  const std::map<BasisMonomial, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(const BasisMonomial& m) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const BasisMonomial& m, const Rational& c);

  CorrClass& operator+=(const CorrClass& rhs);
  CorrClass& operator-=(const CorrClass& rhs);
  CorrClass& operator*=(const Rational& s);
  bool operator==(const CorrClass& rhs) const;

  std::string to_string() const;

 private:
  VarietyData vd_;
  int n_;
  std::map<BasisMonomial, Rational> terms_;  // nonzero coefficients only
};

CorrClass operator+(CorrClass a, const CorrClass& b);
CorrClass operator-(CorrClass a, const CorrClass& b);
CorrClass operator*(const Rational& s, CorrClass a);

/// Unreduced product of factors on X^n.
struct RawFactor {
  enum class Kind { h, diagonal, small } kind = Kind::h;
  int slot = 1, power = 1;  // for h (1-based slot)
  int i = 1, j = 2;         // for diagonal (1-based)
};

struct RawTerm {
  Rational coeff = 1;
  std::vector<RawFactor> factors;
};

struct RawExpr {
  int n = 2;
  std::vector<RawTerm> terms;
};

/// Normal form of a raw expression, using the excess-intersection and
/// self-intersection rules.
CorrClass reduce(const VarietyData& vd, const RawExpr& x);

/// Product of two basis monomials in normal form.
CorrClass multiply_basis(const VarietyData& vd, int n, const BasisMonomial& a,
                         const BasisMonomial& b);

/// Intersection product; throws Error{structural} when n differs.
CorrClass intersect(const CorrClass& a, const CorrClass& b);

/// Delta_*(h^k) on X x X placed on slots (i, j) of X^n (0-based), k >= 0.
CorrClass diagonal_pushforward(const VarietyData& vd, int n, int i, int j, int k);

struct Projection {
  enum class Dir { pull, push } dir = Dir::pull;
  int from_n = 2, to_n = 3;
  /// 1-based slots of the smaller product inside the larger one, in order.
  std::vector<int> slots;
};

CorrClass push_pull(const CorrClass& f, const Projection& p);
CorrClass pull(const CorrClass& f, int to_n, std::vector<int> slots);
CorrClass push(const CorrClass& f, std::vector<int> keep);

/// \int over X^n of the class (n = 1..3).
Rational degree(const CorrClass& x);

/// outer o inner, both on X x X, by the closed composition rules.
CorrClass compose(const CorrClass& outer, const CorrClass& inner);
/// outer o inner = p13_*(p12^* inner . p23^* outer) through X^3.
CorrClass compose_via_pullpush(const CorrClass& outer, const CorrClass& inner);

CorrClass transpose(const CorrClass& f);

struct CKProjectors {
  CorrClass pi0, pi2, pi4, pi6, pi8, pi4_prim;
};

CKProjectors ck_projectors(const VarietyData& vd);

/// All normal-form basis monomials on X^n.
std::vector<BasisMonomial> basis_monomials(int n, int d = 4);

}  // namespace cubmot
