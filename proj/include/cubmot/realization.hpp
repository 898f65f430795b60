#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cubmot/mukai.hpp"
#include "cubmot/quadform.hpp"
#include "cubmot/tautcorr.hpp"

namespace cubmot {

/// Cohomology ring of a single factor with an explicit basis b_0 = 1, ...
/// Products and integrals are tabulated; the pairing M(i,j) = \int b_i b_j.
class CohomologyModel {
 public:
  /// H = Q[h]/(h^5) + V for a cubic fourfold; basis h^0..h^4 then e_1..e_r.
  static std::shared_ptr<const CohomologyModel> cubic(const QuadSpace& prim);
  /// H = Q.1 + Q.h + P + Q.pt for a K3 with \int h^2 = deg; basis 1, h, p_1..p_s, pt.
  static std::shared_ptr<const CohomologyModel> k3(const QuadSpace& prim, int deg = 2);

  int size() const noexcept { return static_cast<int>(codim_.size()); }
  int dim() const noexcept { return dim_; }
  int codim(int i) const { return codim_.at(static_cast<std::size_t>(i)); }
  const Rational& integral(int i) const { return integral_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::pair<int, Rational>>& product(int i, int j) const {
    return product_[static_cast<std::size_t>(i * size() + j)];
  }
  const Matrix& pairing() const noexcept { return pairing_; }
  const Matrix& pairing_inverse() const noexcept { return pairing_inv_; }

  /// Index of h^k (cubic: k <= 4; K3: k <= 1, with h^2 = deg pt).
  int h_index(int k) const;
  /// Index of the first primitive basis vector and the primitive rank.
  int prim_offset() const noexcept { return prim_offset_; }
  int prim_rank() const noexcept { return prim_rank_; }
  const QuadSpace& prim() const noexcept { return prim_; }
  bool is_k3() const noexcept { return k3_; }

  /// Coordinates of h^k in this basis (zero when h^k vanishes).
  Vector h_power(int k) const;
  std::string label(int i) const;
  /// Same basis, products and integrals.
  bool same_as(const CohomologyModel& other) const;

 private:
  CohomologyModel() = default;
  void finish();

  int dim_ = 0;
  bool k3_ = false;
  int deg_ = 0;
  int prim_offset_ = 0, prim_rank_ = 0;
  QuadSpace prim_;
  std::vector<int> codim_;
  std::vector<Rational> integral_;
  std::vector<std::vector<std::pair<int, Rational>>> product_;
  Matrix pairing_, pairing_inv_;
};

using ModelPtr = std::shared_ptr<const CohomologyModel>;

/// Sparse tensor in H_1 (x) ... (x) H_n, n <= 3.
class RealizedClass {
 public:
  using Key = std::array<int, 3>;

  RealizedClass() = default;  // empty placeholder with no factors
  explicit RealizedClass(std::vector<ModelPtr> slots);

  static RealizedClass from_matrix(ModelPtr a, ModelPtr b, const Matrix& m);
  /// Pulls back a class along the projection onto `slots` (1-based) of the new product.
  RealizedClass pull(std::vector<ModelPtr> new_slots, const std::vector<int>& slots) const;

  int n() const noexcept { return static_cast<int>(slots_.size()); }
  const std::vector<ModelPtr>& slots() const noexcept { return slots_; }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(const Key& k) const;
  void add_term(const Key& k, const Rational& c);
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Only meaningful for n = 2: rows index slot 1, columns slot 2.
  Matrix to_matrix() const;

  RealizedClass& operator+=(const RealizedClass& rhs);
  RealizedClass& operator-=(const RealizedClass& rhs);
  RealizedClass& operator*=(const Rational& s);
  /// Equal models slot by slot and equal coefficients.
  bool operator==(const RealizedClass& rhs) const;

  /// Part of total codimension c.
  RealizedClass codim_part(int c) const;
  /// Basis-label listing, largest first, for diagnostics.
  std::string describe(std::size_t max_terms = 8) const;

 private:
  std::vector<ModelPtr> slots_;
  std::map<Key, Rational> terms_;
};

RealizedClass operator+(RealizedClass a, const RealizedClass& b);
RealizedClass operator-(RealizedClass a, const RealizedClass& b);
RealizedClass operator*(const Rational& s, RealizedClass a);

/// Slotwise cup product on the same product of factors.
RealizedClass multiply(const RealizedClass& a, const RealizedClass& b);
/// \int over the product of factors.
Rational degree(const RealizedClass& x);

/// outer o inner for correspondences inner: A -> B, outer: B -> C.
RealizedClass compose(const RealizedClass& outer, const RealizedClass& inner);
RealizedClass transpose(const RealizedClass& f);
/// Integrates out the slots not listed in `keep` (1-based, kept in order).
RealizedClass push(const RealizedClass& x, const std::vector<int>& keep);
/// Matrix of f_* : H_A -> H_B, columns = images of basis vectors.
Matrix action_matrix(const RealizedClass& f);
/// (f x ... x f)_* x for a correspondence f: A -> B and x on A^n.
RealizedClass transport(const RealizedClass& f, const RealizedClass& x);

/// The diagonal class M^{-1} on H x H.
RealizedClass realized_diagonal(const ModelPtr& model);

struct RealizationConfig {
  QuadSpace prim;
  ModelPtr model;

  explicit RealizationConfig(QuadSpace p);
  /// diag(+1 x 20, -1 x 2)
  static RealizationConfig default_config();
  int rank() const { return static_cast<int>(prim.dim()); }
};

Matrix default_prim_gram(int rank = 22);

RealizedClass realize(const CorrClass& x, const RealizationConfig& cfg);

struct NamedCheck {
  std::string id;
  bool passed = false;
  std::string detail;
};

/// Ordered configuration checks: symmetric, non-degenerate, Euler consistency.
/// Stops at the first failure.
std::vector<NamedCheck> validate_config(const Matrix& gram);

/// Result of matching realize(delta) against the diagonal terms.
struct PolynomialP {
  std::map<std::array<int, 3>, Rational> coeffs;  // exponent triple -> coefficient

  bool is_symmetric() const;
  std::string to_string() const;
  bool operator==(const PolynomialP& rhs) const { return coeffs == rhs.coeffs; }
};

/// Remainder realize(delta) - (1/3)[Delta_12 h_3^4 + Delta_13 h_2^4 + Delta_23 h_1^4].
RealizedClass small_diagonal_remainder(const RealizationConfig& cfg);
/// Throws Error{internal} ("MCK shadow violated") if the remainder has a V-component.
PolynomialP derive_P(const RealizationConfig& cfg);
/// Closed form \int R h_1^a h_2^b h_3^c, computed without any tensor.
Rational remainder_degree_closed_form(int a, int b, int c);

/// Kernel identities for the mutation projectors at the realization level.
std::vector<NamedCheck> verify_kernel_identities(const RealizationConfig& cfg);

}  // namespace cubmot
