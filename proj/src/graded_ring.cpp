#include "cubmot/graded_ring.hpp"

#include <sstream>

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

void check_same(const TruncPoly& a, const TruncPoly& b) {
  require(a.variety() == b.variety(), ErrorKind::structural,
          "truncated polynomials over different variety data");
}

// Power series in one variable truncated after degree n.
using Series = Vector;

Series series_mul(const Series& a, const Series& b) {
  Series r = zero_vector(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a) {
  require(a[0] != 0, ErrorKind::domain, "series with zero constant term is not invertible");
  Series r = zero_vector(a.size());
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// log(1 + u) with u = a - 1.
Series series_log(const Series& a) {
  require(a[0] == 1, ErrorKind::domain, "log needs constant term 1");
  Series u = a;
  u[0] = 0;
  Series r = zero_vector(a.size()), term = u;
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational c = Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    r = r + c * term;
    term = series_mul(term, u);
  }
  return r;
}

Series series_exp(const Series& a) {
  require(a[0] == 0, ErrorKind::domain, "exp needs zero constant term");
  Series r = zero_vector(a.size()), term = zero_vector(a.size());
  term[0] = 1;
  Rational fact = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    r = r + (1 / fact) * term;
    term = series_mul(term, a);
    fact *= static_cast<long>(k + 1);
  }
  return r;
}

// Coefficients a_k of log(x / (1 - e^{-x})) up to x^n.
Series todd_log_coefficients(std::size_t n) {
  Series denom = zero_vector(n + 1);  // (1 - e^{-x}) / x
  Rational fact = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    fact *= static_cast<long>(j + 1);
    denom[j] = Rational(j % 2 ? -1 : 1) / fact;
  }
  return series_log(series_inverse(denom));
}

}  // namespace

TruncPoly::TruncPoly(VarietyData vd) : vd_(vd), coeffs_(zero_vector(vd.dim + 1)) {}

TruncPoly::TruncPoly(VarietyData vd, Vector coeffs) : vd_(vd), coeffs_(std::move(coeffs)) {
  require(coeffs_.size() <= static_cast<std::size_t>(vd_.dim + 1), ErrorKind::structural,
          "too many coefficients for the truncation degree");
  coeffs_.resize(vd_.dim + 1, Rational(0));
}

TruncPoly TruncPoly::constant(VarietyData vd, const Rational& c) { return monomial(vd, 0, c); }

TruncPoly TruncPoly::monomial(VarietyData vd, int k, const Rational& c) {
  TruncPoly p(vd);
  if (k >= 0 && k <= vd.dim) p.coeffs_[k] = c;
  return p;
}

bool TruncPoly::is_zero() const { return cubmot::is_zero(coeffs_); }

bool TruncPoly::operator==(const TruncPoly& rhs) const {
  return vd_ == rhs.vd_ && coeffs_ == rhs.coeffs_;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& rhs) {
  check_same(*this, rhs);
  coeffs_ = coeffs_ + rhs.coeffs_;
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& rhs) {
  check_same(*this, rhs);
  coeffs_ = coeffs_ - rhs.coeffs_;
  return *this;
}

TruncPoly& TruncPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string TruncPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= vd_.dim; ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "h";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
TruncPoly operator-(TruncPoly a) { return a *= Rational(-1); }
TruncPoly operator*(const Rational& s, TruncPoly a) { return a *= s; }

TruncPoly mul(const TruncPoly& a, const TruncPoly& b) {
  check_same(a, b);
  return TruncPoly(a.variety(), series_mul(a.coeffs(), b.coeffs()));
}

TruncPoly pow(const TruncPoly& a, int n) {
  require(n >= 0, ErrorKind::domain, "negative power; use inverse()");
  TruncPoly r = TruncPoly::constant(a.variety(), 1);
  for (int i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

TruncPoly inverse(const TruncPoly& a) {
  return TruncPoly(a.variety(), series_inverse(a.coeffs()));
}

TruncPoly exp_nilpotent(const TruncPoly& a) {
  return TruncPoly(a.variety(), series_exp(a.coeffs()));
}

TruncPoly log_unipotent(const TruncPoly& a) {
  return TruncPoly(a.variety(), series_log(a.coeffs()));
}

Rational integrate(const TruncPoly& a) { return Rational(a.variety().degree) * a[a.dim()]; }

TruncPoly dual(const TruncPoly& v) {
  TruncPoly r = v;
  for (int i = 1; i <= v.dim(); i += 2) r[i] = -r[i];
  return r;
}

TruncPoly tangent_chern(const VarietyData& vd) {
  if (vd.kind == VarietyKind::k3) {
    // 1 + 24 pt, pt = h^2 / (h^2 degree); no adjunction formula applies.
    TruncPoly c = TruncPoly::constant(vd, 1);
    c[2] = rat(24, vd.degree);
    return c;
  }
  require(vd.dim == vd.ambient_dim - 1, ErrorKind::structural,
          "hypersurface data must satisfy dim = ambient_dim - 1");
  TruncPoly one_plus_h(vd, {1, 1});
  TruncPoly one_plus_eh(vd, {1, vd.degree});
  return mul(pow(one_plus_h, vd.ambient_dim + 1), inverse(one_plus_eh));
}

TruncPoly first_chern(const VarietyData& vd) {
  return TruncPoly::monomial(vd, 1, tangent_chern(vd)[1]);
}

ToddPair todd_and_sqrt(const TruncPoly& c) {
  require(c[0] == 1, ErrorKind::domain, "total Chern class must have constant term 1");
  const VarietyData& vd = c.variety();
  const int d = vd.dim;
  // Newton's identities: power sums of the Chern roots from elementary symmetric c_i.
  std::vector<Rational> p(d + 1, Rational(0));
  for (int k = 1; k <= d; ++k) {
    Rational s = Rational((k % 2 ? 1 : -1) * k) * c[k];
    for (int i = 1; i < k; ++i) s += Rational(i % 2 ? 1 : -1) * c[i] * p[k - i];
    p[k] = s;
  }
  Series a = todd_log_coefficients(d);
  TruncPoly log_td(vd);
  for (int k = 1; k <= d; ++k) log_td[k] = a[k] * p[k];
  TruncPoly td = exp_nilpotent(log_td);
  TruncPoly sqrt_td = exp_nilpotent(Rational(1, 2) * log_td);
  return {td, sqrt_td};
}

TruncPoly mukai_vector_line(const VarietyData& vd, int i) {
  TruncPoly ch = exp_nilpotent(TruncPoly::monomial(vd, 1, i));
  return mul(ch, todd_and_sqrt(tangent_chern(vd)).sqrt_td);
}

}  // namespace cubmot
