#include "cubmot/rational.hpp"

#include <cctype>

#include "cubmot/error.hpp"

namespace cubmot {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::domain: return "domain";
    case ErrorKind::internal: return "internal";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  require(valid_int(num) && valid_int(den) && den[0] != '-' && den[0] != '+',
          ErrorKind::config, "malformed rational: \"" + s + "\"");
  mpz_class n(num, 10), d(den, 10);
  require(d != 0, ErrorKind::config, "zero denominator in \"" + s + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  // Generalised to negative n so Hilbert polynomials can be evaluated anywhere.
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::structural, "vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::structural, "vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::structural, "vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cubmot
