#include "cubmot/tautcorr.hpp"

#include <algorithm>
#include <sstream>

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

using Kind = BasisMonomial::Kind;

int complement_slot(int i, int j) { return 3 - i - j; }

void check_n(int n) {
  require(n >= 1 && n <= 3, ErrorKind::structural, "tautological ring only on X, X^2, X^3");
}

// Multiplies every term by h_slot^power (slot 0-based, unused slot in diagonal
// terms must be the complement). Terms whose exponent exceeds d vanish.
CorrClass times_h(const CorrClass& x, int slot, int power) {
  if (power == 0) return x;
  CorrClass out(x.variety(), x.n());
  const int d = x.variety().dim;
  for (const auto& [m, c] : x.terms()) {
    require(m.kind != Kind::small, ErrorKind::internal, "times_h on delta");
    if (m.kind == Kind::diagonal)
      require(slot == complement_slot(m.i, m.j), ErrorKind::internal,
              "times_h on a diagonal slot");
    BasisMonomial r = m;
    int e = r.exps[slot] + power;
    if (e > d) continue;
    r.exps[slot] = static_cast<std::uint8_t>(e);
    out.add_term(r, c);
  }
  return out;
}

CorrClass mul_by_basis(const CorrClass& x, const BasisMonomial& b) {
  CorrClass out(x.variety(), x.n());
  for (const auto& [m, c] : x.terms()) {
    CorrClass p = multiply_basis(x.variety(), x.n(), m, b);
    p *= c;
    out += p;
  }
  return out;
}

Rational top_chern_coefficient(const VarietyData& vd) { return tangent_chern(vd)[vd.dim]; }

}  // namespace

BasisMonomial BasisMonomial::plain_h(std::array<int, 3> e) {
  BasisMonomial m;
  for (int s = 0; s < 3; ++s) {
    require(e[s] >= 0 && e[s] < 256, ErrorKind::internal, "exponent bookkeeping overflow");
    m.exps[s] = static_cast<std::uint8_t>(e[s]);
  }
  return m;
}

BasisMonomial BasisMonomial::diagonal_h(int i, int j, int complement_exp) {
  require(i != j && i >= 0 && j >= 0 && i < 3 && j < 3, ErrorKind::structural,
          "bad diagonal slots");
  BasisMonomial m;
  m.kind = Kind::diagonal;
  m.i = static_cast<std::uint8_t>(std::min(i, j));
  m.j = static_cast<std::uint8_t>(std::max(i, j));
  if (complement_exp != 0) m.exps[complement_slot(m.i, m.j)] = static_cast<std::uint8_t>(complement_exp);
  return m;
}

BasisMonomial BasisMonomial::small_diagonal() {
  BasisMonomial m;
  m.kind = Kind::small;
  return m;
}

std::string BasisMonomial::code(int n) const {
  std::vector<std::string> parts;
  if (kind == Kind::small) return "delta";
  if (kind == Kind::diagonal)
    parts.push_back("D" + std::to_string(i + 1) + std::to_string(j + 1));
  for (int s = 0; s < n; ++s) {
    if (exps[s] == 0) continue;
    std::string f = "h" + std::to_string(s + 1);
    if (exps[s] > 1) f += "^" + std::to_string(exps[s]);
    parts.push_back(f);
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " " + parts[k];
  return out;
}

BasisMonomial parse_monomial(const std::string& code, int n) {
  check_n(n);
  if (code == "delta") {
    require(n == 3, ErrorKind::config, "delta only lives on X^3");
    return BasisMonomial::small_diagonal();
  }
  std::istringstream is(code);
  std::string tok;
  std::array<int, 3> e{0, 0, 0};
  int di = -1, dj = -1;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() == 3 && tok[0] == 'D') {
      di = tok[1] - '1';
      dj = tok[2] - '1';
      require(di >= 0 && dj > di && dj < n, ErrorKind::config, "bad diagonal token: " + tok);
      continue;
    }
    require(tok.size() >= 2 && tok[0] == 'h', ErrorKind::config, "bad monomial token: " + tok);
    int slot = tok[1] - '1';
    require(slot >= 0 && slot < n, ErrorKind::config, "slot out of range: " + tok);
    int pw = 1;
    if (tok.size() > 2) {
      require(tok[2] == '^' && tok.size() > 3, ErrorKind::config, "bad exponent: " + tok);
      pw = std::stoi(tok.substr(3));
    }
    e[slot] += pw;
  }
  if (di < 0) return BasisMonomial::plain_h(e);
  require(e[di] == 0 && e[dj] == 0, ErrorKind::config,
          "diagonal monomials carry h only on the complementary slot: " + code);
  return BasisMonomial::diagonal_h(di, dj, n == 3 ? e[complement_slot(di, dj)] : 0);
}

CorrClass::CorrClass(VarietyData vd, int n) : vd_(vd), n_(n) { check_n(n); }

CorrClass CorrClass::unit(VarietyData vd, int n) {
  return basis(vd, n, BasisMonomial::plain_h({0, 0, 0}));
}

CorrClass CorrClass::basis(VarietyData vd, int n, const BasisMonomial& m, const Rational& c) {
  CorrClass x(vd, n);
  x.add_term(m, c);
  return x;
}

CorrClass CorrClass::h(VarietyData vd, int n, int slot, int power) {
  require(slot >= 1 && slot <= n, ErrorKind::structural, "slot out of range");
  std::array<int, 3> e{0, 0, 0};
  e[slot - 1] = power;
  return mono(vd, e, n);
}

CorrClass CorrClass::mono(VarietyData vd, std::array<int, 3> e, int n) {
  CorrClass x(vd, n);
  for (int s = 0; s < 3; ++s) {
    if (s >= n) require(e[s] == 0, ErrorKind::structural, "exponent on a missing slot");
    if (e[s] > vd.dim) return x;
  }
  x.add_term(BasisMonomial::plain_h(e), 1);
  return x;
}

CorrClass CorrClass::diag(VarietyData vd, int n, int i, int j) {
  require(n >= 2 && i >= 1 && j >= 1 && i <= n && j <= n && i != j, ErrorKind::structural,
          "diagonal needs two distinct slots");
  return basis(vd, n, BasisMonomial::diagonal_h(i - 1, j - 1));
}

CorrClass CorrClass::small_diag(VarietyData vd) {
  return basis(vd, 3, BasisMonomial::small_diagonal());
}

Rational CorrClass::coeff(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CorrClass::add_term(const BasisMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.kind == Kind::small) require(n_ == 3, ErrorKind::structural, "delta only on X^3");
  if (m.kind == Kind::diagonal) require(n_ >= 2 && m.j < n_, ErrorKind::structural, "diagonal slot out of range");
  for (int s = n_; s < 3; ++s)
    require(m.exps[s] == 0, ErrorKind::structural, "exponent on a missing slot");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CorrClass& CorrClass::operator+=(const CorrClass& rhs) {
  require(n_ == rhs.n_ && vd_ == rhs.vd_, ErrorKind::structural, "adding classes on different X^n");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CorrClass& CorrClass::operator-=(const CorrClass& rhs) {
  require(n_ == rhs.n_ && vd_ == rhs.vd_, ErrorKind::structural, "subtracting classes on different X^n");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CorrClass& CorrClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool CorrClass::operator==(const CorrClass& rhs) const {
  return n_ == rhs.n_ && vd_ == rhs.vd_ && terms_ == rhs.terms_;
}

std::string CorrClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    std::string code = m.code(n_);
    if (a != 1 || code == "1") os << a.get_str() << (code == "1" ? "" : "*");
    if (code != "1") os << (code.find(' ') != std::string::npos ? "(" + code + ")" : code);
    first = false;
  }
  return os.str();
}

CorrClass operator+(CorrClass a, const CorrClass& b) { return a += b; }
CorrClass operator-(CorrClass a, const CorrClass& b) { return a -= b; }
CorrClass operator*(const Rational& s, CorrClass a) { return a *= s; }

CorrClass diagonal_pushforward(const VarietyData& vd, int n, int i, int j, int k) {
  CorrClass out(vd, n);
  if (k == 0) {
    out.add_term(BasisMonomial::diagonal_h(i, j), 1);
    return out;
  }
  const int d = vd.dim;
  // Delta_*(e h) = sum_{m=1}^{d} h^m x h^{d+1-m}, then multiply by h_1^{k-1}.
  Rational c = Rational(1) / Rational(vd.degree);
  for (int m = 1; m <= d; ++m) {
    int a = m + k - 1, b = d + 1 - m;
    if (a > d) continue;
    std::array<int, 3> e{0, 0, 0};
    e[i] = a;
    e[j] = b;
    out.add_term(BasisMonomial::plain_h(e), c);
  }
  return out;
}

CorrClass multiply_basis(const VarietyData& vd, int n, const BasisMonomial& a,
                         const BasisMonomial& b) {
  const int d = vd.dim;
  CorrClass out(vd, n);
  if (a.kind == Kind::plain && b.kind == Kind::plain) {
    std::array<int, 3> e{};
    for (int s = 0; s < 3; ++s) {
      e[s] = a.exps[s] + b.exps[s];
      if (e[s] > d) return out;
    }
    out.add_term(BasisMonomial::plain_h(e), 1);
    return out;
  }
  if (a.kind < b.kind) return multiply_basis(vd, n, b, a);

  if (a.kind == Kind::diagonal && b.kind == Kind::plain) {
    // Delta_ij . (h_i^x h_j^y) = (Delta_ij)_*(h^{x+y}); the complement rides along.
    const int k = complement_slot(a.i, a.j);
    int s = b.exps[a.i] + b.exps[a.j];
    CorrClass base = diagonal_pushforward(vd, n, a.i, a.j, s);
    int c = (n == 3) ? a.exps[k] + b.exps[k] : 0;
    if (c > d) return out;
    return n == 3 ? times_h(base, k, c) : base;
  }
  if (a.kind == Kind::diagonal && b.kind == Kind::diagonal) {
    if (a.i == b.i && a.j == b.j) {
      // Self-intersection: Delta . Delta = Delta_*(c_d(T_X)).
      const int k = complement_slot(a.i, a.j);
      CorrClass base = diagonal_pushforward(vd, n, a.i, a.j, d);
      base *= top_chern_coefficient(vd);
      if (n == 2) return base;
      int c = a.exps[k] + b.exps[k];
      if (c > d) return out;
      return times_h(base, k, c);
    }
    // Two distinct diagonals on X^3 meet in the small diagonal.
    std::array<int, 3> e{0, 0, 0};
    e[complement_slot(a.i, a.j)] += a.exps[complement_slot(a.i, a.j)];
    e[complement_slot(b.i, b.j)] += b.exps[complement_slot(b.i, b.j)];
    return multiply_basis(vd, n, BasisMonomial::small_diagonal(), BasisMonomial::plain_h(e));
  }
  if (a.kind == Kind::small && b.kind == Kind::plain) {
    int s = b.exps[0] + b.exps[1] + b.exps[2];
    if (s == 0) {
      out.add_term(a, 1);
      return out;
    }
    if (s > d) return out;
    // delta . h_i^s = delta_*(h^s) = Delta_12 . (Delta_13 . h_1^s)
    CorrClass t = diagonal_pushforward(vd, n, 0, 2, s);
    return mul_by_basis(t, BasisMonomial::diagonal_h(0, 1));
  }
  if (a.kind == Kind::small && b.kind == Kind::diagonal) {
    // delta . Delta_p = Delta_q . (Delta_p . Delta_p) for any other pair q.
    BasisMonomial bare_p = BasisMonomial::diagonal_h(b.i, b.j);
    BasisMonomial q = (b.i == 0 && b.j == 1) ? BasisMonomial::diagonal_h(0, 2)
                                             : BasisMonomial::diagonal_h(0, 1);
    CorrClass self = multiply_basis(vd, n, bare_p, bare_p);
    CorrClass t = mul_by_basis(self, q);
    const int k = complement_slot(b.i, b.j);
    std::array<int, 3> e{0, 0, 0};
    e[k] = b.exps[k];
    return mul_by_basis(t, BasisMonomial::plain_h(e));
  }
  // delta . delta = (delta . Delta_12) . Delta_13
  CorrClass t = multiply_basis(vd, n, BasisMonomial::diagonal_h(0, 1), a);
  return mul_by_basis(t, BasisMonomial::diagonal_h(0, 2));
}

CorrClass intersect(const CorrClass& a, const CorrClass& b) {
  require(a.n() == b.n() && a.variety() == b.variety(), ErrorKind::structural,
          "intersect: classes live on different X^n");
  CorrClass out(a.variety(), a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      CorrClass p = multiply_basis(a.variety(), a.n(), ma, mb);
      p *= ca * cb;
      out += p;
    }
  return out;
}

CorrClass reduce(const VarietyData& vd, const RawExpr& x) {
  CorrClass out(vd, x.n);
  for (const auto& term : x.terms) {
    CorrClass acc = CorrClass::unit(vd, x.n);
    for (const auto& f : term.factors) {
      CorrClass factor(vd, x.n);
      switch (f.kind) {
        case RawFactor::Kind::h:
          factor = CorrClass::h(vd, x.n, f.slot, f.power);
          break;
        case RawFactor::Kind::diagonal:
          factor = CorrClass::diag(vd, x.n, f.i, f.j);
          break;
        case RawFactor::Kind::small:
          require(x.n == 3, ErrorKind::structural, "delta only on X^3");
          factor = CorrClass::small_diag(vd);
          break;
      }
      acc = intersect(acc, factor);
    }
    acc *= term.coeff;
    out += acc;
  }
  return out;
}

CorrClass pull(const CorrClass& f, int to_n, std::vector<int> slots) {
  require(static_cast<int>(slots.size()) == f.n() && to_n > f.n() && to_n <= 3,
          ErrorKind::structural, "malformed pull-back descriptor");
  for (auto& s : slots) {
    require(s >= 1 && s <= to_n, ErrorKind::structural, "pull-back slot out of range");
    --s;
  }
  if (slots.size() == 2)
    require(slots[0] != slots[1], ErrorKind::structural, "pull-back slots must be distinct");
  CorrClass out(f.variety(), to_n);
  for (const auto& [m, c] : f.terms()) {
    if (m.kind == Kind::plain) {
      std::array<int, 3> e{0, 0, 0};
      for (std::size_t s = 0; s < slots.size(); ++s) e[slots[s]] = m.exps[s];
      out.add_term(BasisMonomial::plain_h(e), c);
    } else {
      require(m.kind == Kind::diagonal && f.n() == 2, ErrorKind::structural,
              "only classes on X and X^2 can be pulled back");
      out.add_term(BasisMonomial::diagonal_h(slots[0], slots[1]), c);
    }
  }
  return out;
}

CorrClass push(const CorrClass& f, std::vector<int> keep) {
  const int n = f.n();
  const VarietyData& vd = f.variety();
  const Rational e = vd.degree;
  const int d = vd.dim;
  require(static_cast<int>(keep.size()) == n - 1 && n >= 2, ErrorKind::structural,
          "malformed push-forward descriptor");
  for (auto& s : keep) {
    require(s >= 1 && s <= n, ErrorKind::structural, "push-forward slot out of range");
    --s;
  }
  if (keep.size() == 2)
    require(keep[0] != keep[1], ErrorKind::structural, "push-forward slots must be distinct");
  int gone = 0;
  while (std::find(keep.begin(), keep.end(), gone) != keep.end()) ++gone;
  auto pos = [&](int slot) {  // position of a kept slot in the target
    return static_cast<int>(std::find(keep.begin(), keep.end(), slot) - keep.begin());
  };

  CorrClass out(vd, n - 1);
  for (const auto& [m, c] : f.terms()) {
    if (m.kind == Kind::plain) {
      if (m.exps[gone] != d) continue;
      std::array<int, 3> r{0, 0, 0};
      for (int s : keep) r[pos(s)] = m.exps[s];
      out.add_term(BasisMonomial::plain_h(r), e * c);
    } else if (m.kind == Kind::small) {
      out.add_term(BasisMonomial::diagonal_h(0, 1), c);
    } else if (n == 2) {
      out.add_term(BasisMonomial::plain_h({0, 0, 0}), c);  // Delta -> [X]
    } else {
      const int k = complement_slot(m.i, m.j);
      if (k == gone) {
        if (m.exps[k] == d) out.add_term(BasisMonomial::diagonal_h(0, 1), e * c);
      } else {
        // The removed slot is glued to a kept one: the map is an isomorphism onto X^2.
        std::array<int, 3> r{0, 0, 0};
        r[pos(k)] = m.exps[k];
        out.add_term(BasisMonomial::plain_h(r), c);
      }
    }
  }
  return out;
}

CorrClass push_pull(const CorrClass& f, const Projection& p) {
  require(p.from_n == f.n(), ErrorKind::structural, "projection source does not match the class");
  if (p.dir == Projection::Dir::pull) return pull(f, p.to_n, p.slots);
  require(p.to_n == f.n() - 1, ErrorKind::structural, "push-forwards drop exactly one factor");
  return push(f, p.slots);
}

Rational degree(const CorrClass& x) {
  const int d = x.variety().dim;
  std::array<int, 3> top{0, 0, 0};
  for (int s = 0; s < x.n(); ++s) top[s] = d;
  Rational e = x.variety().degree, scale = 1;
  for (int s = 0; s < x.n(); ++s) scale *= e;
  return scale * x.coeff(BasisMonomial::plain_h(top));
}

CorrClass compose(const CorrClass& outer, const CorrClass& inner) {
  require(outer.n() == 2 && inner.n() == 2, ErrorKind::structural,
          "composition needs correspondences on X x X");
  const VarietyData& vd = inner.variety();
  const int d = vd.dim;
  CorrClass out(vd, 2);
  for (const auto& [mi, ci] : inner.terms())
    for (const auto& [mo, co] : outer.terms()) {
      if (mi.kind == Kind::diagonal) {
        out.add_term(mo, ci * co);
      } else if (mo.kind == Kind::diagonal) {
        out.add_term(mi, ci * co);
      } else if (mi.exps[1] + mo.exps[0] == d) {
        // (h^c x h^e) o (h^a x h^b) = deg * h^a x h^e when b + c = d
        out.add_term(BasisMonomial::plain_h({mi.exps[0], mo.exps[1], 0}),
                     Rational(vd.degree) * ci * co);
      }
    }
  return out;
}

CorrClass compose_via_pullpush(const CorrClass& outer, const CorrClass& inner) {
  require(outer.n() == 2 && inner.n() == 2, ErrorKind::structural,
          "composition needs correspondences on X x X");
  CorrClass prod = intersect(pull(inner, 3, {1, 2}), pull(outer, 3, {2, 3}));
  return push(prod, {1, 3});
}

CorrClass transpose(const CorrClass& f) {
  require(f.n() == 2, ErrorKind::structural, "transpose needs a correspondence on X x X");
  CorrClass out(f.variety(), 2);
  for (const auto& [m, c] : f.terms()) {
    BasisMonomial t = m;
    std::swap(t.exps[0], t.exps[1]);
    out.add_term(t, c);
  }
  return out;
}

CKProjectors ck_projectors(const VarietyData& vd) {
  require(vd.dim == 4 && vd.kind == VarietyKind::hypersurface, ErrorKind::structural,
          "Chow-Kunneth projectors are built for fourfold hypersurfaces");
  const int d = vd.dim;
  Rational third = Rational(1) / Rational(vd.degree);
  auto hh = [&](int a, int b) { return third * CorrClass::mono(vd, {a, b, 0}, 2); };
  CKProjectors p{hh(d, 0), hh(d - 1, 1), CorrClass(vd, 2), hh(1, d - 1), hh(0, d), CorrClass(vd, 2)};
  p.pi4 = CorrClass::diag(vd, 2, 1, 2) - p.pi0 - p.pi2 - p.pi6 - p.pi8;
  p.pi4_prim = p.pi4 - hh(2, 2);
  return p;
}

std::vector<BasisMonomial> basis_monomials(int n, int d) {
  check_n(n);
  std::vector<BasisMonomial> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= (n >= 2 ? d : 0); ++b)
      for (int c = 0; c <= (n >= 3 ? d : 0); ++c) out.push_back(BasisMonomial::plain_h({a, b, c}));
  if (n == 2) out.push_back(BasisMonomial::diagonal_h(0, 1));
  if (n == 3) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
      for (int c = 0; c <= d; ++c) out.push_back(BasisMonomial::diagonal_h(i, j, c));
    out.push_back(BasisMonomial::small_diagonal());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubmot
