#include "cubmot/realization.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

bool same_model(const ModelPtr& a, const ModelPtr& b) { return a == b || a->same_as(*b); }

void require_same_slots(const std::vector<ModelPtr>& a, const std::vector<ModelPtr>& b,
                        const char* what) {
  require(a.size() == b.size(), ErrorKind::structural, std::string(what) + ": different number of factors");
  for (std::size_t s = 0; s < a.size(); ++s)
    require(same_model(a[s], b[s]), ErrorKind::structural, std::string(what) + ": factors differ");
}

// Sparse columns of a matrix: for each column, the nonzero (row, value) pairs.
std::vector<std::vector<std::pair<int, Rational>>> sparse_columns(const Matrix& m) {
  std::vector<std::vector<std::pair<int, Rational>>> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) out[c].emplace_back(static_cast<int>(r), m(r, c));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CohomologyModel

ModelPtr CohomologyModel::cubic(const QuadSpace& prim) {
  require(prim.gram().is_symmetric(), ErrorKind::config, "primitive Gram must be symmetric");
  auto m = std::shared_ptr<CohomologyModel>(new CohomologyModel());
  const int r = static_cast<int>(prim.dim());
  m->dim_ = 4;
  m->deg_ = 3;
  m->prim_ = prim;
  m->prim_offset_ = 5;
  m->prim_rank_ = r;
  const int n = 5 + r;
  m->codim_.resize(static_cast<std::size_t>(n), 2);
  for (int k = 0; k < 5; ++k) m->codim_[static_cast<std::size_t>(k)] = k;
  m->integral_.assign(static_cast<std::size_t>(n), Rational(0));
  m->integral_[4] = 3;
  m->product_.assign(static_cast<std::size_t>(n * n), {});
  auto at = [&](int i, int j) -> auto& { return m->product_[static_cast<std::size_t>(i * n + j)]; };
  for (int a = 0; a < 5; ++a)
    for (int b = 0; a + b < 5; ++b) at(a, b).emplace_back(a + b, 1);
  for (int i = 0; i < r; ++i) {
    at(0, 5 + i).emplace_back(5 + i, 1);
    at(5 + i, 0).emplace_back(5 + i, 1);
    // h . e = 0: H^6 is spanned by h^3 and \int (h e) h = <e, h^2> = 0.
    for (int j = 0; j < r; ++j) {
      Rational g = prim.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (g != 0) at(5 + i, 5 + j).emplace_back(4, g / 3);
    }
  }
  m->finish();
  return m;
}

ModelPtr CohomologyModel::k3(const QuadSpace& prim, int deg) {
  require(prim.gram().is_symmetric(), ErrorKind::config, "primitive Gram must be symmetric");
  require(deg > 0, ErrorKind::config, "h^2 must be positive on a polarised K3");
  auto m = std::shared_ptr<CohomologyModel>(new CohomologyModel());
  const int s = static_cast<int>(prim.dim());
  m->dim_ = 2;
  m->k3_ = true;
  m->deg_ = deg;
  m->prim_ = prim;
  m->prim_offset_ = 2;
  m->prim_rank_ = s;
  const int n = 3 + s, pt = n - 1;
  m->codim_.assign(static_cast<std::size_t>(n), 1);
  m->codim_[0] = 0;
  m->codim_[static_cast<std::size_t>(pt)] = 2;
  m->integral_.assign(static_cast<std::size_t>(n), Rational(0));
  m->integral_[static_cast<std::size_t>(pt)] = 1;
  m->product_.assign(static_cast<std::size_t>(n * n), {});
  auto at = [&](int i, int j) -> auto& { return m->product_[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) {
    at(0, i).emplace_back(i, 1);
    if (i != 0) at(i, 0).emplace_back(i, 1);
  }
  at(1, 1).emplace_back(pt, deg);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      Rational g = prim.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (g != 0) at(2 + i, 2 + j).emplace_back(pt, g);
    }
  m->finish();
  return m;
}

void CohomologyModel::finish() {
  const int n = size();
  pairing_ = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j))
        pairing_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += c * integral(k);
  require(pairing_.determinant() != 0, ErrorKind::config,
          "cohomology pairing is degenerate (primitive Gram must be non-degenerate)");
  pairing_inv_ = pairing_.inverse();
}

int CohomologyModel::h_index(int k) const {
  if (k == 0) return 0;
  if (!k3_) return k <= 4 ? k : -1;
  return k == 1 ? 1 : -1;
}

Vector CohomologyModel::h_power(int k) const {
  Vector v = zero_vector(static_cast<std::size_t>(size()));
  if (k > dim_) return v;
  int idx = h_index(k);
  if (idx >= 0) v[static_cast<std::size_t>(idx)] = 1;
  else v[static_cast<std::size_t>(size() - 1)] = deg_;  // h^2 = deg pt on a K3
  return v;
}

std::string CohomologyModel::label(int i) const {
  if (k3_) {
    if (i == 0) return "1";
    if (i == 1) return "h";
    if (i == size() - 1) return "pt";
    return "p" + std::to_string(i - prim_offset_ + 1);
  }
  if (i < prim_offset_) return i == 0 ? "1" : (i == 1 ? "h" : "h^" + std::to_string(i));
  return "e" + std::to_string(i - prim_offset_ + 1);
}

bool CohomologyModel::same_as(const CohomologyModel& o) const {
  return k3_ == o.k3_ && deg_ == o.deg_ && prim_rank_ == o.prim_rank_ && prim_.gram() == o.prim_.gram();
}

// ---------------------------------------------------------------------------
// RealizedClass

RealizedClass::RealizedClass(std::vector<ModelPtr> slots) : slots_(std::move(slots)) {
  require(!slots_.empty() && slots_.size() <= 3, ErrorKind::structural, "realized classes live on X^n, n <= 3");
}

RealizedClass RealizedClass::from_matrix(ModelPtr a, ModelPtr b, const Matrix& m) {
  require(static_cast<int>(m.rows()) == a->size() && static_cast<int>(m.cols()) == b->size(),
          ErrorKind::structural, "matrix does not match the factors");
  RealizedClass out({std::move(a), std::move(b)});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out.terms_.emplace(Key{static_cast<int>(i), static_cast<int>(j), 0}, m(i, j));
  return out;
}

RealizedClass RealizedClass::pull(std::vector<ModelPtr> new_slots, const std::vector<int>& slots) const {
  require(slots.size() == slots_.size() && new_slots.size() > slots_.size(), ErrorKind::structural,
          "malformed pull-back descriptor");
  for (std::size_t s = 0; s < slots.size(); ++s) {
    require(slots[s] >= 1 && slots[s] <= static_cast<int>(new_slots.size()), ErrorKind::structural,
            "pull-back slot out of range");
    require(same_model(slots_[s], new_slots[static_cast<std::size_t>(slots[s] - 1)]), ErrorKind::structural,
            "pull-back factor mismatch");
  }
  RealizedClass out(std::move(new_slots));
  for (const auto& [k, c] : terms_) {
    Key nk{0, 0, 0};
    for (std::size_t s = 0; s < slots.size(); ++s) nk[static_cast<std::size_t>(slots[s] - 1)] = k[s];
    out.add_term(nk, c);
  }
  return out;
}

Rational RealizedClass::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RealizedClass::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Matrix RealizedClass::to_matrix() const {
  require(n() == 2, ErrorKind::structural, "to_matrix needs a class on a product of two factors");
  Matrix m(static_cast<std::size_t>(slots_[0]->size()), static_cast<std::size_t>(slots_[1]->size()));
  for (const auto& [k, c] : terms_) m(static_cast<std::size_t>(k[0]), static_cast<std::size_t>(k[1])) = c;
  return m;
}

RealizedClass& RealizedClass::operator+=(const RealizedClass& rhs) {
  require_same_slots(slots_, rhs.slots_, "add");
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

RealizedClass& RealizedClass::operator-=(const RealizedClass& rhs) {
  require_same_slots(slots_, rhs.slots_, "subtract");
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

RealizedClass& RealizedClass::operator*=(const Rational& s) {
  if (s == 0) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool RealizedClass::operator==(const RealizedClass& rhs) const {
  if (slots_.size() != rhs.slots_.size()) return false;
  for (std::size_t s = 0; s < slots_.size(); ++s)
    if (!same_model(slots_[s], rhs.slots_[s])) return false;
  return terms_ == rhs.terms_;
}

RealizedClass RealizedClass::codim_part(int c) const {
  RealizedClass out(slots_);
  for (const auto& [k, v] : terms_) {
    int total = 0;
    for (int s = 0; s < n(); ++s) total += slots_[static_cast<std::size_t>(s)]->codim(k[static_cast<std::size_t>(s)]);
    if (total == c) out.terms_.emplace(k, v);
  }
  return out;
}

std::string RealizedClass::describe(std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [k, c] : terms_) {
    if (shown == max_terms) {
      os << " + ... (" << terms_.size() << " terms)";
      break;
    }
    if (shown) os << " + ";
    os << to_string(c) << "*";
    for (int s = 0; s < n(); ++s)
      os << (s ? "(x)" : "") << slots_[static_cast<std::size_t>(s)]->label(k[static_cast<std::size_t>(s)]);
    ++shown;
  }
  return os.str();
}

RealizedClass operator+(RealizedClass a, const RealizedClass& b) { return a += b; }
RealizedClass operator-(RealizedClass a, const RealizedClass& b) { return a -= b; }
RealizedClass operator*(const Rational& s, RealizedClass a) { return a *= s; }

RealizedClass multiply(const RealizedClass& a, const RealizedClass& b) {
  require_same_slots(a.slots(), b.slots(), "multiply");
  RealizedClass out(a.slots());
  const int n = a.n();
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const auto& p0 = a.slots()[0]->product(ka[0], kb[0]);
      if (p0.empty()) continue;
      static const std::vector<std::pair<int, Rational>> unit{{0, Rational(1)}};
      const auto& p1 = n > 1 ? a.slots()[1]->product(ka[1], kb[1]) : unit;
      if (p1.empty()) continue;
      const auto& p2 = n > 2 ? a.slots()[2]->product(ka[2], kb[2]) : unit;
      if (p2.empty()) continue;
      Rational c = ca * cb;
      for (const auto& [i0, c0] : p0)
        for (const auto& [i1, c1] : p1)
          for (const auto& [i2, c2] : p2)
            out.add_term({i0, n > 1 ? i1 : 0, n > 2 ? i2 : 0}, c * c0 * c1 * c2);
    }
  return out;
}

Rational degree(const RealizedClass& x) {
  Rational total = 0;
  for (const auto& [k, c] : x.terms()) {
    Rational t = c;
    for (int s = 0; s < x.n() && t != 0; ++s) t *= x.slots()[static_cast<std::size_t>(s)]->integral(k[static_cast<std::size_t>(s)]);
    total += t;
  }
  return total;
}

RealizedClass compose(const RealizedClass& outer, const RealizedClass& inner) {
  require(outer.n() == 2 && inner.n() == 2, ErrorKind::structural, "composition needs correspondences");
  require(same_model(inner.slots()[1], outer.slots()[0]), ErrorKind::structural,
          "composition: middle factors differ");
  // g o f = F M_B G in matrix form.
  Matrix m = inner.to_matrix() * inner.slots()[1]->pairing() * outer.to_matrix();
  return RealizedClass::from_matrix(inner.slots()[0], outer.slots()[1], m);
}

RealizedClass transpose(const RealizedClass& f) {
  require(f.n() == 2, ErrorKind::structural, "transpose needs a correspondence");
  RealizedClass out({f.slots()[1], f.slots()[0]});
  for (const auto& [k, c] : f.terms()) out.add_term({k[1], k[0], 0}, c);
  return out;
}

RealizedClass push(const RealizedClass& x, const std::vector<int>& keep) {
  require(!keep.empty() && static_cast<int>(keep.size()) < x.n(), ErrorKind::structural,
          "push-forward must drop at least one factor");
  std::vector<ModelPtr> slots;
  for (int s : keep) {
    require(s >= 1 && s <= x.n(), ErrorKind::structural, "push-forward slot out of range");
    slots.push_back(x.slots()[static_cast<std::size_t>(s - 1)]);
  }
  RealizedClass out(slots);
  for (const auto& [k, c] : x.terms()) {
    Rational t = c;
    for (int s = 1; s <= x.n() && t != 0; ++s)
      if (std::find(keep.begin(), keep.end(), s) == keep.end())
        t *= x.slots()[static_cast<std::size_t>(s - 1)]->integral(k[static_cast<std::size_t>(s - 1)]);
    if (t == 0) continue;
    RealizedClass::Key nk{0, 0, 0};
    for (std::size_t p = 0; p < keep.size(); ++p) nk[p] = k[static_cast<std::size_t>(keep[p] - 1)];
    out.add_term(nk, t);
  }
  return out;
}

Matrix action_matrix(const RealizedClass& f) {
  require(f.n() == 2, ErrorKind::structural, "action needs a correspondence");
  // f_*(b_i) = sum_kl F_kl (\int b_i b_k) b'_l
  return f.to_matrix().transpose() * f.slots()[0]->pairing();
}

RealizedClass transport(const RealizedClass& f, const RealizedClass& x) {
  for (const auto& s : x.slots())
    require(same_model(s, f.slots()[0]), ErrorKind::structural, "transport: source factor mismatch");
  auto cols = sparse_columns(action_matrix(f));
  std::vector<ModelPtr> slots(static_cast<std::size_t>(x.n()), f.slots()[1]);
  RealizedClass out(slots);
  static const std::vector<std::pair<int, Rational>> unit{{0, Rational(1)}};
  for (const auto& [k, c] : x.terms()) {
    const auto& c0 = cols[static_cast<std::size_t>(k[0])];
    const auto& c1 = x.n() > 1 ? cols[static_cast<std::size_t>(k[1])] : unit;
    const auto& c2 = x.n() > 2 ? cols[static_cast<std::size_t>(k[2])] : unit;
    for (const auto& [i0, v0] : c0)
      for (const auto& [i1, v1] : c1)
        for (const auto& [i2, v2] : c2)
          out.add_term({i0, x.n() > 1 ? i1 : 0, x.n() > 2 ? i2 : 0}, c * v0 * v1 * v2);
  }
  return out;
}

RealizedClass realized_diagonal(const ModelPtr& model) {
  return RealizedClass::from_matrix(model, model, model->pairing_inverse());
}

// ---------------------------------------------------------------------------
// Configuration

Matrix default_prim_gram(int rank) {
  require(rank >= 0, ErrorKind::config, "negative rank");
  Vector d(static_cast<std::size_t>(rank), Rational(1));
  for (int i = std::max(0, rank - 2); i < rank; ++i) d[static_cast<std::size_t>(i)] = -1;
  return Matrix::diagonal(d);
}

RealizationConfig::RealizationConfig(QuadSpace p) : prim(std::move(p)), model(CohomologyModel::cubic(prim)) {}

RealizationConfig RealizationConfig::default_config() { return RealizationConfig(QuadSpace(default_prim_gram())); }

std::vector<NamedCheck> validate_config(const Matrix& gram) {
  std::vector<NamedCheck> out;
  bool sym = gram.is_square() && gram.is_symmetric();
  out.push_back({"gram-symmetric", sym, sym ? "" : "Gram matrix is not square and symmetric"});
  if (!sym) return out;
  bool nondeg = gram.determinant() != 0;
  out.push_back({"gram-nondegenerate", nondeg, nondeg ? "" : "det = 0"});
  if (!nondeg) return out;
  RealizationConfig cfg{QuadSpace(gram)};
  RealizedClass d = realized_diagonal(cfg.model);
  Rational chi = degree(multiply(d, d));
  const VarietyData vd = VarietyData::cubic_fourfold();
  Rational c4 = integrate(TruncPoly::monomial(vd, 4, tangent_chern(vd)[4]));
  bool euler = chi == c4;
  out.push_back({"euler-consistency", euler,
                 "deg(Delta^2) = " + to_string(chi) + ", \\int c_4 = " + to_string(c4)});
  return out;
}

RealizedClass realize(const CorrClass& x, const RealizationConfig& cfg) {
  require(x.variety() == VarietyData::cubic_fourfold(), ErrorKind::structural,
          "realization is set up for the cubic fourfold");
  const ModelPtr& m = cfg.model;
  const int n = x.n();
  std::vector<ModelPtr> slots(static_cast<std::size_t>(n), m);
  RealizedClass out(slots);
  auto diag_terms = sparse_columns(m->pairing_inverse());
  auto place_diag = [&](RealizedClass& into, int i, int j, int k, int cexp, const Rational& c) {
    for (std::size_t q = 0; q < diag_terms.size(); ++q)
      for (const auto& [p, v] : diag_terms[q]) {
        RealizedClass::Key key{0, 0, 0};
        key[static_cast<std::size_t>(i)] = p;
        key[static_cast<std::size_t>(j)] = static_cast<int>(q);
        if (k >= 0) key[static_cast<std::size_t>(k)] = m->h_index(cexp);
        into.add_term(key, c * v);
      }
  };
  std::optional<RealizedClass> delta;
  for (const auto& [mono, c] : x.terms()) {
    switch (mono.kind) {
      case BasisMonomial::Kind::plain:
        out.add_term({m->h_index(mono.exps[0]), n > 1 ? m->h_index(mono.exps[1]) : 0,
                      n > 2 ? m->h_index(mono.exps[2]) : 0},
                     c);
        break;
      case BasisMonomial::Kind::diagonal: {
        int k = n == 3 ? 3 - mono.i - mono.j : -1;
        place_diag(out, mono.i, mono.j, k, k >= 0 ? mono.exps[static_cast<std::size_t>(k)] : 0, c);
        break;
      }
      case BasisMonomial::Kind::small: {
        if (!delta) {
          RealizedClass d12(slots), d13(slots);
          place_diag(d12, 0, 1, 2, 0, 1);
          place_diag(d13, 0, 2, 1, 0, 1);
          delta = multiply(d12, d13);
        }
        RealizedClass t = *delta;
        t *= c;
        out += t;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The polynomial P

bool PolynomialP::is_symmetric() const {
  for (const auto& [e, c] : coeffs) {
    std::array<int, 3> p = e;
    std::sort(p.begin(), p.end());
    do {
      auto it = coeffs.find(p);
      if (it == coeffs.end() || it->second != c) return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

std::string PolynomialP::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    os << Rational(abs(c)).get_str();
    for (int s = 0; s < 3; ++s)
      if (e[static_cast<std::size_t>(s)] > 0) {
        os << " h" << s + 1;
        if (e[static_cast<std::size_t>(s)] > 1) os << "^" << e[static_cast<std::size_t>(s)];
      }
  }
  return os.str();
}

RealizedClass small_diagonal_remainder(const RealizationConfig& cfg) {
  const VarietyData vd = VarietyData::cubic_fourfold();
  CorrClass diag_terms(vd, 3);
  diag_terms.add_term(BasisMonomial::diagonal_h(0, 1, 4), 1);
  diag_terms.add_term(BasisMonomial::diagonal_h(0, 2, 4), 1);
  diag_terms.add_term(BasisMonomial::diagonal_h(1, 2, 4), 1);
  RealizedClass r = realize(CorrClass::small_diag(vd), cfg);
  RealizedClass d = realize(diag_terms, cfg);
  d *= Rational(1, 3);
  return r - d;
}

PolynomialP derive_P(const RealizationConfig& cfg) {
  RealizedClass r = small_diagonal_remainder(cfg);
  const int off = cfg.model->prim_offset();
  PolynomialP p;
  for (const auto& [k, c] : r.terms()) {
    for (int s = 0; s < 3; ++s)
      require(k[static_cast<std::size_t>(s)] < off, ErrorKind::internal,
              "MCK shadow violated: remainder has component " + r.describe(4));
    p.coeffs[{k[0], k[1], k[2]}] = c;
  }
  return p;
}

Rational remainder_degree_closed_form(int a, int b, int c) {
  // \int delta h^a h^b h^c = 3 [a+b+c=4]; each Delta_ij h_k^4 term contributes
  // \int_X h^{a_i+a_j} \int_X h^{4+a_k} = 9 [a_k = 0][a_i+a_j = 4], weighted by 1/3.
  const bool top = a + b + c == 4;
  int zeros = (a == 0) + (b == 0) + (c == 0);
  return top ? Rational(3 - 3 * zeros) : Rational(0);
}

std::vector<NamedCheck> verify_kernel_identities(const RealizationConfig& cfg) {
  const VarietyData vd = VarietyData::cubic_fourfold();
  RealizedClass pl = realize(kernel_class(vd, Side::left), cfg);
  RealizedClass pr = realize(kernel_class(vd, Side::right), cfg);
  RealizedClass prim = realize(ck_projectors(vd).pi4_prim, cfg);
  std::vector<NamedCheck> out;
  auto check = [&](const std::string& id, const RealizedClass& lhs, const RealizedClass& rhs) {
    bool ok = lhs == rhs;
    out.push_back({id, ok, ok ? "" : "difference: " + (lhs - rhs).describe()});
  };
  check("pL o pL = pL", compose(pl, pl), pl);
  check("pR o pR = pR", compose(pr, pr), pr);
  check("pL o pR = pR", compose(pl, pr), pr);
  check("pR o pL = pL", compose(pr, pl), pl);
  check("pi4prim o v4(PL) o pi4prim = pi4prim", compose(prim, compose(pl.codim_part(4), prim)), prim);
  check("pi4prim o v4(PR) o pi4prim = pi4prim", compose(prim, compose(pr.codim_part(4), prim)), prim);
  return out;
}

}  // namespace cubmot
