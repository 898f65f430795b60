#include "cubmot/motiveiso.hpp"

#include "cubmot/error.hpp"

namespace cubmot {

namespace {

bool in_span(const Matrix& basis, const Vector& v) {
  if (basis.cols() == 0) return is_zero(v);
  Matrix aug = basis.hstack(Matrix::from_columns({v}, v.size()));
  return aug.rank() == basis.rank();
}

void check_orthogonal_anisotropic(const QuadSpace& q, const std::vector<Vector>& basis, const char* what) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require(basis[i].size() == q.dim(), ErrorKind::domain, std::string(what) + ": vector has the wrong length");
    require(q.q(basis[i]) != 0, ErrorKind::domain, std::string(what) + ": isotropic vector");
    for (std::size_t j = 0; j < i; ++j)
      require(q.pair(basis[i], basis[j]) == 0, ErrorKind::domain, std::string(what) + ": vectors are not orthogonal");
  }
}

NamedCheck compare(const std::string& id, const RealizedClass& lhs, const RealizedClass& rhs) {
  bool ok = lhs == rhs;
  return {id, ok, ok ? "" : "difference: " + (lhs - rhs).describe()};
}

// Isometry check of f on span(basis): f(basis) inside span(target), Gram preserved.
void check_partial_isometry(const Matrix& f, const Matrix& basis, const QuadSpace& from,
                            const Matrix& target, const QuadSpace& to, const char* what) {
  require(f.rows() == to.dim() && f.cols() == from.dim(), ErrorKind::structural,
          std::string(what) + ": map has the wrong shape");
  Matrix img = f * basis;
  for (const auto& c : img.columns())
    require(in_span(target, c), ErrorKind::domain, std::string(what) + ": image leaves the transcendental part");
  require(to.restricted_gram(img) == from.restricted_gram(basis), ErrorKind::domain,
          std::string(what) + ": not an isometry of transcendental parts");
}

}  // namespace

Matrix FourfoldData::alg_matrix() const { return Matrix::from_columns(alg_basis, cfg.prim.dim()); }

Matrix FourfoldData::transcendental_basis() const {
  if (alg_basis.empty()) return Matrix::identity(cfg.prim.dim());
  return cfg.prim.orthogonal_complement(alg_matrix());
}

void validate(const FourfoldData& d) {
  check_orthogonal_anisotropic(d.cfg.prim, d.alg_basis, "algebraic basis");
  if (!d.group) return;
  require(d.group->dim() == d.cfg.prim.dim(), ErrorKind::domain, "group acts on a space of the wrong dimension");
  for (const auto& g : d.group->elements) {
    require(g.transpose() * d.cfg.prim.gram() * g == d.cfg.prim.gram(), ErrorKind::domain,
            "group element is not an isometry");
    for (const auto& a : d.alg_basis) require(g * a == a, ErrorKind::domain, "group moves an algebraic class");
  }
}

SurfaceData::SurfaceData(QuadSpace prim, std::vector<Vector> ns, int h2)
    : prim2(std::move(prim)), ns_basis(std::move(ns)), h_squared(h2), model(CohomologyModel::k3(prim2, h2)) {}

Matrix SurfaceData::transcendental_basis() const {
  if (ns_basis.empty()) return Matrix::identity(prim2.dim());
  return prim2.orthogonal_complement(Matrix::from_columns(ns_basis, prim2.dim()));
}

void validate(const SurfaceData& d) { check_orthogonal_anisotropic(d.prim2, d.ns_basis, "Neron-Severi basis"); }

Vector embed_prim(const CohomologyModel& m, const Vector& v) {
  require(static_cast<int>(v.size()) == m.prim_rank(), ErrorKind::structural, "primitive vector has the wrong length");
  Vector out = zero_vector(static_cast<std::size_t>(m.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(m.prim_offset()) + i] = v[i];
  return out;
}

RealizedClass transfer_class(const ModelPtr& from, const ModelPtr& to, const Matrix& basis,
                             const QuadSpace& form, const Matrix& f) {
  Matrix out(static_cast<std::size_t>(from->size()), static_cast<std::size_t>(to->size()));
  if (basis.cols() > 0) {
    Matrix dual = basis * form.restricted_gram(basis).inverse();
    Matrix block = basis * (f * dual).transpose();
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        out(static_cast<std::size_t>(from->prim_offset()) + i, static_cast<std::size_t>(to->prim_offset()) + j) =
            block(i, j);
  }
  return RealizedClass::from_matrix(from, to, out);
}

RefinedProjectors build_refined_projectors(const FourfoldData& d) {
  validate(d);
  const ModelPtr& m = d.cfg.model;
  Matrix id = Matrix::identity(d.cfg.prim.dim());
  RealizedClass alg = transfer_class(m, m, d.alg_matrix(), d.cfg.prim, id);
  alg.add_term({2, 2, 0}, Rational(1, 3));
  RealizedClass pi4 = realize(ck_projectors(VarietyData::cubic_fourfold()).pi4, d.cfg);
  return {alg, pi4 - alg};
}

bool GammaCert::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<NamedCheck> check_gamma(const RealizedClass& gamma, const FourfoldData& x, const FourfoldData& x2) {
  const ModelPtr& m1 = x.cfg.model;
  const ModelPtr& m2 = x2.cfg.model;
  std::vector<NamedCheck> out;
  out.push_back(compare("tGamma o Gamma = Delta_X", compose(transpose(gamma), gamma), realized_diagonal(m1)));
  out.push_back(compare("Gamma o tGamma = Delta_X'", compose(gamma, transpose(gamma)), realized_diagonal(m2)));
  Matrix a = action_matrix(gamma);
  std::string bad;
  for (int i = 0; i <= 4; ++i)
    if (a * m1->h_power(i) != m2->h_power(i)) bad += (bad.empty() ? "" : ", ") + std::string("i=") + std::to_string(i);
  out.push_back({"Gamma_* h^i = h'^i", bad.empty(), bad.empty() ? "" : "fails for " + bad});
  bool pairing = a.transpose() * m2->pairing() * a == m1->pairing();
  out.push_back({"Gamma preserves the pairing", pairing, pairing ? "" : "A^T M' A != M"});
  return out;
}

GammaCert build_gamma(const FourfoldData& x, const FourfoldData& x2, const Matrix& iso_tr,
                      const std::optional<Matrix>& ambient) {
  validate(x);
  validate(x2);
  const QuadSpace& v1 = x.cfg.prim;
  const QuadSpace& v2 = x2.cfg.prim;
  Matrix t1 = x.transcendental_basis(), t2 = x2.transcendental_basis();
  require(t1.cols() == t2.cols() && v1.dim() == v2.dim(), ErrorKind::domain,
          "non-isometric transcendental parts (Witt rank mismatch)");
  check_partial_isometry(iso_tr, t1, v1, t2, v2, "iso_tr");
  if (x.group || x2.group) {
    require(x.group && x2.group && x.group->order() == x2.group->order(), ErrorKind::domain,
            "group actions must be given on both sides with aligned elements");
    for (std::size_t k = 0; k < x.group->order(); ++k)
      require(iso_tr * x.group->elements[k] * t1 == x2.group->elements[k] * iso_tr * t1, ErrorKind::domain,
              "inequivariant iso_tr");
  }

  // The algebraic parts are matched by Witt cancellation against the
  // transcendental isometry. The group fixes algebraic classes pointwise, so a
  // trivial action suffices for the solver.
  WittInput in;
  in.v1 = v1;
  in.v2 = v2;
  in.g1 = GroupAction::trivial(v1.dim());
  in.g2 = GroupAction::trivial(v2.dim());
  in.w1 = t1;
  in.w2 = t2;
  in.phi_v = ambient ? *ambient : Matrix::identity(v1.dim());
  in.psi_w = iso_tr * t1;
  WittResult w = equivariant_witt(in);

  GammaCert cert;
  cert.witt_steps = w.transport_steps;
  cert.v_map = w.extension;
  const ModelPtr& m1 = x.cfg.model;
  const ModelPtr& m2 = x2.cfg.model;
  auto hh = [&](const std::string& name, int a, int b) {
    RealizedClass c({m1, m2});
    c.add_term({a, b, 0}, Rational(1, 3));
    cert.summands.push_back({name, c});
  };
  hh("h^4 x 1", 4, 0);
  hh("h^3 x h", 3, 1);
  hh("h^2 x h^2", 2, 2);
  for (std::size_t i = 0; i < x.alg_basis.size(); ++i) {
    Matrix a = Matrix::from_columns({x.alg_basis[i]}, v1.dim());
    cert.summands.push_back({"alg " + std::to_string(i + 1), transfer_class(m1, m2, a, v1, w.extension)});
  }
  for (std::size_t k = 0; k < t1.cols(); ++k) {
    // t_k (x) iso(t^k), t^k the dual basis inside the transcendental part
    Matrix dual = t1 * v1.restricted_gram(t1).inverse();
    Vector img = iso_tr * dual.column(k);
    Matrix blk = Matrix::from_columns({t1.column(k)}, v1.dim()) * Matrix::from_columns({img}, v2.dim()).transpose();
    RealizedClass c({m1, m2});
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j)
        c.add_term({m1->prim_offset() + static_cast<int>(i), m2->prim_offset() + static_cast<int>(j), 0}, blk(i, j));
    cert.summands.push_back({"tr " + std::to_string(k + 1), c});
  }
  hh("h x h^3", 1, 3);
  hh("1 x h^4", 0, 4);

  cert.gamma = cert.summands.front().cls;
  for (std::size_t s = 1; s < cert.summands.size(); ++s) cert.gamma += cert.summands[s].cls;
  cert.checks = check_gamma(cert.gamma, x, x2);
  if (x.group) {
    Matrix a = action_matrix(cert.gamma);
    const int o1 = m1->prim_offset(), o2 = m2->prim_offset();
    Matrix av = a.block(static_cast<std::size_t>(o2), static_cast<std::size_t>(o1), v2.dim(), v1.dim());
    bool eq = true;
    for (std::size_t k = 0; k < x.group->order(); ++k)
      eq = eq && av * x.group->elements[k] == x2.group->elements[k] * av;
    cert.checks.push_back({"Gamma is G-equivariant", eq, eq ? "" : "Gamma_* g != g' Gamma_*"});
  }
  return cert;
}

std::vector<NamedCheck> verify_frobenius(const GammaCert& cert, const FourfoldData& x, const FourfoldData& x2) {
  const VarietyData vd = VarietyData::cubic_fourfold();
  const ModelPtr& m1 = x.cfg.model;
  const ModelPtr& m2 = x2.cfg.model;
  const RealizedClass& g = cert.gamma;
  std::vector<NamedCheck> out;

  RealizedClass delta2 = transport(g, realized_diagonal(m1));
  out.push_back(compare("(Gamma x Gamma)_* Delta = Delta'", delta2, realized_diagonal(m2)));

  RealizedClass small2 = realize(CorrClass::small_diag(vd), x2.cfg);
  RealizedClass direct = transport(g, realize(CorrClass::small_diag(vd), x.cfg));
  out.push_back(compare("(Gamma^3)_* delta = delta' (direct)", direct, small2));

  // delta = P(h1,h2,h3) + 1/3 [Delta_12 h3^4 + Delta_13 h2^4 + Delta_23 h1^4],
  // transported piece by piece from Gamma_* h^i and (Gamma x Gamma)_* Delta.
  PolynomialP p = derive_P(x.cfg);
  RealizedClass poly({m1, m1, m1});
  for (const auto& [e, c] : p.coeffs) poly.add_term({e[0], e[1], e[2]}, c);
  RealizedClass via = transport(g, poly);
  Vector h4 = action_matrix(g) * m1->h_power(4);
  for (const auto& [i, j, k] : {std::array<int, 3>{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}) {
    RealizedClass part({m2, m2, m2});
    for (const auto& [key, c] : delta2.terms())
      for (std::size_t l = 0; l < h4.size(); ++l) {
        if (h4[l] == 0) continue;
        RealizedClass::Key nk{0, 0, 0};
        nk[static_cast<std::size_t>(i)] = key[0];
        nk[static_cast<std::size_t>(j)] = key[1];
        nk[static_cast<std::size_t>(k)] = static_cast<int>(l);
        part.add_term(nk, c * h4[l] / 3);
      }
    via += part;
  }
  out.push_back(compare("(Gamma^3)_* delta = delta' (via P)", via, small2));
  out.push_back(compare("direct and P routes agree", direct, via));
  return out;
}

RealizedClass corrupt_gamma(const GammaCert& cert, std::size_t index, const Rational& factor) {
  require(index < cert.summands.size(), ErrorKind::structural, "no such summand");
  RealizedClass out(cert.gamma.slots());
  for (std::size_t s = 0; s < cert.summands.size(); ++s) {
    RealizedClass c = cert.summands[s].cls;
    if (s == index) c *= factor;
    out += c;
  }
  return out;
}

SurfaceProjectors surface_ck(const SurfaceData& s) {
  validate(s);
  const ModelPtr& m = s.model;
  const int pt = m->size() - 1;
  RealizedClass pi0({m, m}), pi4({m, m});
  pi0.add_term({pt, 0, 0}, 1);
  pi4.add_term({0, pt, 0}, 1);
  Matrix ns = Matrix::from_columns(s.ns_basis, s.prim2.dim());
  RealizedClass alg = transfer_class(m, m, ns, s.prim2, Matrix::identity(s.prim2.dim()));
  alg.add_term({1, 1, 0}, Rational(1, s.h_squared));
  RealizedClass delta = realized_diagonal(m);
  RealizedClass tr = delta - pi0 - pi4 - alg;

  SurfaceProjectors out{pi0, alg, tr, pi4, {}};
  std::vector<std::pair<std::string, const RealizedClass*>> ps{
      {"pi0", &out.pi0}, {"pi2alg", &out.pi2_alg}, {"pi2tr", &out.pi2_tr}, {"pi4", &out.pi4}};
  RealizedClass zero({m, m});
  for (const auto& [a, pa] : ps)
    for (const auto& [b, pb] : ps)
      out.checks.push_back(compare(a + " o " + b + (a == b ? " = " + a : " = 0"), compose(*pa, *pb),
                                   a == b ? *pa : zero));
  out.checks.push_back(compare("pi0 + pi2alg + pi2tr + pi4 = Delta_S", pi0 + alg + tr + pi4, delta));
  return out;
}

GammaCert build_gamma_cubic_k3(const FourfoldData& x, const SurfaceData& s, const Matrix& iso) {
  validate(x);
  validate(s);
  Matrix t1 = x.transcendental_basis(), t2 = s.transcendental_basis();
  require(t1.cols() == t2.cols(), ErrorKind::domain,
          "not Witt-equivalent transcendental shadows (ranks " + std::to_string(t1.cols()) + " and " +
              std::to_string(t2.cols()) + ")");
  check_partial_isometry(iso, t1, x.cfg.prim, t2, s.prim2, "iso");
  GammaCert cert;
  cert.gamma = transfer_class(x.cfg.model, s.model, t1, x.cfg.prim, iso);
  cert.summands.push_back({"tr", cert.gamma});
  cert.v_map = iso;
  RefinedProjectors px = build_refined_projectors(x);
  SurfaceProjectors ps = surface_ck(s);
  cert.checks.push_back(compare("tGamma_tr o Gamma_tr = pi4_tr,X", compose(transpose(cert.gamma), cert.gamma), px.tr));
  cert.checks.push_back(compare("Gamma_tr o tGamma_tr = pi2_tr,S", compose(cert.gamma, transpose(cert.gamma)), ps.pi2_tr));
  // Quadratic-space form of the statement: Gamma_* is isometric on transcendental classes.
  Matrix a = action_matrix(cert.gamma);
  std::vector<Vector> src, dst;
  for (const auto& t : t1.columns()) {
    src.push_back(embed_prim(*x.cfg.model, t));
    dst.push_back(a * src.back());
  }
  const std::size_t n1 = static_cast<std::size_t>(x.cfg.model->size());
  const std::size_t n2 = static_cast<std::size_t>(s.model->size());
  Matrix ms = Matrix::from_columns(src, n1), md = Matrix::from_columns(dst, n2);
  bool iso_ok = md.transpose() * s.model->pairing() * md == ms.transpose() * x.cfg.model->pairing() * ms;
  cert.checks.push_back({"Gamma_tr is isometric on transcendental classes", iso_ok, iso_ok ? "" : "Gram mismatch"});
  return cert;
}

}  // namespace cubmot
