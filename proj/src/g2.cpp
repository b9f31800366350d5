#include "calibra/g2.hpp"

#include <algorithm>
#include <cmath>

namespace calibra {

const AltForm& DecompReport::part(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c.part;
  fail("ParseError", "no decomposition component named " + name);
}

double DecompReport::residual(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c.residual;
  fail("ParseError", "no decomposition component named " + name);
}

namespace g2 {

namespace {

constexpr double kTol = 1e-9;
constexpr double kClassifyTol = 1e-8;
constexpr double kEigZero = 1e-10;

/// Top-form coefficient of a relative to e^{0..n-1}.
double top_coeff(const AltForm& a) {
  return a.coeff((Mask{1} << a.dim()) - 1);
}

/// Spanning set {e_i} u {e_i + e_j} determining a symmetric bilinear form.
std::vector<Vec> quadratic_spanning_set(int dim) {
  std::vector<Vec> set;
  for (int i = 0; i < dim; ++i) set.push_back(Vec::Unit(dim, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      set.push_back(Vec::Unit(dim, i) + Vec::Unit(dim, j));
  return set;
}

/// Modified Gram-Schmidt with pivoting on the largest remaining norm.
/// Throws DependentBasis when the span collapses.
std::vector<Vec> orthonormalize(const Metric& m, std::vector<Vec> vs) {
  const double indep_tol = 1e-12;
  std::vector<Vec> out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::size_t best = k;
    for (std::size_t j = k + 1; j < vs.size(); ++j)
      if (m.norm(vs[j]) > m.norm(vs[best])) best = j;
    std::swap(vs[k], vs[best]);
    double n = m.norm(vs[k]);
    if (n <= indep_tol) fail("DependentBasis", "basis is linearly dependent");
    vs[k] /= n;
    for (std::size_t j = k + 1; j < vs.size(); ++j)
      vs[j] -= m.inner(vs[k], vs[j]) * vs[k];
    out.push_back(vs[k]);
  }
  return out;
}

}  // namespace

AltForm standard_phi0() {
  AltForm phi(7, 3);
  phi.add_term({0, 1, 2}, 1.0)
      .add_term({0, 3, 4}, -1.0)
      .add_term({0, 5, 6}, -1.0)
      .add_term({1, 3, 5}, -1.0)
      .add_term({1, 4, 6}, 1.0)
      .add_term({2, 3, 6}, -1.0)
      .add_term({2, 4, 5}, -1.0);
  return phi;
}

AltForm standard_psi0() {
  AltForm psi(7, 4);
  psi.add_term({0, 1, 3, 6}, -1.0)
      .add_term({0, 1, 4, 5}, -1.0)
      .add_term({0, 2, 3, 5}, 1.0)
      .add_term({0, 2, 4, 6}, -1.0)
      .add_term({1, 2, 3, 4}, -1.0)
      .add_term({1, 2, 5, 6}, -1.0)
      .add_term({3, 4, 5, 6}, 1.0);
  return psi;
}

CrossStructure7::CrossStructure7(Metric m, Orientation o, AltForm phi)
    : metric_(std::move(m)),
      orientation_(std::move(o)),
      phi_(std::move(phi)),
      psi_(7, 4),
      dvol_(7, 7) {
  if (metric_.dim() != 7 || phi_.dim() != 7 || phi_.degree() != 3)
    fail("DimensionMismatch", "CrossStructure7 wants a 3-form on dim 7");
  dvol_ = volume_form(metric_, orientation_);
  psi_ = hodge(phi_, metric_, orientation_);

  // Compatibility certificate: iota(u)phi ^ iota(u)phi ^ phi = 6|u|^2 dvol on
  // a spanning set; by polarization this pins the full bilinear identity.
  const double dv = top_coeff(dvol_);
  for (const Vec& u : quadratic_spanning_set(7)) {
    AltForm iu = contract(u, phi_);
    double lhs = top_coeff(wedge(wedge(iu, iu), phi_)) / dv;
    double want = 6.0 * metric_.inner(u, u);
    if (std::abs(lhs - want) > kTol * std::max(1.0, std::abs(want)))
      fail("CompatibilityFailed",
           "phi is not compatible with the given metric/orientation");
  }
}

CrossStructure7 CrossStructure7::standard() {
  return CrossStructure7(Metric::identity(7), Orientation::standard(7),
                         standard_phi0());
}

CrossStructure7 standard_phi7() { return CrossStructure7::standard(); }

Vec CrossStructure7::cross(const Vec& u, const Vec& v) const {
  if (u.size() != 7 || v.size() != 7) fail("DimensionMismatch", "cross");
  // <u x v, w> = phi(u,v,w), so u x v is the sharp of iota(v)iota(u)phi.
  return metric_.sharp(covector_of(contract(v, contract(u, phi_))));
}

Vec CrossStructure7::associator(const Vec& u, const Vec& v,
                                const Vec& w) const {
  return cross(cross(u, v), w) + inner(v, w) * u - inner(u, w) * v;
}

Vec CrossStructure7::coassociator(const Vec& u, const Vec& v, const Vec& w,
                                  const Vec& x) const {
  return phi_eval(u, v, w) * x - phi_eval(x, u, v) * w + phi_eval(w, x, u) * v -
         phi_eval(v, w, x) * u;
}

double CrossStructure7::phi_eval(const Vec& u, const Vec& v,
                                 const Vec& w) const {
  const Vec vs[] = {u, v, w};
  return eval(phi_, vs);
}

double CrossStructure7::psi_eval(const Vec& u, const Vec& v, const Vec& w,
                                 const Vec& x) const {
  const Vec vs[] = {u, v, w, x};
  return eval(psi_, vs);
}

AltForm CrossStructure7::star(const AltForm& a) const {
  return hodge(a, metric_, orientation_);
}

namespace {

/// b(e_i,e_j) = iota(e_i)phi ^ iota(e_j)phi ^ phi relative to e^{0..6}.
Mat nondegeneracy_form(const AltForm& phi) {
  Mat b(7, 7);
  std::vector<AltForm> iu;
  for (int i = 0; i < 7; ++i) iu.push_back(contract(Vec::Unit(7, i), phi));
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      b(i, j) = top_coeff(wedge(wedge(iu[i], iu[j]), phi));
      b(j, i) = b(i, j);
    }
  return b;
}

}  // namespace

bool is_nondegenerate3(const AltForm& phi) {
  if (phi.dim() != 7 || phi.degree() != 3) return false;
  Mat b = nondegeneracy_form(phi);
  Eigen::SelfAdjointEigenSolver<Mat> eig(b);
  const Vec ev = eig.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) return false;
  if (ev.cwiseAbs().minCoeff() <= kEigZero * scale) return false;
  return ev.minCoeff() > 0.0 || ev.maxCoeff() < 0.0;
}

CrossStructure7 recover_metric_from_phi(const AltForm& phi) {
  if (phi.dim() != 7 || phi.degree() != 3)
    fail("DimensionMismatch", "recover_metric_from_phi wants a 3-form on dim 7");
  Mat b = nondegeneracy_form(phi);
  Eigen::SelfAdjointEigenSolver<Mat> eig(b);
  const Vec ev = eig.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0 || ev.cwiseAbs().minCoeff() <= kEigZero * scale)
    fail("NotNondegenerate", "the quadratic form of phi is singular");
  if (ev.minCoeff() < 0.0 && ev.maxCoeff() > 0.0)
    fail("IndefiniteSignature", "the quadratic form of phi is indefinite");

  // Orientation chosen so b is positive; then rescale so that the identity
  // iota(u)phi ^ iota(v)phi ^ phi = 6<u,v> dvol holds with constant 6.
  const double s = ev.minCoeff() > 0.0 ? 1.0 : -1.0;
  Mat g = s * b;
  const double mu = 1.0 / std::sqrt(g.determinant());
  const double lambda = std::pow(6.0 / mu, 1.0 / 9.0);
  g /= lambda * lambda;

  Orientation o = Orientation::standard(7);
  if (s < 0) o = o.flipped();
  return CrossStructure7(Metric(g), o, phi);
}

Classification7 classify_subspace7(const CrossStructure7& s,
                                   const Subspace& sub) {
  const int k = static_cast<int>(sub.basis.size());
  if (k != 3 && k != 4)
    fail("BadDimension", "classify_subspace7 wants a 3- or 4-dim subspace");
  for (const Vec& v : sub.basis)
    if (v.size() != 7) fail("DimensionMismatch", "basis vector dim != 7");
  std::vector<Vec> on = orthonormalize(s.metric(), sub.basis);
  Classification7 out;
  if (k == 3) {
    out.residual = s.norm(s.associator(on[0], on[1], on[2]));
    out.kind = out.residual <= kClassifyTol ? Kind7::Associative : Kind7::Generic;
  } else {
    out.residual = s.norm(s.coassociator(on[0], on[1], on[2], on[3]));
    out.kind =
        out.residual <= kClassifyTol ? Kind7::Coassociative : Kind7::Generic;
  }
  return out;
}

DecompReport decompose2_7(const CrossStructure7& s, const AltForm& omega) {
  if (omega.dim() != 7 || omega.degree() != 2)
    fail("DimensionMismatch", "decompose2_7 wants a 2-form on dim 7");
  AltForm w7 = s.star(wedge(s.psi(), s.star(wedge(s.psi(), omega)))) * (1.0 / 3.0);
  AltForm w14 = omega - w7;

  auto eig_residual = [&](const AltForm& w, double ev) {
    return form_norm(s.star(wedge(s.phi(), w)) - ev * w, s.metric());
  };
  DecompReport rep;
  rep.components.push_back({"7", w7, eig_residual(w7, 2.0)});
  rep.components.push_back({"14", w14, eig_residual(w14, -1.0)});
  rep.recompose_residual = form_norm(w7 + w14 - omega, s.metric());
  rep.orthogonality_residual = std::abs(form_inner(w7, w14, s.metric()));
  return rep;
}

DecompReport decompose3_7(const CrossStructure7& s, const AltForm& b) {
  if (b.dim() != 7 || b.degree() != 3)
    fail("DimensionMismatch", "decompose3_7 wants a 3-form on dim 7");
  const Metric& m = s.metric();
  AltForm b1 = s.phi() * (form_inner(b, s.phi(), m) / form_inner(s.phi(), s.phi(), m));

  // Least squares over the spanning set {iota(e_i)psi} of Lambda^3_7.
  std::vector<AltForm> gen;
  for (int i = 0; i < 7; ++i) gen.push_back(contract(Vec::Unit(7, i), s.psi()));
  Mat gram(7, 7);
  Vec rhs(7);
  AltForm rem = b - b1;
  for (int i = 0; i < 7; ++i) {
    rhs[i] = form_inner(rem, gen[i], m);
    for (int j = i; j < 7; ++j) {
      gram(i, j) = form_inner(gen[i], gen[j], m);
      gram(j, i) = gram(i, j);
    }
  }
  Vec x = gram.ldlt().solve(rhs);
  AltForm b7(7, 3);
  for (int i = 0; i < 7; ++i) b7 += gen[i] * x[i];
  AltForm b27 = rem - b7;

  DecompReport rep;
  rep.components.push_back({"1", b1, 0.0});
  rep.components.push_back({"7", b7, std::abs(form_inner(b7, s.phi(), m))});
  double wedge_defect = std::max(form_norm(wedge(s.phi(), b27), m),
                                 form_norm(wedge(s.psi(), b27), m));
  rep.components.push_back({"27", b27, wedge_defect});
  rep.recompose_residual = form_norm(b1 + b7 + b27 - b, m);
  double ortho = std::max({std::abs(form_inner(b1, b7, m)),
                           std::abs(form_inner(b1, b27, m)),
                           std::abs(form_inner(b7, b27, m))});
  rep.orthogonality_residual = ortho;
  return rep;
}

Mat g2_frame(const CrossStructure7& s, const Vec& u, const Vec& v,
             const Vec& w) {
  auto unit = [&](const Vec& a) { return std::abs(s.norm(a) - 1.0) <= kTol; };
  bool ok = unit(u) && unit(v) && unit(w) && std::abs(s.inner(u, v)) <= kTol &&
            std::abs(s.inner(u, w)) <= kTol && std::abs(s.inner(v, w)) <= kTol &&
            std::abs(s.inner(s.cross(u, v), w)) <= kTol;
  if (!ok)
    fail("NotAdmissibleTriple",
         "(u,v,w) must be orthonormal with <u x v, w> = 0");
  Mat g(7, 7);
  g.col(0) = u;
  g.col(1) = v;
  g.col(2) = s.cross(u, v);
  g.col(3) = w;
  g.col(4) = s.cross(w, u);
  g.col(5) = s.cross(w, v);
  g.col(6) = s.cross(w, s.cross(u, v));
  return g;
}

TangentSU3 tangent_su3(const CrossStructure7& s, const Vec& u) {
  if (std::abs(s.norm(u) - 1.0) > kTol) fail("NotUnit", "|u| must be 1");
  // g-orthogonal projection onto u-perp and the map v -> u x v.
  Mat P = Mat::Identity(7, 7) - u * (s.metric().matrix() * u).transpose();
  Mat J(7, 7);
  for (int i = 0; i < 7; ++i) J.col(i) = s.cross(u, Vec::Unit(7, i));
  TangentSU3 out{pullback(contract(u, s.phi()), P), J, pullback(s.phi(), P),
                 pullback(-contract(u, s.psi()), P)};
  return out;
}

namespace {

double calibration_or_throw(const CrossStructure7& s, const Vec& u,
                            const Vec& v, const Vec& w) {
  double c = s.phi_eval(u, v, w);
  double scale = s.norm(u) * s.norm(v) * s.norm(w);
  if (std::abs(c) <= kTol * std::max(1e-300, scale))
    fail("CalibrationVanishes", "phi vanishes on the given triple");
  return c;
}

}  // namespace

Vec associative_gradient(const CrossStructure7& s, const Vec& u, const Vec& v,
                         const Vec& w) {
  return s.associator(u, v, w) / calibration_or_throw(s, u, v, w);
}

double energy_density(const CrossStructure7& s, const Vec& u, const Vec& v,
                      const Vec& w) {
  double c = calibration_or_throw(s, u, v, w);
  const Vec vs[] = {u, v, w};
  return gram_volume(vs, s.metric()) / (c * c);
}

}  // namespace g2
}  // namespace calibra
