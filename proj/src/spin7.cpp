#include "calibra/spin7.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "calibra/sampling.hpp"

namespace calibra {
namespace spin7 {

namespace {

constexpr double kTol = 1e-9;
constexpr double kClassifyTol = 1e-8;
constexpr double kEigZero = 1e-10;

double top_coeff(const AltForm& a) {
  return a.coeff((Mask{1} << a.dim()) - 1);
}

/// Index of the pair i<j among the 28 pairs of {0..7}.
struct PairIndex {
  std::array<std::array<int, 8>, 8> at{};
  std::array<std::pair<int, int>, 28> pair{};
  PairIndex() {
    int n = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        at[i][j] = at[j][i] = n;
        pair[n] = {i, j};
        ++n;
      }
  }
};

const PairIndex& pair_index() {
  static const PairIndex p;
  return p;
}

/// iota(e_j)iota(e_i)Phi for the 28 basis pairs and the symmetric matrix
/// B[(ij),(kl)] = (T_ij ^ T_kl ^ Phi) / e^{0..7}; everything quadratic in
/// Phi used by certification and recovery reads from here.
struct PairTable {
  std::vector<AltForm> T;  // 28 entries
  Mat B;                   // 28 x 28

  explicit PairTable(const AltForm& Phi) : B(28, 28) {
    const PairIndex& idx = pair_index();
    T.reserve(28);
    for (int n = 0; n < 28; ++n) {
      auto [i, j] = idx.pair[n];
      T.push_back(contract(Vec::Unit(8, j), contract(Vec::Unit(8, i), Phi)));
    }
    for (int a = 0; a < 28; ++a)
      for (int b = a; b < 28; ++b) {
        B(a, b) = top_coeff(wedge(wedge(T[a], T[b]), Phi));
        B(b, a) = B(a, b);
      }
  }

  /// g(e_a,e_b;e_c,e_d) up to the fixed normalization, with pair signs.
  double q(int a, int b, int c, int d) const {
    if (a == b || c == d) return 0.0;
    const PairIndex& idx = pair_index();
    double sign = (a < b ? 1.0 : -1.0) * (c < d ? 1.0 : -1.0);
    return sign * B(idx.at[a][b], idx.at[c][d]);
  }
};

double quad_pair(const PairTable& t, const Vec& u, const Vec& v) {
  // B(u^v, u^v) expanded over basis pairs.
  const PairIndex& idx = pair_index();
  double acc = 0.0;
  Vec uv(28);
  for (int n = 0; n < 28; ++n) {
    auto [i, j] = idx.pair[n];
    uv[n] = u[i] * v[j] - u[j] * v[i];
  }
  for (int a = 0; a < 28; ++a) {
    if (uv[a] == 0.0) continue;
    for (int b = 0; b < 28; ++b) acc += uv[a] * uv[b] * t.B(a, b);
  }
  return acc;
}

std::vector<Vec> quadratic_spanning_set(int dim) {
  std::vector<Vec> set;
  for (int i = 0; i < dim; ++i) set.push_back(Vec::Unit(dim, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      set.push_back(Vec::Unit(dim, i) + Vec::Unit(dim, j));
  return set;
}

std::vector<Vec> orthonormalize(const Metric& m, std::vector<Vec> vs) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::size_t best = k;
    for (std::size_t j = k + 1; j < vs.size(); ++j)
      if (m.norm(vs[j]) > m.norm(vs[best])) best = j;
    std::swap(vs[k], vs[best]);
    double n = m.norm(vs[k]);
    if (n <= 1e-12) fail("DependentBasis", "basis is linearly dependent");
    vs[k] /= n;
    for (std::size_t j = k + 1; j < vs.size(); ++j)
      vs[j] -= m.inner(vs[k], vs[j]) * vs[k];
    out.push_back(vs[k]);
  }
  return out;
}

/// Metric-orthonormal frame with e in slot 0, filled from the coordinate
/// basis; in-order Gram-Schmidt, dropping the direction e absorbs.
std::vector<Vec> frame_with_unit(const Metric& m, const Vec& e) {
  std::vector<Vec> vs{e};
  for (int i = 0; i < 8; ++i) vs.push_back(Vec::Unit(8, i));
  std::vector<Vec> out;
  for (std::size_t k = 0; k < vs.size() && out.size() < 8; ++k) {
    Vec v = vs[k];
    for (const Vec& b : out) v -= m.inner(b, v) * b;
    double n = m.norm(v);
    if (n <= 1e-6) continue;
    out.push_back(v / n);
  }
  if (out.size() != 8) fail("DependentBasis", "could not complete frame");
  return out;
}

}  // namespace

AltForm standard_Phi0() {
  AltForm Phi(8, 4);
  Phi.add_term({0, 1, 2, 3}, 1.0)
      .add_term({0, 1, 4, 5}, -1.0)
      .add_term({0, 1, 6, 7}, -1.0)
      .add_term({0, 2, 4, 6}, -1.0)
      .add_term({0, 2, 5, 7}, 1.0)
      .add_term({0, 3, 4, 7}, -1.0)
      .add_term({0, 3, 5, 6}, -1.0)
      .add_term({4, 5, 6, 7}, 1.0)
      .add_term({2, 3, 6, 7}, -1.0)
      .add_term({2, 3, 4, 5}, -1.0)
      .add_term({1, 3, 5, 7}, -1.0)
      .add_term({1, 3, 4, 6}, 1.0)
      .add_term({1, 2, 5, 6}, -1.0)
      .add_term({1, 2, 4, 7}, -1.0);
  return Phi;
}

CayleyStructure8::CayleyStructure8(Metric m, Orientation o, AltForm Phi)
    : metric_(std::move(m)),
      orientation_(std::move(o)),
      Phi_(std::move(Phi)),
      dvol_(8, 8) {
  if (metric_.dim() != 8 || Phi_.dim() != 8 || Phi_.degree() != 4)
    fail("DimensionMismatch", "CayleyStructure8 wants a 4-form on dim 8");
  dvol_ = volume_form(metric_, orientation_);
  const double dv = top_coeff(dvol_);

  // Certificate: iota(v)iota(u)Phi ^ iota(v)iota(u)Phi ^ Phi = 6|u^v|^2 dvol
  // over pairs from the spanning set.
  PairTable table(Phi_);
  const std::vector<Vec> span = quadratic_spanning_set(8);
  for (std::size_t a = 0; a < span.size(); ++a)
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      const Vec &u = span[a], &v = span[b];
      double lhs = quad_pair(table, u, v) / dv;
      double gram = metric_.inner(u, u) * metric_.inner(v, v) -
                    metric_.inner(u, v) * metric_.inner(u, v);
      if (std::abs(lhs - 6.0 * gram) > kTol * std::max(1.0, 6.0 * gram))
        fail("CompatibilityFailed",
             "Phi is not compatible with the given metric/orientation");
    }

  double wedge_sq = top_coeff(wedge(Phi_, Phi_)) / dv;
  eps_ = wedge_sq > 0 ? +1 : -1;
  AltForm dual_defect = star(Phi_) - static_cast<double>(eps_) * Phi_;
  if (form_norm(dual_defect, metric_) > kTol * std::max(1.0, form_norm(Phi_, metric_)))
    fail("CompatibilityFailed", "Phi is neither self-dual nor anti-self-dual");
}

CayleyStructure8 CayleyStructure8::standard() {
  return CayleyStructure8(Metric::identity(8), Orientation::standard(8),
                          standard_Phi0());
}

CayleyStructure8 standard_Phi8() { return CayleyStructure8::standard(); }

Vec CayleyStructure8::triple_cross(const Vec& u, const Vec& v,
                                   const Vec& w) const {
  if (u.size() != 8 || v.size() != 8 || w.size() != 8)
    fail("DimensionMismatch", "triple_cross");
  // (iota(w)iota(v)iota(u)Phi)(x) = Phi(u,v,w,x) = -Phi(x,u,v,w).
  AltForm one = contract(w, contract(v, contract(u, Phi_)));
  return -metric_.sharp(covector_of(one));
}

double CayleyStructure8::Phi_eval(const Vec& x, const Vec& u, const Vec& v,
                                  const Vec& w) const {
  const Vec vs[] = {x, u, v, w};
  return eval(Phi_, vs);
}

AltForm CayleyStructure8::pair_form(const Vec& u, const Vec& v) const {
  return contract(v, contract(u, Phi_));
}

AltForm CayleyStructure8::star(const AltForm& a) const {
  return hodge(a, metric_, orientation_);
}

ConditionCReport check_condition_C(const AltForm& Phi, int trials,
                                   std::uint64_t seed) {
  if (Phi.dim() != 8 || Phi.degree() != 4)
    fail("DimensionMismatch", "check_condition_C wants a 4-form on dim 8");
  if (trials < 1) fail("ParseError", "trials must be >= 1");

  ConditionCReport rep;
  rep.trials = trials;
  rep.seed = seed;
  Sampler rng(seed);
  const double scale = std::max(Phi.sup_norm(), 1e-300);

  // (a) nondegeneracy: the pair quadratic must be nonzero with one sign.
  PairTable table(Phi);
  double ref = 0.0;
  bool sign_ok = true;
  auto probe = [&](const Vec& u, const Vec& v) {
    double q = quad_pair(table, u, v);
    double g2 = u.squaredNorm() * v.squaredNorm() - std::pow(u.dot(v), 2);
    if (g2 < 1e-9) return;  // nearly dependent pair, skip
    if (std::abs(q) <= 1e-9 * scale * scale * scale * g2) {
      sign_ok = false;
      return;
    }
    if (ref == 0.0) ref = q;
    if (q * ref < 0) sign_ok = false;
  };
  for (int i = 0; i < 8 && sign_ok; ++i)
    for (int j = i + 1; j < 8 && sign_ok; ++j)
      probe(Vec::Unit(8, i), Vec::Unit(8, j));
  for (int t = 0; t < trials && sign_ok; ++t) probe(rng.vector(8), rng.vector(8));
  rep.nondegenerate = sign_ok;
  if (!sign_ok) {
    rep.witness = "pair form iota(v)iota(u)Phi^2 ^ Phi vanishes or flips sign";
    return rep;
  }

  // (b) kernel biconditional: for triples solving the two linear constraints
  // the functionals x -> (iota(w)iota(u)Phi ^ iota(x)iota(u)Phi ^ Phi) and
  // the v-counterpart must share their kernel, i.e. be proportional.
  auto functional = [&](const Vec& a, const Vec& w) {
    AltForm Ta = AltForm(8, 2);
    Ta = contract(w, contract(a, Phi));
    AltForm base = contract(a, Phi);  // 3-form iota(a)Phi
    Vec f(8);
    for (int k = 0; k < 8; ++k) {
      AltForm Tx = contract(Vec::Unit(8, k), base);
      f[k] = top_coeff(wedge(wedge(Ta, Tx), Phi));
    }
    return f;
  };

  rep.biconditional = true;
  for (int t = 0; t < trials; ++t) {
    Vec u = rng.vector(8), v = rng.vector(8);
    // Solve eq:cayley1 for w: two linear constraints.
    Vec c1 = functional(u, v);  // row: w -> iota(v)iota(u)Phi ^ iota(w)iota(u)Phi ^ Phi
    Vec c2 = functional(v, u);
    Mat J(2, 8);
    J.row(0) = c1;
    J.row(1) = c2;
    Vec w0 = rng.vector(8);
    Mat JJt = J * J.transpose();
    if (std::abs(JJt.determinant()) < 1e-18) continue;
    Vec w = w0 - J.transpose() * JJt.ldlt().solve(J * w0);
    Mat indep(8, 3);
    indep.col(0) = u;
    indep.col(1) = v;
    indep.col(2) = w;
    if (indep.jacobiSvd().singularValues().minCoeff() < 1e-6) continue;

    Vec L1 = functional(u, w);
    Vec L2 = functional(v, w);
    double n1 = L1.norm(), n2 = L2.norm();
    double defect;
    if (n1 < 1e-9 * scale || n2 < 1e-9 * scale) {
      defect = (n1 + n2 < 2e-9 * scale) ? 0.0 : 1.0;
    } else {
      // proportionality defect of the normalized functionals
      Vec a = L1 / n1, b = L2 / n2;
      defect = std::min((a - b).norm(), (a + b).norm());
    }
    rep.worst_defect = std::max(rep.worst_defect, defect);
    if (defect > 1e-7) {
      rep.biconditional = false;
      std::ostringstream os;
      os << "kernel biconditional fails at trial " << t << " (defect " << defect
         << ")";
      rep.witness = os.str();
      return rep;
    }
  }
  return rep;
}

CayleyStructure8 recover_metric_from_Phi(const AltForm& Phi) {
  if (Phi.dim() != 8 || Phi.degree() != 4)
    fail("DimensionMismatch", "recover_metric_from_Phi wants a 4-form on dim 8");
  PairTable table(Phi);

  // Fix the reference volume Omega = s e^{0..7} from the nondegeneracy sign.
  double dmax = table.B.diagonal().cwiseAbs().maxCoeff();
  if (dmax <= 0.0) fail("NotNondegenerate", "pair form of Phi vanishes");
  double s = table.B(0, 0) > 0 ? 1.0 : -1.0;
  for (int n = 0; n < 28; ++n) {
    double d = table.B(n, n);
    if (std::abs(d) <= kEigZero * dmax || d * s < 0)
      fail("NotNondegenerate",
           "pair form of Phi is singular or of mixed sign on basis pairs");
  }

  // g1(u,v;w,x) = (iota(v)iota(u)Phi ^ iota(x)iota(w)Phi ^ Phi) / (6 Omega).
  auto g1 = [&](int a, int b, int c, int d) {
    return table.q(a, b, c, d) * s / 6.0;
  };
  auto det_lambda = [&](int u, int v, int w) {
    return g1(u, v, u, v) * g1(u, w, u, w) - g1(u, v, u, w) * g1(u, v, u, w);
  };
  auto det_A = [&](int u, int v, int w) {
    Eigen::Matrix3d A;
    A << g1(v, w, v, w), g1(v, w, w, u), g1(v, w, u, v),
         g1(w, u, v, w), g1(w, u, w, u), g1(w, u, u, v),
         g1(u, v, v, w), g1(u, v, w, u), g1(u, v, u, v);
    return A.determinant();
  };

  // Candidate norm (eq:Wnorm) and inner product (eq:Winner); the value must
  // not depend on the auxiliary choices (Lemma 7.7 ratio independence), so
  // the spread across well-conditioned choices is checked explicitly.
  const double ratio_tol = 1e-6;
  Mat G1(8, 8);
  for (int i = 0; i < 8; ++i) {
    double best_det = 0.0;
    std::vector<std::pair<double, double>> candidates;  // (detA, value)
    for (int v = 0; v < 8; ++v)
      for (int w = v + 1; w < 8; ++w) {
        if (v == i || w == i) continue;
        double dA = det_A(i, v, w);
        best_det = std::max(best_det, dA);
        if (dA > 0) candidates.push_back({dA, det_lambda(i, v, w) / std::sqrt(dA)});
      }
    if (best_det <= 0)
      fail("NotNondegenerate", "A(u,v,w) fails positivity for basis triples");
    double value = 0.0;
    for (auto& [dA, val] : candidates)
      if (dA == best_det) value = val;
    for (auto& [dA, val] : candidates) {
      if (dA < 1e-3 * best_det) continue;
      if (std::abs(val - value) > ratio_tol * std::max(1.0, std::abs(value)))
        fail("RatioInconsistent",
             "eq:detLA ratios disagree: Phi is not a Cayley form");
    }
    G1(i, i) = value;
  }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      double best_det = 0.0;
      std::vector<std::pair<double, double>> candidates;
      for (int w = 0; w < 8; ++w) {
        if (w == i || w == j) continue;
        double dA = det_A(i, j, w);
        best_det = std::max(best_det, dA);
        if (dA > 0) {
          double val = (g1(i, w, j, w) * g1(i, j, i, j) -
                        g1(i, j, i, w) * g1(i, j, j, w)) /
                       std::sqrt(dA);
          candidates.push_back({dA, val});
        }
      }
      if (best_det <= 0)
        fail("NotNondegenerate", "A(u,v,w) fails positivity for basis triples");
      double value = 0.0;
      for (auto& [dA, val] : candidates)
        if (dA == best_det) value = val;
      double scale = std::sqrt(std::abs(G1(i, i) * G1(j, j))) + 1.0;
      for (auto& [dA, val] : candidates) {
        if (dA < 1e-3 * best_det) continue;
        if (std::abs(val - value) > ratio_tol * scale)
          fail("RatioInconsistent",
               "eq:Winner values disagree: Phi is not a Cayley form");
      }
      G1(i, j) = G1(j, i) = value;
    }

  Eigen::SelfAdjointEigenSolver<Mat> eig(G1);
  if (eig.eigenvalues().minCoeff() <=
      kEigZero * eig.eigenvalues().cwiseAbs().maxCoeff())
    fail("NotNondegenerate", "candidate inner product is not positive definite");

  // dvol_1 = mu(1)^2 Omega with |Omega| = e^{0..7}; lambda = mu(1)^{1/6}
  // rescales so that eq:uvPhi holds with constant 6 (calibrated to
  // reproduce the identity metric on the standard fixture).
  double mu_sq = std::sqrt(G1.determinant());
  double lambda = std::pow(mu_sq, 1.0 / 12.0);
  Mat G = G1 / (lambda * lambda);

  Orientation o = Orientation::standard(8);
  if (s < 0) o = o.flipped();
  return CayleyStructure8(Metric(G), o, Phi);
}

Classification8 classify_cayley(const CayleyStructure8& c, const Subspace& sub) {
  if (sub.basis.size() != 4)
    fail("BadDimension", "classify_cayley wants a 4-dim subspace");
  for (const Vec& v : sub.basis)
    if (v.size() != 8) fail("DimensionMismatch", "basis vector dim != 8");
  std::vector<Vec> on = orthonormalize(c.metric(), sub.basis);
  Classification8 out;
  out.residual =
      std::max(0.0, 1.0 - std::abs(c.Phi_eval(on[0], on[1], on[2], on[3])));

  // Cross-check via closure: u x v x w must stay inside the span.
  Vec t = c.triple_cross(on[0], on[1], on[2]);
  Vec proj = Vec::Zero(8);
  for (const Vec& b : on) proj += c.inner(t, b) * b;
  double closure = c.norm(t - proj);

  out.kind = (out.residual <= kClassifyTol && closure <= kClassifyTol)
                 ? Kind8::Cayley
                 : Kind8::Generic;
  return out;
}

DecompReport decompose2_8(const CayleyStructure8& c, const AltForm& omega) {
  if (omega.dim() != 8 || omega.degree() != 2)
    fail("DimensionMismatch", "decompose2_8 wants a 2-form on dim 8");
  // The operator *(Phi ^ .) has spectrum {3 (x7), -1 (x21)} in the recovered
  // orientation for either sign of Phi (checked against the eigen oracle).
  AltForm w7 = (omega + c.star(wedge(c.Phi(), omega))) * 0.25;
  AltForm w21 = omega - w7;
  auto eig_residual = [&](const AltForm& w, double ev) {
    return form_norm(c.star(wedge(c.Phi(), w)) - ev * w, c.metric());
  };
  DecompReport rep;
  rep.components.push_back({"7", w7, eig_residual(w7, 3.0)});
  rep.components.push_back({"21", w21, eig_residual(w21, -1.0)});
  rep.recompose_residual = form_norm(w7 + w21 - omega, c.metric());
  rep.orthogonality_residual = std::abs(form_inner(w7, w21, c.metric()));
  return rep;
}

DecompReport decompose4_8(const CayleyStructure8& c, const AltForm& F) {
  if (F.dim() != 8 || F.degree() != 4)
    fail("DimensionMismatch", "decompose4_8 wants a 4-form on dim 8");
  if (c.eps() != +1)
    fail("UnsupportedSignature",
         "decompose4_8 needs a positive (self-dual) Cayley structure");
  const Metric& m = c.metric();
  AltForm sF = c.star(F);
  AltForm F35 = (F - sF) * 0.5;
  AltForm sd = (F + sF) * 0.5;
  AltForm F1 = c.Phi() * (form_inner(sd, c.Phi(), m) / form_inner(c.Phi(), c.Phi(), m));

  // Lambda^4_7 span: e* ^ iota(u_i)psi_e - u_i* ^ phi_e for a unit e and an
  // orthonormal basis u_i of e-perp (the product-case generator family).
  Vec e = Vec::Unit(8, 0);
  e /= m.norm(e);
  UnitAlgebra ua(c, e);
  std::vector<Vec> frame = frame_with_unit(m, e);
  AltForm estar = flat_form(m, frame[0]);
  std::vector<AltForm> gen;
  for (int i = 1; i < 8; ++i) {
    const Vec& u = frame[i];
    gen.push_back(wedge(estar, contract(u, ua.psi_e())) -
                  wedge(flat_form(m, u), ua.phi_e()));
  }
  Mat gram(7, 7);
  Vec rhs(7);
  AltForm rem = sd - F1;
  for (int i = 0; i < 7; ++i) {
    rhs[i] = form_inner(rem, gen[i], m);
    for (int j = i; j < 7; ++j) {
      gram(i, j) = form_inner(gen[i], gen[j], m);
      gram(j, i) = gram(i, j);
    }
  }
  Vec x = gram.ldlt().solve(rhs);
  AltForm F7(8, 4);
  for (int i = 0; i < 7; ++i) F7 += gen[i] * x[i];
  AltForm F27 = rem - F7;

  DecompReport rep;
  rep.components.push_back({"1", F1, 0.0});
  rep.components.push_back(
      {"7", F7, form_norm(c.star(F7) - F7, m)});
  double r27 = std::max(form_norm(c.star(F27) - F27, m),
                        std::abs(form_inner(F27, c.Phi(), m)));
  for (const AltForm& g : gen)
    r27 = std::max(r27, std::abs(form_inner(F27, g, m)) / std::max(1.0, form_norm(g, m)));
  rep.components.push_back({"27", F27, r27});
  rep.components.push_back({"35", F35, form_norm(c.star(F35) + F35, m)});
  rep.recompose_residual = form_norm(F1 + F7 + F27 + F35 - F, m);
  double ortho = 0.0;
  for (std::size_t a = 0; a < rep.components.size(); ++a)
    for (std::size_t b = a + 1; b < rep.components.size(); ++b)
      ortho = std::max(ortho, std::abs(form_inner(rep.components[a].part,
                                                  rep.components[b].part, m)));
  rep.orthogonality_residual = ortho;
  return rep;
}

Mat spin7_frame(const CayleyStructure8& c, const Vec& u, const Vec& v,
                const Vec& w, const Vec& x) {
  auto unit = [&](const Vec& a) { return std::abs(c.norm(a) - 1.0) <= kTol; };
  Vec t = c.triple_cross(u, v, w);
  bool ok = unit(u) && unit(v) && unit(w) && unit(x) &&
            std::abs(c.inner(u, v)) <= kTol && std::abs(c.inner(u, w)) <= kTol &&
            std::abs(c.inner(v, w)) <= kTol && std::abs(c.inner(u, x)) <= kTol &&
            std::abs(c.inner(v, x)) <= kTol && std::abs(c.inner(w, x)) <= kTol &&
            std::abs(c.inner(t, x)) <= kTol;
  if (!ok)
    fail("NotAdmissibleTuple",
         "(u,v,w,x) must make u,v,w,u x v x w,x orthonormal");
  // a,b -> a x x x b is the cross product on x-perp; the columns mirror the
  // 7-dim frame construction with the canonical slot for x at position 0.
  auto cx = [&](const Vec& a, const Vec& b) { return c.triple_cross(a, x, b); };
  Mat g(8, 8);
  g.col(0) = x;
  g.col(1) = u;
  g.col(2) = v;
  g.col(3) = cx(u, v);
  g.col(4) = w;
  g.col(5) = cx(w, u);
  g.col(6) = cx(w, v);
  g.col(7) = cx(w, cx(u, v));
  return g;
}

UnitAlgebra::UnitAlgebra(CayleyStructure8 c, Vec e)
    : c_(std::move(c)), e_(std::move(e)), phi_e_(8, 3), psi_e_(8, 4) {
  if (e_.size() != 8) fail("DimensionMismatch", "unit vector dim != 8");
  if (std::abs(c_.norm(e_) - 1.0) > kTol) fail("NotUnit", "|e| must be 1");
  phi_e_ = contract(e_, c_.Phi());
  psi_e_ = (c_.Phi() - wedge(flat_form(c_.metric(), e_), phi_e_)) *
           static_cast<double>(c_.eps());
}

Vec UnitAlgebra::product(const Vec& u, const Vec& v) const {
  return c_.triple_cross(u, e_, v) + c_.inner(u, e_) * v +
         c_.inner(v, e_) * u - c_.inner(u, v) * e_;
}

Vec UnitAlgebra::conjugate(const Vec& u) const {
  return 2.0 * c_.inner(u, e_) * e_ - u;
}

g2::CrossStructure7 UnitAlgebra::slice7(Mat* basis) const {
  std::vector<Vec> on = frame_with_unit(c_.metric(), e_);
  Mat B(8, 7);
  for (int i = 0; i < 7; ++i) B.col(i) = on[i + 1];
  if (basis) *basis = B;

  AltForm phi7(7, 3);
  for (Mask mk : masks(7, 3)) {
    std::vector<int> ax = axes_of(mk);
    const Vec vs[] = {B.col(ax[0]), B.col(ax[1]), B.col(ax[2])};
    double cval = eval(phi_e_, vs);
    if (cval != 0.0) phi7.set(mk, cval);
  }
  // Induced orientation: iota(e)dvol evaluated on the chosen basis.
  AltForm slice_vol = contract(e_, c_.dvol());
  std::vector<Vec> cols;
  for (int i = 0; i < 7; ++i) cols.push_back(B.col(i));
  double orient = eval(slice_vol, cols);
  Orientation o = Orientation::standard(7);
  if (orient < 0) o = o.flipped();
  return g2::CrossStructure7(Metric::identity(7), o, phi7);
}

UnitAlgebra unit_reconstruction(const CayleyStructure8& c, const Vec& e) {
  return UnitAlgebra(c, e);
}

InstantonResidual instanton_residual(const CayleyStructure8& c,
                                     const AltForm& F) {
  if (F.dim() != 8 || F.degree() != 2)
    fail("DimensionMismatch", "instanton_residual wants a 2-form on dim 8");
  InstantonResidual out{(F + c.star(wedge(c.Phi(), F))) * 0.25, 0.0, false};
  double nf = form_norm(F, c.metric());
  double np = form_norm(out.pi7, c.metric());
  out.relative_residual = nf > 0 ? np / nf : 0.0;
  out.is_instanton = np <= kTol * std::max(1.0, nf);
  return out;
}

FuzzResult fuzz_wedge_square(int trials, std::uint64_t seed) {
  Sampler rng(seed);
  FuzzResult res;
  res.trials = trials;
  res.min_abs_wedge_square = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    AltForm Phi = rng.form(8, 4);
    double scale = std::max(Phi.sup_norm(), 1e-300);
    // Sampled nondegeneracy: x -> Phi(u,v,w,x) nonzero for random triples.
    bool nondeg = true;
    for (int k = 0; k < 32 && nondeg; ++k) {
      Vec u = rng.unit_vector(8, Metric::identity(8));
      Vec v = rng.unit_vector(8, Metric::identity(8));
      Vec w = rng.unit_vector(8, Metric::identity(8));
      Mat m(8, 3);
      m.col(0) = u;
      m.col(1) = v;
      m.col(2) = w;
      if (m.jacobiSvd().singularValues().minCoeff() < 1e-3) continue;
      AltForm f = contract(w, contract(v, contract(u, Phi)));
      if (covector_of(f).norm() <= 1e-9 * scale) nondeg = false;
    }
    if (!nondeg) continue;
    ++res.nondegenerate_samples;
    double wsq = std::abs(top_coeff(wedge(Phi, Phi))) / (scale * scale);
    res.min_abs_wedge_square = std::min(res.min_abs_wedge_square, wsq);
    if (wsq <= 1e-12 && !res.counterexample) res.counterexample = Phi;
  }
  if (res.nondegenerate_samples == 0) res.min_abs_wedge_square = 0.0;
  return res;
}

}  // namespace spin7
}  // namespace calibra
