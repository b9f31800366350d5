#include "calibra/subridge.hpp"

#include <cmath>
#include <functional>

namespace calibra {
namespace subridge {

namespace {

constexpr double kTol = 1e-9;

Mat standard_complex_structure(int dim) {
  Mat J = Mat::Zero(dim, dim);
  for (int k = 0; k < dim / 2; ++k) {
    J(2 * k + 1, 2 * k) = 1.0;   // J dx_k = dy_k direction
    J(2 * k, 2 * k + 1) = -1.0;  // J dy_k = -dx_k
  }
  return J;
}

/// Sum of dx_k ^ dy_k in interleaved coordinates.
AltForm standard_symplectic(int dim) {
  AltForm om(dim, 2);
  for (int k = 0; k < dim / 2; ++k) om.add_term({2 * k, 2 * k + 1}, 1.0);
  return om;
}

/// (1,1)-part of a 2-form: (tau + J*tau)/2.
AltForm part11(const AltForm& tau, const Mat& J) {
  return (tau + pullback(tau, J)) * 0.5;
}

/// (2,0)+(0,2)-part of a 2-form: (tau - J*tau)/2.
AltForm part20(const AltForm& tau, const Mat& J) {
  return (tau - pullback(tau, J)) * 0.5;
}

/// (2,1)+(1,2)-part of a 3-form: (3 beta + B beta)/4 where B sums J over
/// pairs of slots; B has eigenvalue -3 on (3,0)+(0,3) and +1 otherwise.
AltForm part21(const AltForm& beta, const Mat& J) {
  const int n = beta.dim();
  AltForm b(n, 3);
  for (Mask m : masks(n, 3)) {
    std::vector<int> ax = axes_of(m);
    Vec x = Vec::Unit(n, ax[0]), y = Vec::Unit(n, ax[1]), z = Vec::Unit(n, ax[2]);
    const Vec vs1[] = {Vec(J * x), Vec(J * y), z};
    const Vec vs2[] = {Vec(J * x), y, Vec(J * z)};
    const Vec vs3[] = {x, Vec(J * y), Vec(J * z)};
    double val = eval(beta, vs1) + eval(beta, vs2) + eval(beta, vs3);
    if (val != 0.0) b.set(m, val);
  }
  return (beta * 3.0 + b) * 0.25;
}

}  // namespace

SU3Structure SU3Structure::standard() {
  SU3Structure s;
  s.omega = standard_symplectic(6);
  s.J = standard_complex_structure(6);
  // dz1 ^ dz2 ^ dz3 in coordinates (x1,y1,x2,y2,x3,y3).
  s.theta_re = AltForm(6, 3);
  s.theta_re.add_term({0, 2, 4}, 1.0)
      .add_term({0, 3, 5}, -1.0)
      .add_term({1, 2, 5}, -1.0)
      .add_term({1, 3, 4}, -1.0);
  s.theta_im = AltForm(6, 3);
  s.theta_im.add_term({0, 2, 5}, 1.0)
      .add_term({0, 3, 4}, 1.0)
      .add_term({1, 2, 4}, 1.0)
      .add_term({1, 3, 5}, -1.0);
  return s;
}

SU4Structure SU4Structure::standard() {
  SU4Structure s;
  s.Omega = standard_symplectic(8);
  s.J = standard_complex_structure(8);
  s.Theta_re = AltForm(8, 4);
  s.Theta_re.add_term({0, 2, 4, 6}, 1.0)
      .add_term({1, 3, 5, 7}, 1.0)
      .add_term({0, 2, 5, 7}, -1.0)
      .add_term({1, 3, 4, 6}, -1.0)
      .add_term({0, 3, 4, 7}, -1.0)
      .add_term({1, 2, 5, 6}, -1.0)
      .add_term({0, 3, 5, 6}, -1.0)
      .add_term({1, 2, 4, 7}, -1.0);
  s.Theta_im = AltForm(8, 4);
  s.Theta_im.add_term({1, 2, 4, 6}, 1.0)
      .add_term({0, 3, 4, 6}, 1.0)
      .add_term({0, 2, 5, 6}, 1.0)
      .add_term({0, 2, 4, 7}, 1.0)
      .add_term({1, 3, 5, 6}, -1.0)
      .add_term({1, 3, 4, 7}, -1.0)
      .add_term({1, 2, 5, 7}, -1.0)
      .add_term({0, 3, 5, 7}, -1.0);
  return s;
}

namespace {

Mat compatible_metric(const AltForm& omega, const Mat& J) {
  const int n = static_cast<int>(J.rows());
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec vs[] = {Vec(Vec::Unit(n, i)), Vec(J * Vec::Unit(n, j))};
      g(i, j) = eval(omega, vs);
    }
  return g;
}

void validate_su(const AltForm& omega, const Mat& J, const AltForm& th_re,
                 const AltForm& th_im, int n, const char* err) {
  const int dim = 2 * n;
  if (omega.dim() != dim || omega.degree() != 2 || J.rows() != dim ||
      th_re.dim() != dim || th_re.degree() != n || th_im.dim() != dim ||
      th_im.degree() != n)
    fail(err, "wrong dimensions for an SU(n) structure");
  if (((J * J) + Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() > kTol)
    fail(err, "J^2 != -1");
  Mat g = compatible_metric(omega, J);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > kTol)
    fail(err, "omega(.,J.) is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (g + g.transpose()));
  if (eig.eigenvalues().minCoeff() <= 1e-12)
    fail(err, "omega(.,J.) is not positive definite");
  Metric m(0.5 * (g + g.transpose()));

  // theta must be an (n,0)-form: theta(Jx, ...) = i theta(x, ...).
  for (Mask mk : masks(dim, n)) {
    std::vector<int> ax = axes_of(mk);
    std::vector<Vec> vs;
    for (int a : ax) vs.push_back(Vec::Unit(dim, a));
    std::vector<Vec> jvs = vs;
    jvs[0] = J * vs[0];
    double re_j = eval(th_re, jvs), im_j = eval(th_im, jvs);
    double re = eval(th_re, vs), im = eval(th_im, vs);
    if (std::abs(re_j + im) > kTol || std::abs(im_j - re) > kTol)
      fail(err, "theta is not of type (n,0)");
  }
  double norm_sq = form_inner(th_re, th_re, m) + form_inner(th_im, th_im, m);
  if (std::abs(norm_sq - std::pow(2.0, n)) > 1e-7)
    fail(err, "theta does not have norm 2^{n/2}");
}

}  // namespace

Metric SU3Structure::metric() const { return Metric(compatible_metric(omega, J)); }
Metric SU4Structure::metric() const { return Metric(compatible_metric(Omega, J)); }

void validate(const SU3Structure& s) {
  validate_su(s.omega, s.J, s.theta_re, s.theta_im, 3, "InvalidSU3");
}

void validate(const SU4Structure& s) {
  validate_su(s.Omega, s.J, s.Theta_re, s.Theta_im, 4, "InvalidSU4");
}

g2::CrossStructure7 su3_to_cross(const SU3Structure& s) {
  validate(s);
  AltForm phi = wedge(AltForm::term(7, {0}), embed(s.omega, 7, 1)) +
                embed(s.theta_re, 7, 1);
  Mat g7 = Mat::Identity(7, 7);
  g7.block(1, 1, 6, 6) = s.metric().matrix();
  // Orientation from iota(e0)phi ^ iota(e0)phi ^ phi = e^0 ^ omega^3.
  AltForm ref = wedge(AltForm::term(7, {0}),
                      embed(wedge(wedge(s.omega, s.omega), s.omega), 7, 1));
  return g2::CrossStructure7(Metric(g7), Orientation{ref}, phi);
}

spin7::CayleyStructure8 su4_to_cayley(const SU4Structure& s) {
  validate(s);
  AltForm Phi = wedge(s.Omega, s.Omega) * 0.5 + s.Theta_re;
  AltForm ref = wedge(wedge(s.Omega, s.Omega), wedge(s.Omega, s.Omega));
  spin7::CayleyStructure8 c(s.metric(), Orientation{ref}, Phi);
  if (c.eps() != +1) fail("InvalidSU4", "induced Cayley form is not positive");
  return c;
}

spin7::CayleyStructure8 g2_to_cayley(const g2::CrossStructure7& s) {
  AltForm Phi = wedge(AltForm::term(8, {0}), embed(s.phi(), 8, 1)) +
                embed(s.psi(), 8, 1);
  Mat g8 = Mat::Identity(8, 8);
  g8.block(1, 1, 7, 7) = s.metric().matrix();
  Orientation o{wedge(AltForm::term(8, {0}), embed(s.orientation().reference, 8, 1))};
  return spin7::CayleyStructure8(Metric(g8), o, Phi);
}

namespace {

struct FamilyChecker {
  MembershipReport report;

  void run(const std::string& name, const std::vector<AltForm>& elements,
           const Metric& m, const std::function<double(const AltForm&)>& defect) {
    FamilyResult res{name, 0, 0.0};
    for (const AltForm& raw : elements) {
      double n = form_norm(raw, m);
      if (n < 1e-12) continue;  // degenerate generator, skip
      AltForm x = raw * (1.0 / n);
      res.max_residual = std::max(res.max_residual, defect(x));
      ++res.samples;
    }
    report.max_residual = std::max(report.max_residual, res.max_residual);
    report.families.push_back(res);
  }
};

/// Residual of membership in the span of the given generators (least squares).
double span_residual(const AltForm& x, const std::vector<AltForm>& gen,
                     const Metric& m) {
  const int n = static_cast<int>(gen.size());
  Mat gram(n, n);
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = form_inner(x, gen[i], m);
    for (int j = i; j < n; ++j) {
      gram(i, j) = form_inner(gen[i], gen[j], m);
      gram(j, i) = gram(i, j);
    }
  }
  Vec c = gram.ldlt().solve(rhs);
  AltForm fit(x.dim(), x.degree());
  for (int i = 0; i < n; ++i) fit += gen[i] * c[i];
  return form_norm(x - fit, m);
}

}  // namespace

MembershipReport su3_membership_checks(const SU3Structure& s) {
  g2::CrossStructure7 s7 = su3_to_cross(s);
  const Metric& m7 = s7.metric();
  Metric m6 = s.metric();
  Orientation o6 = Orientation{wedge(wedge(s.omega, s.omega), s.omega)};
  auto lift2 = [&](const AltForm& a) { return embed(a, 7, 1); };
  auto e0 = AltForm::term(7, {0});

  auto in_2_7 = [&](const AltForm& x) {
    return form_norm(g2::decompose2_7(s7, x).part("14"), m7);
  };
  auto in_2_14 = [&](const AltForm& x) {
    return form_norm(g2::decompose2_7(s7, x).part("7"), m7);
  };
  auto in_3_7 = [&](const AltForm& x) {
    DecompReport r = g2::decompose3_7(s7, x);
    return std::hypot(form_norm(r.part("1"), m7), form_norm(r.part("27"), m7));
  };
  auto in_3_27 = [&](const AltForm& x) {
    DecompReport r = g2::decompose3_7(s7, x);
    return std::hypot(form_norm(r.part("1"), m7), form_norm(r.part("7"), m7));
  };

  FamilyChecker fc;

  fc.run("L2_7: R omega", {lift2(s.omega)}, m7, in_2_7);
  {
    std::vector<AltForm> els;
    for (int i = 0; i < 6; ++i) {
      Vec u = Vec::Unit(6, i);
      els.push_back(wedge(e0, embed(flat_form(m6, u), 7, 1)) -
                    lift2(contract(u, s.theta_im)));
    }
    fc.run("L2_7: e0^u* - iota(u)Im theta", els, m7, in_2_7);
  }
  {
    std::vector<AltForm> els;
    for (Mask mk : masks(6, 2)) {
      AltForm tau(6, 2);
      tau.set(mk, 1.0);
      // primitive part: tau ^ omega ^ omega = 0.
      tau -= s.omega * (form_inner(tau, s.omega, m6) /
                        form_inner(s.omega, s.omega, m6));
      // The e^0-leg is +*(tau ^ Re theta) in our orientation convention
      // (probed against the Lambda^2_14 projector; the source's minus sign
      // tracks its opposite *-convention on W).
      AltForm alpha = hodge(wedge(tau, s.theta_re), m6, o6);
      els.push_back(lift2(tau) + wedge(e0, lift2(alpha)));
    }
    fc.run("L2_14: tau + e0^*(tau^Re theta)", els, m7, in_2_14);
  }
  fc.run("L3_7: R Im theta", {lift2(s.theta_im)}, m7, in_3_7);
  {
    std::vector<AltForm> els;
    for (int i = 0; i < 6; ++i) {
      Vec u = Vec::Unit(6, i);
      els.push_back(wedge(embed(flat_form(m6, u), 7, 1), lift2(s.omega)) -
                    wedge(e0, lift2(contract(u, s.theta_re))));
    }
    fc.run("L3_7: u*^omega - e0^iota(u)Re theta", els, m7, in_3_7);
  }
  fc.run("L3_27: 3 Re theta - 4 e0^omega",
         {lift2(s.theta_re) * 3.0 - wedge(e0, lift2(s.omega)) * 4.0}, m7,
         in_3_27);
  {
    std::vector<AltForm> els;
    for (Mask mk : masks(6, 2)) {
      AltForm tau(6, 2);
      tau.set(mk, 1.0);
      tau = part11(tau, s.J);
      tau -= s.omega * (form_inner(tau, s.omega, m6) /
                        form_inner(s.omega, s.omega, m6));
      els.push_back(wedge(e0, lift2(tau)));
    }
    fc.run("L3_27: e0^tau, tau primitive (1,1)", els, m7, in_3_27);
  }
  {
    // beta in (2,1)+(1,2) with beta ^ omega = 0: subtract alpha ^ omega where
    // alpha solves alpha ^ omega^2 = beta ^ omega.
    Mat wedge_map(6, 6);  // alpha_j -> coefficients of alpha_j ^ omega^2
    AltForm om2 = wedge(s.omega, s.omega);
    std::vector<Mask> m5 = masks(6, 5);
    for (int j = 0; j < 6; ++j) {
      AltForm col = wedge(AltForm::term(6, {j}), om2);
      for (int r = 0; r < 6; ++r) wedge_map(r, j) = col.coeff(m5[r]);
    }
    Eigen::PartialPivLU<Mat> lu(wedge_map);
    std::vector<AltForm> els;
    for (Mask mk : masks(6, 3)) {
      AltForm beta(6, 3);
      beta.set(mk, 1.0);
      beta = part21(beta, s.J);
      AltForm bw = wedge(beta, s.omega);
      Vec rhs(6);
      for (int r = 0; r < 6; ++r) rhs[r] = bw.coeff(m5[r]);
      Vec a = lu.solve(rhs);
      beta -= wedge(covector_form(a), s.omega);
      els.push_back(lift2(beta));
    }
    fc.run("L3_27: primitive (2,1)+(1,2)", els, m7, in_3_27);
  }
  {
    std::vector<AltForm> els;
    for (int i = 0; i < 6; ++i) {
      Vec u = Vec::Unit(6, i);
      els.push_back(wedge(embed(flat_form(m6, u), 7, 1), lift2(s.omega)) +
                    wedge(e0, lift2(contract(u, s.theta_re))));
    }
    fc.run("L3_27: u*^omega + e0^iota(u)Re theta", els, m7, in_3_27);
  }
  return fc.report;
}

MembershipReport su4_membership_checks(const SU4Structure& s) {
  spin7::CayleyStructure8 c = su4_to_cayley(s);
  const Metric& m = c.metric();
  Orientation o8 = c.orientation();

  auto in_2_7 = [&](const AltForm& x) {
    return form_norm(spin7::decompose2_8(c, x).part("21"), m);
  };
  auto in_2_21 = [&](const AltForm& x) {
    return form_norm(spin7::decompose2_8(c, x).part("7"), m);
  };
  auto theta_op = [&](const AltForm& t) {
    return hodge(wedge(s.Theta_re, t), m, o8);
  };

  FamilyChecker fc;
  fc.run("L2_7: R Omega", {s.Omega}, m, in_2_7);
  {
    std::vector<AltForm> plus, minus;
    for (Mask mk : masks(8, 2)) {
      AltForm tau(8, 2);
      tau.set(mk, 1.0);
      tau = part20(tau, s.J);
      if (form_norm(tau, m) < 1e-12) continue;
      AltForm op = theta_op(tau);
      plus.push_back((op + tau * 2.0) * 0.25);
      minus.push_back((tau * 2.0 - op) * 0.25);
    }
    fc.run("L2_7: (2,0)+(0,2) with *(Re Theta^tau)=2tau", plus, m, in_2_7);
    fc.run("L2_21: (2,0)+(0,2) with *(Re Theta^tau)=-2tau", minus, m, in_2_21);
  }
  {
    std::vector<AltForm> els;
    for (Mask mk : masks(8, 2)) {
      AltForm tau(8, 2);
      tau.set(mk, 1.0);
      tau = part11(tau, s.J);
      tau -= s.Omega * (form_inner(tau, s.Omega, m) /
                        form_inner(s.Omega, s.Omega, m));
      els.push_back(tau);
    }
    fc.run("L2_21: su(4) = primitive (1,1)", els, m, in_2_21);
  }
  return fc.report;
}

MembershipReport g2_membership_checks(const g2::CrossStructure7& s) {
  spin7::CayleyStructure8 c = g2_to_cayley(s);
  const Metric& m8 = c.metric();
  const Metric& m7 = s.metric();
  auto lift = [&](const AltForm& a) { return embed(a, 8, 1); };
  auto e0 = AltForm::term(8, {0});
  auto star7 = [&](const AltForm& a) { return s.star(a); };

  auto in_2_7 = [&](const AltForm& x) {
    return form_norm(spin7::decompose2_8(c, x).part("21"), m8);
  };
  auto in_2_21 = [&](const AltForm& x) {
    return form_norm(spin7::decompose2_8(c, x).part("7"), m8);
  };
  std::vector<AltForm> l38_gen;
  for (int i = 0; i < 8; ++i)
    l38_gen.push_back(contract(Vec::Unit(8, i), c.Phi()));
  auto in_3_8 = [&](const AltForm& x) { return span_residual(x, l38_gen, m8); };
  auto in_3_48 = [&](const AltForm& x) {
    return form_norm(wedge(c.Phi(), x), m8);
  };
  auto part4 = [&](const AltForm& x, const char* keep) {
    DecompReport r = spin7::decompose4_8(c, x);
    double res = 0.0;
    for (const auto& comp : r.components)
      if (comp.name != keep)
        res = std::hypot(res, form_norm(comp.part, m8));
    return res;
  };

  FamilyChecker fc;
  {
    std::vector<AltForm> els;
    for (int i = 0; i < 7; ++i) {
      AltForm tau = contract(Vec::Unit(7, i), s.phi());  // Lambda^2_7 V
      els.push_back(wedge(e0, lift(star7(wedge(s.psi(), tau)))) +
                    lift(tau) * 3.0);
    }
    fc.run("L2_7 W: e0^*(psi^tau)+3tau", els, m8, in_2_7);
  }
  {
    std::vector<AltForm> els;
    for (Mask mk : masks(7, 2)) {
      AltForm tau(7, 2);
      tau.set(mk, 1.0);
      els.push_back(wedge(e0, lift(star7(wedge(s.psi(), tau)))) - lift(tau));
    }
    fc.run("L2_21 W: e0^*(psi^tau)-tau", els, m8, in_2_21);
  }
  {
    std::vector<AltForm> els{lift(s.phi())};
    for (int i = 0; i < 7; ++i) {
      Vec u = Vec::Unit(7, i);
      els.push_back(lift(contract(u, s.psi())) -
                    wedge(e0, lift(contract(u, s.phi()))));
    }
    fc.run("L3_8 W: R phi + {iota(u)psi - e0^iota(u)phi}", els, m8, in_3_8);
  }
  {
    std::vector<AltForm> els;
    for (Mask mk : masks(7, 2)) {
      AltForm tau(7, 2);
      tau.set(mk, 1.0);
      els.push_back(wedge(e0, lift(g2::decompose2_7(s, tau).part("14"))));
    }
    fc.run("L3_48 W: e0^L2_14", els, m8, in_3_48);
    els.clear();
    for (Mask mk : masks(7, 3)) {
      AltForm b(7, 3);
      b.set(mk, 1.0);
      els.push_back(lift(g2::decompose3_7(s, b).part("27")));
    }
    fc.run("L3_48 W: L3_27 V", els, m8, in_3_48);
    els.clear();
    for (int i = 0; i < 7; ++i) {
      Vec u = Vec::Unit(7, i);
      els.push_back(lift(contract(u, s.psi())) * 3.0 +
                    wedge(e0, lift(contract(u, s.phi()))) * 4.0);
    }
    fc.run("L3_48 W: 3iota(u)psi + 4e0^iota(u)phi", els, m8, in_3_48);
  }
  {
    std::vector<AltForm> els;
    for (int i = 0; i < 7; ++i) {
      Vec u = Vec::Unit(7, i);
      els.push_back(wedge(e0, lift(contract(u, s.psi()))) -
                    wedge(lift(flat_form(m7, u)), lift(s.phi())));
    }
    fc.run("L4_7 W: e0^iota(u)psi - u*^phi", els, m8,
           [&](const AltForm& x) { return part4(x, "7"); });
  }
  {
    std::vector<AltForm> els27, els35;
    for (Mask mk : masks(7, 3)) {
      AltForm b(7, 3);
      b.set(mk, 1.0);
      AltForm b27 = g2::decompose3_7(s, b).part("27");
      els27.push_back(wedge(e0, lift(b27)) + lift(star7(b27)));
      els35.push_back(wedge(e0, lift(b)) - lift(star7(b)));
    }
    fc.run("L4_27 W: e0^beta + *beta, beta in L3_27", els27, m8,
           [&](const AltForm& x) { return part4(x, "27"); });
    fc.run("L4_35 W: e0^beta - *beta", els35, m8,
           [&](const AltForm& x) { return part4(x, "35"); });
  }
  return fc.report;
}

}  // namespace subridge
}  // namespace calibra
