#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calibra/g2.hpp"
#include "calibra/sampling.hpp"

using namespace calibra;
using g2::CrossStructure7;

namespace {

constexpr double kTol = 1e-9;

Vec e(int i) { return Vec::Unit(7, i); }

// Paper labels run 1..7; internal axes are 0-based.
Vec pe(int label) { return Vec::Unit(7, label - 1); }

}  // namespace

TEST_CASE("standard fixture: phi0 and psi0 coefficient tables") {
  CrossStructure7 s = g2::standard_phi7();
  CHECK(s.phi().term_count() == 7);
  CHECK(s.psi().term_count() == 7);
  for (const auto& [m, c] : s.phi().terms()) CHECK(std::abs(c) == 1.0);
  for (const auto& [m, c] : s.psi().terms()) CHECK(std::abs(c) == 1.0);
  CHECK((s.psi() - s.star(s.phi())).sup_norm() == 0.0);
}

TEST_CASE("cross product table") {
  CrossStructure7 s = g2::standard_phi7();
  CHECK((s.cross(pe(1), pe(2)) - pe(3)).norm() == 0.0);
  CHECK((s.cross(pe(1), pe(4)) + pe(5)).norm() == 0.0);
  Sampler rng(3);
  Vec u = rng.vector(7);
  CHECK(s.cross(u, u).norm() < 1e-12);

  // A(u) for u = e1 matches the displayed skew matrix.
  Mat A(7, 7);
  for (int i = 0; i < 7; ++i) A.col(i) = s.cross(pe(1), e(i));
  Mat want = Mat::Zero(7, 7);
  // columns: A e2=e3, A e3=-e2, A e4=-e5, A e5=e4, A e6=-e7, A e7=e6
  want(2, 1) = 1;
  want(1, 2) = -1;
  want(4, 3) = -1;
  want(3, 4) = 1;
  want(6, 5) = -1;
  want(5, 6) = 1;
  CHECK((A - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("associator and coassociator examples") {
  CrossStructure7 s = g2::standard_phi7();
  CHECK(s.associator(pe(1), pe(2), pe(3)).norm() == 0.0);
  CHECK((s.associator(pe(1), pe(2), pe(4)) + pe(7)).norm() == 0.0);

  Sampler rng(5);
  Vec u = rng.unit_vector(7, s.metric());
  Vec v = rng.vector(7);
  v -= s.inner(u, v) * u;
  v /= s.norm(v);
  CHECK(s.norm(s.associator(u, v, s.cross(u, v))) < 1e-12);

  CHECK(s.coassociator(pe(4), pe(5), pe(6), pe(7)).norm() < 1e-15);
  CHECK((s.coassociator(pe(1), pe(2), pe(3), pe(4)) - pe(4)).norm() == 0.0);
  Vec w = rng.vector(7);
  CHECK(s.norm(s.coassociator(u, v, u, w)) < 1e-12);
}

TEST_CASE("nondegeneracy test") {
  CHECK(g2::is_nondegenerate3(g2::standard_phi0()));
  CHECK_FALSE(g2::is_nondegenerate3(AltForm(7, 3)));
  AltForm phi0 = g2::standard_phi0();
  AltForm flipped(7, 3);
  for (const auto& [m, c] : phi0.terms()) flipped.set(m, std::abs(c));
  CHECK_FALSE(g2::is_nondegenerate3(flipped));
}

TEST_CASE("metric recovery: standard form gives the identity") {
  CrossStructure7 s = g2::recover_metric_from_phi(g2::standard_phi0());
  CHECK((s.metric().matrix() - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(s.orientation().sign() == 1.0);
}

TEST_CASE("metric recovery: pullback roundtrip") {
  Sampler rng(42);
  AltForm phi0 = g2::standard_phi0();
  for (int t = 0; t < 25; ++t) {
    Mat g = rng.general_linear(7, 10.0);
    CrossStructure7 s = g2::recover_metric_from_phi(pullback(phi0, g));
    Mat want = g.transpose() * g;
    double rel = (s.metric().matrix() - want).cwiseAbs().maxCoeff() /
                 want.cwiseAbs().maxCoeff();
    CHECK(rel < 1e-6);
  }
}

TEST_CASE("metric recovery: sign-flipped form is rejected") {
  AltForm phi0 = g2::standard_phi0();
  AltForm flipped(7, 3);
  for (const auto& [m, c] : phi0.terms()) flipped.set(m, std::abs(c));
  CHECK_THROWS_WITH_AS(g2::recover_metric_from_phi(flipped),
                       doctest::Contains("IndefiniteSignature"), Error);
  CHECK_THROWS_WITH_AS(g2::recover_metric_from_phi(AltForm(7, 3)),
                       doctest::Contains("NotNondegenerate"), Error);
}

TEST_CASE("subspace classification") {
  CrossStructure7 s = g2::standard_phi7();
  {
    Subspace sub{{pe(1), pe(2), pe(3)}};
    g2::Classification7 c = g2::classify_subspace7(s, sub);
    CHECK(c.kind == g2::Kind7::Associative);
    CHECK(c.residual < 1e-12);
  }
  {
    Subspace sub{{pe(4), pe(5), pe(6), pe(7)}};
    g2::Classification7 c = g2::classify_subspace7(s, sub);
    CHECK(c.kind == g2::Kind7::Coassociative);
    CHECK(c.residual < 1e-12);
  }
  {
    Subspace sub{{pe(1), pe(2), pe(4)}};
    g2::Classification7 c = g2::classify_subspace7(s, sub);
    CHECK(c.kind == g2::Kind7::Generic);
    CHECK(c.residual == doctest::Approx(1.0).epsilon(1e-12));
  }
  // scale invariance of the classification
  {
    Subspace sub{{1e-6 * pe(1), 1e6 * pe(2), pe(3)}};
    CHECK(g2::classify_subspace7(s, sub).kind == g2::Kind7::Associative);
  }
  {
    Subspace sub{{pe(1), pe(2)}};
    CHECK_THROWS_WITH_AS(g2::classify_subspace7(s, sub),
                         doctest::Contains("BadDimension"), Error);
  }
  {
    Subspace sub{{pe(1), pe(2), pe(1) + pe(2)}};
    CHECK_THROWS_WITH_AS(g2::classify_subspace7(s, sub),
                         doctest::Contains("DependentBasis"), Error);
  }
}

TEST_CASE("two-form decomposition against the eigen-projector oracle") {
  CrossStructure7 s = g2::standard_phi7();
  const Metric& m = s.metric();

  // Oracle: eigenprojection of the symmetric operator w -> *(phi ^ w).
  const std::vector<Mask>& basis = masks(7, 2);
  Mat op(21, 21);
  for (int j = 0; j < 21; ++j) {
    AltForm ej(7, 2);
    ej.set(basis[j], 1.0);
    AltForm img = s.star(wedge(s.phi(), ej));
    for (int i = 0; i < 21; ++i) op(i, j) = img.coeff(basis[i]);
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(op);
  Mat P7 = Mat::Zero(21, 21);
  for (int i = 0; i < 21; ++i)
    if (eig.eigenvalues()[i] > 0)
      P7 += eig.eigenvectors().col(i) * eig.eigenvectors().col(i).transpose();

  Sampler rng(7);
  for (int t = 0; t < 25; ++t) {
    AltForm w = rng.form(7, 2);
    DecompReport rep = g2::decompose2_7(s, w);
    Vec wv(21);
    for (int i = 0; i < 21; ++i) wv[i] = w.coeff(basis[i]);
    Vec w7 = P7 * wv;
    for (int i = 0; i < 21; ++i)
      CHECK(std::abs(rep.part("7").coeff(basis[i]) - w7[i]) < 1e-9);
    CHECK(rep.residual("7") < kTol);
    CHECK(rep.residual("14") < kTol);
    CHECK(rep.orthogonality_residual < 1e-8);
  }

  // iota(u)phi lies in Lambda^2_7; psi^w = 0 forces Lambda^2_14.
  AltForm iu = contract(pe(1), s.phi());
  DecompReport rep = g2::decompose2_7(s, iu);
  CHECK(form_norm(rep.part("14"), m) < 1e-12);
  CHECK(form_norm(rep.part("7") - iu, m) < 1e-12);
}

TEST_CASE("three-form decomposition") {
  CrossStructure7 s = g2::standard_phi7();
  const Metric& m = s.metric();
  {
    DecompReport rep = g2::decompose3_7(s, s.phi());
    CHECK(form_norm(rep.part("1") - s.phi(), m) < 1e-12);
    CHECK(form_norm(rep.part("7"), m) < 1e-12);
    CHECK(form_norm(rep.part("27"), m) < 1e-12);
  }
  {
    AltForm iu = contract(pe(1), s.psi());
    DecompReport rep = g2::decompose3_7(s, iu);
    CHECK(form_norm(rep.part("7") - iu, m) < 1e-12);
    CHECK(form_norm(rep.part("1"), m) < 1e-12);
    CHECK(form_norm(rep.part("27"), m) < 1e-12);
  }
  Sampler rng(11);
  for (int t = 0; t < 25; ++t) {
    AltForm b = rng.form(7, 3);
    DecompReport rep = g2::decompose3_7(s, b);
    CHECK(rep.recompose_residual < 1e-10);
    CHECK(rep.orthogonality_residual < 1e-8);
    CHECK(form_norm(wedge(s.phi(), rep.part("27")), m) < 1e-8);
    CHECK(form_norm(wedge(s.psi(), rep.part("27")), m) < 1e-8);
  }
}

TEST_CASE("g2 frame") {
  CrossStructure7 s = g2::standard_phi7();
  Mat g = g2::g2_frame(s, pe(1), pe(2), pe(4));
  CHECK((g - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_WITH_AS(g2::g2_frame(s, pe(1), pe(2), pe(3)),
                       doctest::Contains("NotAdmissibleTriple"), Error);

  Sampler rng(13);
  for (int t = 0; t < 25; ++t) {
    // random admissible triple: orthonormal u, v, then w orthogonal to
    // u, v, u x v.
    Vec u = rng.unit_vector(7, s.metric());
    Vec v = rng.vector(7);
    v -= s.inner(u, v) * u;
    v /= s.norm(v);
    Vec uv = s.cross(u, v);
    Vec w = rng.vector(7);
    w -= s.inner(u, w) * u + s.inner(v, w) * v + s.inner(uv, w) * uv;
    w /= s.norm(w);
    Mat f = g2::g2_frame(s, u, v, w);
    CHECK((f.transpose() * f - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() <
          kTol);
    CHECK((pullback(s.phi(), f) - s.phi()).sup_norm() < kTol);
  }
}

TEST_CASE("tangent SU(3) data") {
  CrossStructure7 s = g2::standard_phi7();
  g2::TangentSU3 t = g2::tangent_su3(s, pe(1));
  CHECK((Vec(t.J * pe(2)) - pe(3)).norm() == 0.0);
  CHECK(Vec(t.J * pe(1)).norm() == 0.0);
  AltForm want(7, 2);
  want.add_term({1, 2}, 1.0).add_term({3, 4}, -1.0).add_term({5, 6}, -1.0);
  CHECK((t.omega - want).sup_norm() < 1e-12);

  Sampler rng(17);
  for (int t2 = 0; t2 < 10; ++t2) {
    Vec u = rng.unit_vector(7, s.metric());
    g2::TangentSU3 d = g2::tangent_su3(s, u);
    // J^2 = -1 on u-perp
    Vec v = rng.vector(7);
    v -= s.inner(u, v) * u;
    CHECK((Vec(d.J * (d.J * v)) + v).norm() < 1e-9 * v.norm());
    // omega(., J.) is the induced metric
    Vec w = rng.vector(7);
    w -= s.inner(u, w) * u;
    const Vec vs[] = {v, Vec(d.J * w)};
    CHECK(std::abs(eval(d.omega, vs) - s.inner(v, w)) < 1e-9);
    // theta nonzero
    CHECK(form_norm(d.theta_re, s.metric()) > 0.5);
  }
  CHECK_THROWS_WITH_AS(g2::tangent_su3(s, 2.0 * pe(1)),
                       doctest::Contains("NotUnit"), Error);
}

TEST_CASE("associative gradient and energy density") {
  CrossStructure7 s = g2::standard_phi7();
  CHECK(g2::associative_gradient(s, pe(1), pe(2), pe(3)).norm() == 0.0);
  CHECK(g2::energy_density(s, pe(1), pe(2), pe(3)) == 1.0);

  Vec w = pe(4) + pe(3);
  CHECK(g2::energy_density(s, pe(1), pe(2), w) == doctest::Approx(2.0));
  CHECK((g2::associative_gradient(s, pe(1), pe(2), w) + pe(7)).norm() < 1e-12);

  CHECK_THROWS_WITH_AS(g2::energy_density(s, pe(1), pe(2), pe(4)),
                       doctest::Contains("CalibrationVanishes"), Error);

  // density >= 1 with equality iff associative (via eq:assocphi)
  Sampler rng(19);
  for (int t = 0; t < 50; ++t) {
    Vec u = rng.vector(7), v = rng.vector(7), x = rng.vector(7);
    double c = s.phi_eval(u, v, x);
    if (std::abs(c) < 1e-3) continue;
    double density = g2::energy_density(s, u, v, x);
    CHECK(density >= 1.0 - 1e-9);
    Vec grad = g2::associative_gradient(s, u, v, x);
    for (const Vec* a : {&u, &v, &x})
      CHECK(std::abs(s.inner(grad, *a)) < 1e-7 * s.norm(*a) * s.norm(grad) + 1e-9);
  }
}
