#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calibra/sampling.hpp"
#include "calibra/spinrep.hpp"
#include "calibra/verify.hpp"

using namespace calibra;

namespace {

Vec e7(int paper_label) { return Vec::Unit(7, paper_label - 1); }
Vec e8(int i) { return Vec::Unit(8, i); }

}  // namespace

TEST_CASE("gamma7 matrix blocks") {
  g2::CrossStructure7 s = g2::standard_phi7();
  Mat g = spinrep::gamma7_matrix(s, e7(1));

  // top-left zero, first column u, first row -u*.
  CHECK(g(0, 0) == 0.0);
  CHECK(g(1, 0) == 1.0);
  CHECK(g(0, 1) == -1.0);

  // A(e1) block: the skew matrix of v -> e1 x v.
  Mat A = g.block(1, 1, 7, 7);
  CHECK((A + A.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((Vec(A * e7(2)) - e7(3)).norm() == 0.0);
  CHECK((Vec(A * e7(4)) + e7(5)).norm() == 0.0);
  CHECK((Vec(A * e7(6)) + e7(7)).norm() == 0.0);
  CHECK(Vec(A * e7(1)).norm() == 0.0);

  CHECK(spinrep::gamma7_matrix(s, Vec(Vec::Zero(7))).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("gamma7 Clifford relations") {
  // The displayed matrix satisfies gamma(u)* + gamma(u) = 0 and the
  // two-argument relation gamma(u)*gamma(v) + gamma(v)*gamma(u) = 2<u,v>;
  // with u = v this reads gamma(u)*gamma(u) = |u|^2 (the printed constant 2
  // in the source belongs to the polarized form).
  g2::CrossStructure7 s = g2::standard_phi7();
  Sampler rng(3);
  for (int t = 0; t < 50; ++t) {
    Vec u = rng.vector(7), v = rng.vector(7);
    Mat gu = spinrep::gamma7_matrix(s, u);
    Mat gv = spinrep::gamma7_matrix(s, v);
    CHECK((gu + gu.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    Mat poly = gu.transpose() * gv + gv.transpose() * gu -
               2.0 * u.dot(v) * Mat::Identity(8, 8);
    CHECK(poly.cwiseAbs().maxCoeff() < 1e-12 * u.norm() * v.norm());
    Mat sq = gu.transpose() * gu - u.squaredNorm() * Mat::Identity(8, 8);
    CHECK(sq.cwiseAbs().maxCoeff() < 1e-12 * u.squaredNorm());
    // gamma(u)gamma(v) + gamma(v)gamma(u) = -2<u,v>
    Mat anti = gu * gv + gv * gu + 2.0 * u.dot(v) * Mat::Identity(8, 8);
    CHECK(anti.cwiseAbs().maxCoeff() < 1e-12 * u.norm() * v.norm());
  }
}

TEST_CASE("gammaV formula and examples") {
  g2::CrossStructure7 s = g2::standard_phi7();
  {
    spinrep::Spinor7 r = spinrep::gammaV(s, e7(1), {1.0, Vec::Zero(7)});
    CHECK(r.lambda == 0.0);
    CHECK((r.v - e7(1)).norm() == 0.0);
  }
  {
    spinrep::Spinor7 r = spinrep::gammaV(s, e7(1), {0.0, e7(2)});
    CHECK(r.lambda == 0.0);
    CHECK((r.v - e7(3)).norm() == 0.0);
  }
  // gammaV agrees with the gamma7 matrix
  Sampler rng(5);
  for (int t = 0; t < 50; ++t) {
    Vec u = rng.vector(7);
    spinrep::Spinor7 sp{rng.gauss(), rng.vector(7)};
    Vec lhs = spinrep::gammaV(s, u, sp).to_r8();
    Vec rhs = spinrep::gamma7_matrix(s, u) * sp.to_r8();
    CHECK((lhs - rhs).norm() < 1e-12 * rhs.norm());
  }
}

TEST_CASE("gammaV bracket identity") {
  g2::CrossStructure7 s = g2::standard_phi7();
  Sampler rng(7);
  for (int t = 0; t < 200; ++t) {
    Vec u = rng.vector(7), v = rng.vector(7), w = rng.vector(7);
    double mu = rng.gauss();
    spinrep::Spinor7 sp{mu, w};
    spinrep::Spinor7 lhs = spinrep::gammaV(s, u, spinrep::gammaV(s, v, sp));
    lhs.lambda += s.inner(u, v) * mu;
    lhs.v += s.inner(u, v) * w;
    spinrep::Spinor7 rhs = spinrep::gammaV(s, s.cross(u, v), sp);
    rhs.v -= 2.0 * s.associator(u, v, w);
    CHECK(std::abs(lhs.lambda - rhs.lambda) < 1e-10);
    CHECK((lhs.v - rhs.v).norm() < 1e-10);
  }
}

TEST_CASE("volume element gamma(e7)...gamma(e1) = -1") {
  g2::CrossStructure7 s = g2::standard_phi7();
  Mat prod = Mat::Identity(8, 8);
  for (int label = 1; label <= 7; ++label)
    prod = spinrep::gamma7_matrix(s, e7(label)) * prod;
  CHECK((prod + Mat::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("m product") {
  spin7::CayleyStructure8 c = spin7::standard_Phi8();
  Sampler rng(9);
  {
    Vec u = rng.vector(8);
    spinrep::SpinorPlus m = spinrep::m_product(c, u, u);
    CHECK(m.lambda() == doctest::Approx(u.squaredNorm()).epsilon(1e-14));
    CHECK(form_norm(m.omega(), c.metric()) < 1e-12 * u.squaredNorm());
  }
  {
    spinrep::SpinorPlus m = spinrep::m_product(c, e8(0), e8(1));
    CHECK(m.lambda() == 0.0);
    AltForm want(8, 2);
    want.add_term({2, 3}, 0.5)
        .add_term({4, 5}, -0.5)
        .add_term({6, 7}, -0.5)
        .add_term({0, 1}, 0.5);
    CHECK((m.omega() - want).sup_norm() < 1e-14);
    CHECK(m.projection_residual() < 1e-14);
  }
  for (int t = 0; t < 200; ++t) {
    Vec u = rng.vector(8), v = rng.vector(8);
    spinrep::SpinorPlus m = spinrep::m_product(c, u, v);
    CHECK(m.projection_residual() < 1e-10 * u.norm() * v.norm());
    CHECK(std::abs(spinrep::spinor_norm(c, m) - u.norm() * v.norm()) <
          1e-10 * u.norm() * v.norm());
  }
}

TEST_CASE("gamma8 and the adjoint relation") {
  spin7::CayleyStructure8 c = spin7::standard_Phi8();
  {
    spinrep::SpinorMinus out =
        spinrep::gamma8(c, e8(0), spinrep::SpinorPlus(c, 1.0, AltForm(8, 2)));
    CHECK((out.covector - e8(0)).norm() == 0.0);
  }
  Sampler rng(11);
  for (int t = 0; t < 100; ++t) {
    Vec e = rng.unit_vector(8, c.metric());
    Vec v = rng.vector(8);
    spinrep::SpinorMinus out =
        spinrep::gamma8(c, e, spinrep::m_product(c, e, v));
    CHECK((c.metric().sharp(out.covector) - v).norm() < 1e-10 * v.norm());

    // adjoint roundtrip gamma8_adjoint(u, v*) = m(u, v)
    Vec u = rng.vector(8);
    spinrep::SpinorPlus lhs =
        spinrep::gamma8_adjoint(c, u, spinrep::SpinorMinus{c.metric().flat(v)});
    spinrep::SpinorPlus rhs = spinrep::m_product(c, u, v);
    CHECK(std::abs(lhs.lambda() - rhs.lambda()) < 1e-12);
    CHECK((lhs.omega() - rhs.omega()).sup_norm() < 1e-12);
  }
}

TEST_CASE("tau and chi") {
  spin7::CayleyStructure8 c = spin7::standard_Phi8();
  {
    spinrep::SpinorPlus t = spinrep::tau(c, e8(0), e8(1), e8(2), e8(3));
    CHECK(t.lambda() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(form_norm(t.omega(), c.metric()) < 1e-14);
  }
  {
    spinrep::SpinorPlus t = spinrep::tau(c, e8(1), e8(1), e8(2), e8(3));
    CHECK(std::abs(t.lambda()) < 1e-14);
    CHECK(form_norm(t.omega(), c.metric()) < 1e-14);
  }
  Sampler rng(13);
  for (int t2 = 0; t2 < 100; ++t2) {
    // random orthonormal 4-tuple: Phi^2 + |chi|^2 = 1
    std::vector<Vec> on;
    while (on.size() < 4) {
      Vec cand = rng.vector(8);
      for (const Vec& b : on) cand -= c.inner(b, cand) * b;
      if (c.norm(cand) < 1e-3) continue;
      on.push_back(cand / c.norm(cand));
    }
    spinrep::SpinorPlus t = spinrep::tau(c, on[0], on[1], on[2], on[3]);
    double total = t.lambda() * t.lambda() +
                   std::pow(form_norm(t.omega(), c.metric()), 2);
    CHECK(std::abs(total - 1.0) < 1e-10);
    CHECK(std::abs(t.lambda() - c.Phi_eval(on[0], on[1], on[2], on[3])) <
          1e-10);
  }
}

TEST_CASE("spin suite") {
  spin7::CayleyStructure8 c = spin7::standard_Phi8();
  verify::SuiteResult r = verify::run_suite8("spin", c, 42, 200);
  CHECK(r.pass);
}
