#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calibra/octonion.hpp"
#include "calibra/sampling.hpp"
#include "calibra/verify.hpp"

using namespace calibra;
using oct::NormedAlgebra8;
using oct::Octonion;

namespace {

Octonion unit_im(int paper_label) {
  return Octonion::imag(Vec::Unit(7, paper_label - 1));
}

Octonion rand_oct(Sampler& rng) {
  Octonion o;
  o.re = rng.gauss();
  o.im = rng.vector(7);
  return o;
}

}  // namespace

TEST_CASE("product table on imaginary units") {
  NormedAlgebra8 alg = NormedAlgebra8::standard();
  Octonion e1 = unit_im(1), e2 = unit_im(2), e3 = unit_im(3);
  CHECK((alg.product(e1, e2).im - e3.im).norm() == 0.0);
  CHECK(alg.product(e1, e2).re == 0.0);
  CHECK(alg.product(e1, e1).re == -1.0);
  CHECK(alg.product(e1, e1).im.norm() == 0.0);

  Sampler rng(3);
  Octonion u = rand_oct(rng);
  Octonion lu = alg.product(Octonion::unit(), u);
  CHECK(std::abs(lu.re - u.re) + (lu.im - u.im).norm() < 1e-15);
}

TEST_CASE("conjugation") {
  NormedAlgebra8 alg = NormedAlgebra8::standard();
  Octonion one = Octonion::unit();
  CHECK(alg.conjugate(one).re == 1.0);
  CHECK(alg.conjugate(unit_im(1)).im(0) == -1.0);
  Sampler rng(5);
  for (int t = 0; t < 100; ++t) {
    Octonion u = rand_oct(rng);
    Octonion uubar = alg.product(u, alg.conjugate(u));
    CHECK(std::abs(uubar.re - alg.inner(u, u)) < 1e-12 * alg.inner(u, u));
    CHECK(uubar.im.norm() < 1e-12 * alg.inner(u, u));
  }
}

TEST_CASE("triple cross values") {
  NormedAlgebra8 alg = NormedAlgebra8::standard();
  Octonion t = alg.triple_cross(unit_im(1), unit_im(2), unit_im(3));
  CHECK(t.re == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.im.norm() < 1e-15);

  Octonion t2 = alg.triple_cross(Octonion::unit(), unit_im(1), unit_im(2));
  CHECK(t2.re == 0.0);
  CHECK((t2.im + unit_im(3).im).norm() < 1e-15);

  Sampler rng(7);
  Octonion u = rand_oct(rng), w = rand_oct(rng);
  CHECK(alg.norm(alg.triple_cross(u, u, w)) < 1e-12);
}

TEST_CASE("negative triple cross gives the anti-self-dual calibration") {
  NormedAlgebra8 alg = NormedAlgebra8::standard();
  AltForm anti = oct::anti_cayley_from_g2(alg.base());
  Sampler rng(9);
  for (int t = 0; t < 50; ++t) {
    Octonion x = rand_oct(rng), u = rand_oct(rng), v = rand_oct(rng),
             w = rand_oct(rng);
    Octonion tc = alg.triple_cross(u, v, w, oct::TripleSign::Negative);
    const Vec vs[] = {x.to_r8(), u.to_r8(), v.to_r8(), w.to_r8()};
    CHECK(std::abs(alg.inner(x, tc) - eval(anti, vs)) < 1e-9);
  }
  Metric id8 = Metric::identity(8);
  Orientation o8 = Orientation::standard(8);
  CHECK((hodge(anti, id8, o8) + anti).sup_norm() < 1e-14);
}

TEST_CASE("fourfold cross") {
  NormedAlgebra8 alg = NormedAlgebra8::standard();
  Octonion f = alg.fourfold_cross(Octonion::unit(), unit_im(1), unit_im(2),
                                  unit_im(3));
  CHECK(f.re == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.im.norm() < 1e-15);

  Sampler rng(11);
  Octonion u = rand_oct(rng), v = rand_oct(rng), w = rand_oct(rng);
  CHECK(alg.norm(alg.fourfold_cross(u, u, v, w)) < 1e-12);

  // |result| = 1 on random orthonormal 4-tuples
  for (int t = 0; t < 25; ++t) {
    std::vector<Octonion> os;
    while (os.size() < 4) {
      Octonion cand = rand_oct(rng);
      for (const auto& o : os) cand = cand - o * alg.inner(o, cand);
      if (alg.norm(cand) < 1e-3) continue;
      os.push_back(cand * (1.0 / alg.norm(cand)));
    }
    CHECK(std::abs(alg.norm(alg.fourfold_cross(os[0], os[1], os[2], os[3])) -
                   1.0) < 1e-9);
  }
}

TEST_CASE("cayley form from the standard structure") {
  g2::CrossStructure7 s = g2::standard_phi7();
  AltForm Phi = oct::cayley_from_g2(s);
  CHECK(Phi.term_count() == 14);
  CHECK(Phi.coeff({0, 1, 2, 3}) == 1.0);
  CHECK(Phi.coeff({1, 2, 4, 7}) == -1.0);

  Metric id8 = Metric::identity(8);
  Orientation o8 = Orientation::standard(8);
  AltForm sq = wedge(Phi, Phi);
  CHECK(sq.coeff({0, 1, 2, 3, 4, 5, 6, 7}) == 14.0);
  CHECK((hodge(Phi, id8, o8) - Phi).sup_norm() == 0.0);
}

TEST_CASE("octonion identity suites") {
  g2::CrossStructure7 s = g2::standard_phi7();
  verify::SuiteResult a = verify::run_suite7("octonion-norm", s, 42, 300);
  CHECK(a.pass);
  verify::SuiteResult b = verify::run_suite7("octonion-triple", s, 42, 200);
  CHECK(b.pass);
}
