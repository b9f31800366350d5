#include "calibra/spinrep.hpp"

#include <cmath>

namespace calibra {
namespace spinrep {

Mat gamma7_matrix(const g2::CrossStructure7& s, const Vec& u) {
  if (u.size() != 7) fail("DimensionMismatch", "gamma7_matrix wants dim 7");
  Mat g = Mat::Zero(8, 8);
  Vec ustar = s.metric().flat(u);
  g.block(0, 1, 1, 7) = -ustar.transpose();
  g.block(1, 0, 7, 1) = u;
  for (int i = 0; i < 7; ++i)
    g.block(1, 1, 7, 7).col(i) = s.cross(u, Vec::Unit(7, i));
  return g;
}

Vec Spinor7::to_r8() const {
  Vec x(8);
  x[0] = lambda;
  x.tail(7) = v;
  return x;
}

Spinor7 Spinor7::from_r8(const Vec& x) {
  if (x.size() != 8) fail("DimensionMismatch", "spinor wants 8 coordinates");
  return {x[0], x.tail(7)};
}

Spinor7 gammaV(const g2::CrossStructure7& s, const Vec& u, const Spinor7& sp) {
  return {-s.inner(u, sp.v), sp.lambda * u + s.cross(u, sp.v)};
}

SpinorPlus::SpinorPlus(const spin7::CayleyStructure8& c, double lambda,
                       const AltForm& omega)
    : lambda_(lambda), omega_(8, 2), projection_residual_(0.0) {
  DecompReport rep = spin7::decompose2_8(c, omega);
  omega_ = rep.part("7");
  projection_residual_ = form_norm(rep.part("21"), c.metric());
}

double spinor_inner(const spin7::CayleyStructure8& c, const SpinorPlus& a,
                    const SpinorPlus& b) {
  return a.lambda() * b.lambda() + form_inner(a.omega(), b.omega(), c.metric());
}

double spinor_norm(const spin7::CayleyStructure8& c, const SpinorPlus& a) {
  return std::sqrt(std::max(0.0, spinor_inner(c, a, a)));
}

double spinor_inner(const spin7::CayleyStructure8& c, const SpinorMinus& a,
                    const SpinorMinus& b) {
  return a.covector.dot(c.metric().inverse() * b.covector);
}

double spinor_norm(const spin7::CayleyStructure8& c, const SpinorMinus& a) {
  return std::sqrt(std::max(0.0, spinor_inner(c, a, a)));
}

SpinorPlus m_product(const spin7::CayleyStructure8& c, const Vec& u,
                     const Vec& v) {
  if (u.size() != 8 || v.size() != 8) fail("DimensionMismatch", "m_product");
  AltForm second =
      (c.pair_form(u, v) +
       wedge(flat_form(c.metric(), u), flat_form(c.metric(), v))) *
      0.5;
  return SpinorPlus(c, c.inner(u, v), second);
}

SpinorMinus gamma8(const spin7::CayleyStructure8& c, const Vec& e,
                   const SpinorPlus& s) {
  if (e.size() != 8) fail("DimensionMismatch", "gamma8");
  Vec cov = s.lambda() * c.metric().flat(e) +
            2.0 * covector_of(contract(e, s.omega()));
  return SpinorMinus{cov};
}

SpinorPlus gamma8_adjoint(const spin7::CayleyStructure8& c, const Vec& u,
                          const SpinorMinus& s) {
  return m_product(c, u, c.metric().sharp(s.covector));
}

SpinorPlus tau(const spin7::CayleyStructure8& c, const Vec& x, const Vec& u,
               const Vec& v, const Vec& w) {
  auto m = [&](const Vec& a, const Vec& b) {
    return m_product(c, a, b);
  };
  SpinorPlus m1 = m(c.triple_cross(u, v, w), x);
  SpinorPlus m2 = m(c.triple_cross(v, w, x), u);
  SpinorPlus m3 = m(c.triple_cross(w, x, u), v);
  SpinorPlus m4 = m(c.triple_cross(x, u, v), w);
  double lam =
      0.25 * (m1.lambda() - m2.lambda() + m3.lambda() - m4.lambda());
  AltForm om = (m1.omega() - m2.omega() + m3.omega() - m4.omega()) * 0.25;
  return SpinorPlus(c, lam, om);
}

AltForm chi(const spin7::CayleyStructure8& c, const Vec& x, const Vec& u,
            const Vec& v, const Vec& w) {
  return tau(c, x, u, v, w).omega();
}

}  // namespace spinrep
}  // namespace calibra
