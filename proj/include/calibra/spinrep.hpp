#ifndef CALIBRA_SPINREP_HPP
#define CALIBRA_SPINREP_HPP

#include "calibra/g2.hpp"
#include "calibra/multilinear.hpp"
#include "calibra/spin7.hpp"

namespace calibra {
namespace spinrep {

// ----- dimension 7: Clifford multiplication on S = R + V ------------------

/// gamma(u) = (0, -u*; u, A(u)) with A(u)v = u x v, an 8x8 matrix acting on
/// R + V coordinates.
Mat gamma7_matrix(const g2::CrossStructure7& s, const Vec& u);

struct Spinor7 {
  double lambda = 0.0;
  Vec v = Vec::Zero(7);

  Vec to_r8() const;
  static Spinor7 from_r8(const Vec& x);
};

/// gamma(u)(lambda, v) = (-<u,v>, lambda u + u x v).
Spinor7 gammaV(const g2::CrossStructure7& s, const Vec& u, const Spinor7& sp);

// ----- dimension 8: S+ = R + Lambda^2_7, S- = W* ---------------------------

/// Positive spinor (lambda, omega) with omega constrained to Lambda^2_7.
/// Construction projects omega onto Lambda^2_7 and records the residual of
/// what was cut away.
class SpinorPlus {
 public:
  SpinorPlus(const spin7::CayleyStructure8& c, double lambda,
             const AltForm& omega);

  double lambda() const { return lambda_; }
  const AltForm& omega() const { return omega_; }
  double projection_residual() const { return projection_residual_; }

 private:
  double lambda_;
  AltForm omega_;
  double projection_residual_;
};

/// Negative spinor: a covector, identified with Lambda^1.
struct SpinorMinus {
  Vec covector = Vec::Zero(8);
};

double spinor_inner(const spin7::CayleyStructure8& c, const SpinorPlus& a,
                    const SpinorPlus& b);
double spinor_norm(const spin7::CayleyStructure8& c, const SpinorPlus& a);
double spinor_inner(const spin7::CayleyStructure8& c, const SpinorMinus& a,
                    const SpinorMinus& b);
double spinor_norm(const spin7::CayleyStructure8& c, const SpinorMinus& a);

/// m(u,v) = (<u,v>, (omega_{u,v} + u* ^ v*)/2); |m(u,v)| = |u||v|.
SpinorPlus m_product(const spin7::CayleyStructure8& c, const Vec& u,
                     const Vec& v);

/// gamma(e)(lambda, omega) = lambda e* + 2 iota(e) omega.
SpinorMinus gamma8(const spin7::CayleyStructure8& c, const Vec& e,
                   const SpinorPlus& s);

/// Adjoint of gamma8: gamma(u)* v* = m(u,v).
SpinorPlus gamma8_adjoint(const spin7::CayleyStructure8& c, const Vec& u,
                          const SpinorMinus& s);

/// tau(x,u,v,w) = (m(uxvxw,x) - m(vxwxx,u) + m(wxxxu,v) - m(xxuxv,w))/4;
/// its first component is Phi(x,u,v,w).
SpinorPlus tau(const spin7::CayleyStructure8& c, const Vec& x, const Vec& u,
               const Vec& v, const Vec& w);

/// Second component of tau; Phi^2 + |chi|^2 = |x^u^v^w|^2.
AltForm chi(const spin7::CayleyStructure8& c, const Vec& x, const Vec& u,
            const Vec& v, const Vec& w);

}  // namespace spinrep
}  // namespace calibra

#endif  // CALIBRA_SPINREP_HPP
