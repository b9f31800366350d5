#ifndef CALIBRA_OCTONION_HPP
#define CALIBRA_OCTONION_HPP

#include "calibra/g2.hpp"
#include "calibra/multilinear.hpp"

namespace calibra {
namespace oct {

/// Element of R + V with V the 7-dim imaginary part.
struct Octonion {
  double re = 0.0;
  Vec im = Vec::Zero(7);

  static Octonion real(double r) { return {r, Vec::Zero(7)}; }
  static Octonion imag(const Vec& v) { return {0.0, v}; }
  static Octonion unit() { return real(1.0); }
  /// Coordinates (x0, x1..x7) of R^8 = R + V.
  static Octonion from_r8(const Vec& x);
  Vec to_r8() const;

  Octonion operator+(const Octonion& o) const { return {re + o.re, im + o.im}; }
  Octonion operator-(const Octonion& o) const { return {re - o.re, im - o.im}; }
  Octonion operator*(double s) const { return {re * s, im * s}; }
  Octonion operator-() const { return {-re, -im}; }
};

enum class TripleSign { Positive, Negative };

/// Normed algebra on R + V built from a 7-dim cross-product structure.
/// The unit is pinned to axis 0.
class NormedAlgebra8 {
 public:
  explicit NormedAlgebra8(g2::CrossStructure7 base);
  static NormedAlgebra8 standard();

  const g2::CrossStructure7& base() const { return base_; }

  /// uv = u0 v0 - <u1,v1> + u0 v1 + v0 u1 + u1 x v1.
  Octonion product(const Octonion& a, const Octonion& b) const;
  Octonion conjugate(const Octonion& a) const;

  double inner(const Octonion& a, const Octonion& b) const;
  double norm(const Octonion& a) const;

  /// u x v x w = ((u vbar) w - (w vbar) u)/2; the Negative branch uses
  /// (u (vbar w) - w (vbar u))/2 and yields the anti-self-dual calibration.
  Octonion triple_cross(const Octonion& u, const Octonion& v, const Octonion& w,
                        TripleSign sign = TripleSign::Positive) const;

  /// 4 (x,u,v,w) = (uxvxw)xbar - (vxwxx)ubar + (wxxxu)vbar - (xxuxv)wbar.
  Octonion fourfold_cross(const Octonion& x, const Octonion& u,
                          const Octonion& v, const Octonion& w,
                          TripleSign sign = TripleSign::Positive) const;

 private:
  g2::CrossStructure7 base_;
};

/// Cayley calibration e^0 ^ phi + psi on R + V (self-dual, Phi^Phi = 14 dvol).
AltForm cayley_from_g2(const g2::CrossStructure7& s);

/// Anti-self-dual companion e^0 ^ phi - psi.
AltForm anti_cayley_from_g2(const g2::CrossStructure7& s);

}  // namespace oct
}  // namespace calibra

#endif  // CALIBRA_OCTONION_HPP
