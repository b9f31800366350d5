#include "calibra/octonion.hpp"

#include <cmath>

namespace calibra {
namespace oct {

Octonion Octonion::from_r8(const Vec& x) {
  if (x.size() != 8) fail("DimensionMismatch", "octonion wants 8 coordinates");
  return {x[0], x.tail(7)};
}

Vec Octonion::to_r8() const {
  Vec x(8);
  x[0] = re;
  x.tail(7) = im;
  return x;
}

NormedAlgebra8::NormedAlgebra8(g2::CrossStructure7 base)
    : base_(std::move(base)) {}

NormedAlgebra8 NormedAlgebra8::standard() {
  return NormedAlgebra8(g2::CrossStructure7::standard());
}

Octonion NormedAlgebra8::product(const Octonion& a, const Octonion& b) const {
  double re = a.re * b.re - base_.inner(a.im, b.im);
  Vec im = a.re * b.im + b.re * a.im + base_.cross(a.im, b.im);
  return {re, im};
}

Octonion NormedAlgebra8::conjugate(const Octonion& a) const {
  return {a.re, -a.im};
}

double NormedAlgebra8::inner(const Octonion& a, const Octonion& b) const {
  return a.re * b.re + base_.inner(a.im, b.im);
}

double NormedAlgebra8::norm(const Octonion& a) const {
  return std::sqrt(inner(a, a));
}

Octonion NormedAlgebra8::triple_cross(const Octonion& u, const Octonion& v,
                                      const Octonion& w,
                                      TripleSign sign) const {
  const Octonion vbar = conjugate(v);
  if (sign == TripleSign::Positive) {
    Octonion lhs = product(product(u, vbar), w);
    Octonion rhs = product(product(w, vbar), u);
    return (lhs - rhs) * 0.5;
  }
  Octonion lhs = product(u, product(vbar, w));
  Octonion rhs = product(w, product(vbar, u));
  return (lhs - rhs) * 0.5;
}

Octonion NormedAlgebra8::fourfold_cross(const Octonion& x, const Octonion& u,
                                        const Octonion& v, const Octonion& w,
                                        TripleSign sign) const {
  Octonion t = product(triple_cross(u, v, w, sign), conjugate(x)) -
               product(triple_cross(v, w, x, sign), conjugate(u)) +
               product(triple_cross(w, x, u, sign), conjugate(v)) -
               product(triple_cross(x, u, v, sign), conjugate(w));
  return t * 0.25;
}

AltForm cayley_from_g2(const g2::CrossStructure7& s) {
  AltForm e0 = AltForm::term(8, {0});
  return wedge(e0, embed(s.phi(), 8, 1)) + embed(s.psi(), 8, 1);
}

AltForm anti_cayley_from_g2(const g2::CrossStructure7& s) {
  AltForm e0 = AltForm::term(8, {0});
  return wedge(e0, embed(s.phi(), 8, 1)) - embed(s.psi(), 8, 1);
}

}  // namespace oct
}  // namespace calibra
