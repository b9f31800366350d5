#ifndef CALIBRA_G2_HPP
#define CALIBRA_G2_HPP

#include <string>
#include <vector>

#include "calibra/multilinear.hpp"

namespace calibra {

/// Linear subspace given by a spanning basis (2-4 vectors).
struct Subspace {
  std::vector<Vec> basis;
};

struct DecompComponent {
  std::string name;
  AltForm part;
  double residual = 0.0;  // defect of the defining condition of this component
};

/// Result of a representation-type splitting.
struct DecompReport {
  std::vector<DecompComponent> components;
  double recompose_residual = 0.0;
  double orthogonality_residual = 0.0;

  const AltForm& part(const std::string& name) const;
  double residual(const std::string& name) const;
};

namespace g2 {

/// A 7-dimensional cross-product structure: compatible metric, orientation,
/// associative calibration phi and coassociative calibration psi = *phi.
/// Construction certifies iota(u)phi ^ iota(v)phi ^ phi = 6<u,v> dvol on a
/// spanning set, so every instance is usable as-is.
class CrossStructure7 {
 public:
  static CrossStructure7 standard();
  /// Certifies (m, o, phi) and computes psi = *phi.
  CrossStructure7(Metric m, Orientation o, AltForm phi);

  const Metric& metric() const { return metric_; }
  const Orientation& orientation() const { return orientation_; }
  const AltForm& phi() const { return phi_; }
  const AltForm& psi() const { return psi_; }
  const AltForm& dvol() const { return dvol_; }

  Vec cross(const Vec& u, const Vec& v) const;
  /// [u,v,w] = (u x v) x w + <v,w>u - <u,w>v.
  Vec associator(const Vec& u, const Vec& v, const Vec& w) const;
  /// [u,v,w,x] = phi(u,v,w)x - phi(x,u,v)w + phi(w,x,u)v - phi(v,w,x)u.
  Vec coassociator(const Vec& u, const Vec& v, const Vec& w,
                   const Vec& x) const;

  double phi_eval(const Vec& u, const Vec& v, const Vec& w) const;
  double psi_eval(const Vec& u, const Vec& v, const Vec& w, const Vec& x) const;

  double inner(const Vec& u, const Vec& v) const { return metric_.inner(u, v); }
  double norm(const Vec& u) const { return metric_.norm(u); }

  AltForm star(const AltForm& a) const;

 private:
  Metric metric_;
  Orientation orientation_;
  AltForm phi_, psi_, dvol_;
};

CrossStructure7 standard_phi7();

AltForm standard_phi0();
AltForm standard_psi0();

/// Definiteness of b(u,v) := iota(u)phi ^ iota(v)phi ^ phi on a basis.
bool is_nondegenerate3(const AltForm& phi);

/// Compatible metric and orientation of a nondegenerate 3-form (unique).
/// Errors: NotNondegenerate, IndefiniteSignature.
CrossStructure7 recover_metric_from_phi(const AltForm& phi);

enum class Kind7 { Associative, Coassociative, Generic };

struct Classification7 {
  Kind7 kind = Kind7::Generic;
  double residual = 0.0;
};

/// dim-3 subspaces: Associative iff the associator vanishes; dim-4:
/// Coassociative iff the coassociator vanishes. Residual is scale-free.
Classification7 classify_subspace7(const CrossStructure7& s, const Subspace& sub);

/// Lambda^2 = Lambda^2_7 + Lambda^2_14 via omega_7 = (1/3) *(psi ^ *(psi ^ omega)).
DecompReport decompose2_7(const CrossStructure7& s, const AltForm& omega);

/// Lambda^3 = <phi> + {iota(u)psi} + {phi^b = 0, psi^b = 0}.
DecompReport decompose3_7(const CrossStructure7& s, const AltForm& b);

/// Columns (u, v, uxv, w, wxu, wxv, wx(uxv)) for an admissible triple;
/// the result is metric-orthogonal and preserves phi.
Mat g2_frame(const CrossStructure7& s, const Vec& u, const Vec& v, const Vec& w);

/// SU(3)-data on the hyperplane orthogonal to a unit vector u.
struct TangentSU3 {
  AltForm omega;     // restriction of iota(u)phi
  Mat J;             // v -> u x v; annihilates u, squares to -1 on u-perp
  AltForm theta_re;  // restriction of phi
  AltForm theta_im;  // restriction of -iota(u)psi
};

TangentSU3 tangent_su3(const CrossStructure7& s, const Vec& u);

/// grad = [u,v,w]/phi(u,v,w); errors CalibrationVanishes when |phi| is
/// below tolerance at the scale of the triple.
Vec associative_gradient(const CrossStructure7& s, const Vec& u, const Vec& v,
                         const Vec& w);

/// gram(u,v,w)/phi(u,v,w)^2; >= 1 with equality iff span is associative.
double energy_density(const CrossStructure7& s, const Vec& u, const Vec& v,
                      const Vec& w);

}  // namespace g2
}  // namespace calibra

#endif  // CALIBRA_G2_HPP
