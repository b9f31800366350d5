#ifndef CALIBRA_SPIN7_HPP
#define CALIBRA_SPIN7_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "calibra/g2.hpp"
#include "calibra/multilinear.hpp"

namespace calibra {
namespace spin7 {

/// An 8-dimensional Cayley structure: compatible metric, orientation, Cayley
/// 4-form Phi and its sign eps (+1 self-dual, -1 anti-self-dual).
/// Construction certifies iota(v)iota(u)Phi ^ iota(v)iota(u)Phi ^ Phi
/// = 6 |u^v|^2 dvol over pairs from the spanning set {e_i, e_i + e_j}.
class CayleyStructure8 {
 public:
  static CayleyStructure8 standard();
  CayleyStructure8(Metric m, Orientation o, AltForm Phi);

  const Metric& metric() const { return metric_; }
  const Orientation& orientation() const { return orientation_; }
  const AltForm& Phi() const { return Phi_; }
  int eps() const { return eps_; }
  const AltForm& dvol() const { return dvol_; }

  /// <x, u x v x w> = Phi(x,u,v,w).
  Vec triple_cross(const Vec& u, const Vec& v, const Vec& w) const;

  double Phi_eval(const Vec& x, const Vec& u, const Vec& v, const Vec& w) const;
  /// omega_{u,v} = iota(v)iota(u)Phi.
  AltForm pair_form(const Vec& u, const Vec& v) const;

  double inner(const Vec& u, const Vec& v) const { return metric_.inner(u, v); }
  double norm(const Vec& u) const { return metric_.norm(u); }
  AltForm star(const AltForm& a) const;

 private:
  Metric metric_;
  Orientation orientation_;
  AltForm Phi_, dvol_;
  int eps_ = +1;
};

CayleyStructure8 standard_Phi8();
AltForm standard_Phi0();

struct ConditionCReport {
  bool nondegenerate = false;
  bool biconditional = false;
  int trials = 0;
  std::uint64_t seed = 0;
  double worst_defect = 0.0;
  std::string witness;  // empty on pass
  bool pass() const { return nondegenerate && biconditional; }
};

/// Randomized check of the intrinsic Cayley-form condition (C):
/// nondegeneracy of the pair form plus the kernel biconditional for triples
/// solving the two linear orthogonality constraints.
ConditionCReport check_condition_C(const AltForm& Phi, int trials,
                                   std::uint64_t seed = 0x5eed);

/// Compatible metric, orientation and sign of a Cayley 4-form (unique).
/// Errors: NotNondegenerate, RatioInconsistent, CompatibilityFailed.
CayleyStructure8 recover_metric_from_Phi(const AltForm& Phi);

enum class Kind8 { Cayley, Generic };

struct Classification8 {
  Kind8 kind = Kind8::Generic;
  double residual = 0.0;
};

/// 4-dim subspaces: Cayley iff |Phi| = 1 on an orthonormalized basis;
/// cross-validated via closure under the triple cross product.
Classification8 classify_cayley(const CayleyStructure8& c, const Subspace& sub);

/// Lambda^2 = Lambda^2_7 + Lambda^2_21 via pi_7 = (omega + *(Phi^omega))/4.
DecompReport decompose2_8(const CayleyStructure8& c, const AltForm& omega);

/// Lambda^4 = <Phi> + Lambda^4_7 + Lambda^4_27 + Lambda^4_35.
DecompReport decompose4_8(const CayleyStructure8& c, const AltForm& F);

/// Frame with columns (x | u, v, u x v, w, ...) built through the triple
/// cross product in x-perp; maps the canonical tuple (e1,e2,e4,e0) to
/// (u,v,w,x), is metric-orthogonal and preserves Phi.
Mat spin7_frame(const CayleyStructure8& c, const Vec& u, const Vec& v,
                const Vec& w, const Vec& x);

/// Normed-algebra structure with an arbitrary unit vector e: calibrations
/// phi_e = iota(e)Phi, psi_e = eps(Phi - e* ^ phi_e) and the product
/// uv = u x e x v + <u,e>v + <v,e>u - <u,v>e.
class UnitAlgebra {
 public:
  UnitAlgebra(CayleyStructure8 c, Vec e);

  const Vec& unit() const { return e_; }
  const AltForm& phi_e() const { return phi_e_; }
  const AltForm& psi_e() const { return psi_e_; }

  Vec product(const Vec& u, const Vec& v) const;
  Vec conjugate(const Vec& u) const;

  /// Certified 7-dim structure of phi_e on e-perp, expressed in the returned
  /// orthonormal basis (columns of *basis, 8x7).
  g2::CrossStructure7 slice7(Mat* basis = nullptr) const;

 private:
  CayleyStructure8 c_;
  Vec e_;
  AltForm phi_e_, psi_e_;
};

UnitAlgebra unit_reconstruction(const CayleyStructure8& c, const Vec& e);

struct InstantonResidual {
  AltForm pi7;
  double relative_residual = 0.0;
  bool is_instanton = false;
};

/// pi_7(F) = (F + *(Phi^F))/4; F is an instanton iff this vanishes.
InstantonResidual instanton_residual(const CayleyStructure8& c,
                                     const AltForm& F);

struct FuzzResult {
  int trials = 0;
  int nondegenerate_samples = 0;
  std::optional<AltForm> counterexample;  // nondegenerate with Phi^Phi = 0
  double min_abs_wedge_square = 0.0;      // over nondegenerate samples
};

/// Fuzzing hook for the open question whether every nondegenerate 4-form has
/// Phi^Phi != 0. Reports candidates; asserts nothing.
FuzzResult fuzz_wedge_square(int trials, std::uint64_t seed = 0x5eed);

}  // namespace spin7
}  // namespace calibra

#endif  // CALIBRA_SPIN7_HPP
