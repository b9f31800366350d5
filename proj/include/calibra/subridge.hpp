#ifndef CALIBRA_SUBRIDGE_HPP
#define CALIBRA_SUBRIDGE_HPP

#include <string>
#include <vector>

#include "calibra/g2.hpp"
#include "calibra/multilinear.hpp"
#include "calibra/spin7.hpp"

namespace calibra {
namespace subridge {

/// SU(3)-structure on a 6-dim space: symplectic omega, compatible J, and a
/// complex (3,0)-form theta of norm 2^{3/2}, stored as (re, im).
struct SU3Structure {
  AltForm omega;     // (6,2)
  Mat J;             // 6x6
  AltForm theta_re;  // (6,3)
  AltForm theta_im;  // (6,3)

  static SU3Structure standard();
  Metric metric() const;  // omega(., J.)
};

/// SU(4)-structure on an 8-dim space.
struct SU4Structure {
  AltForm Omega;     // (8,2)
  Mat J;             // 8x8
  AltForm Theta_re;  // (8,4)
  AltForm Theta_im;  // (8,4)

  static SU4Structure standard();
  Metric metric() const;
};

/// Invariant checks; throw InvalidSU3 / InvalidSU4.
void validate(const SU3Structure& s);
void validate(const SU4Structure& s);

/// Cross product on R + W with phi = e^0 ^ omega + Re theta.
g2::CrossStructure7 su3_to_cross(const SU3Structure& s);

/// Cayley structure with Phi = Omega^Omega/2 + Re Theta.
spin7::CayleyStructure8 su4_to_cayley(const SU4Structure& s);

/// Cayley structure of the product R + V built from a 7-dim structure
/// (Phi = e^0 ^ phi + psi with the product metric and orientation).
spin7::CayleyStructure8 g2_to_cayley(const g2::CrossStructure7& s);

struct FamilyResult {
  std::string family;
  int samples = 0;
  double max_residual = 0.0;
};

struct MembershipReport {
  std::vector<FamilyResult> families;
  double max_residual = 0.0;
  bool pass(double tol = 1e-9) const { return max_residual <= tol; }
};

/// Generator families of the decomposition refinements, each verified to
/// land in its claimed component; elements are normalized before checking.
MembershipReport su3_membership_checks(const SU3Structure& s);
MembershipReport su4_membership_checks(const SU4Structure& s);
MembershipReport g2_membership_checks(const g2::CrossStructure7& s);

}  // namespace subridge
}  // namespace calibra

#endif  // CALIBRA_SUBRIDGE_HPP
