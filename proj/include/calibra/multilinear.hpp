#ifndef CALIBRA_MULTILINEAR_HPP
#define CALIBRA_MULTILINEAR_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace calibra {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Error with a stable machine-readable code ("DimensionMismatch", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

// ---------------------------------------------------------------------------
// Multi-index masks. A strictly increasing multi-index on axes {0..dim-1}
// is encoded as a bitmask; degree == popcount.
// ---------------------------------------------------------------------------

using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

Mask mask_of(std::span<const int> axes);
std::vector<int> axes_of(Mask m);

/// Sign of the shuffle merging two disjoint increasing multi-indices a, b
/// into the increasing multi-index a|b.
int shuffle_sign(Mask a, Mask b);

/// All degree-k masks on a dim-dimensional space, ascending.
const std::vector<Mask>& masks(int dim, int k);

// ---------------------------------------------------------------------------
// AltForm: sparse alternating k-form, dim <= 8.
// ---------------------------------------------------------------------------

class AltForm {
 public:
  AltForm() = default;
  AltForm(int dim, int degree);

  /// Single-term form c * e^{axes} (axes strictly increasing).
  static AltForm term(int dim, std::initializer_list<int> axes, double c = 1.0);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  double coeff(Mask m) const;
  double coeff(std::initializer_list<int> axes) const;
  void set(Mask m, double c);
  void accumulate(Mask m, double c);
  AltForm& add_term(std::initializer_list<int> axes, double c);

  const std::map<Mask, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  double sup_norm() const;
  /// Copy with |coefficient| <= eps entries removed.
  AltForm pruned(double eps) const;

  AltForm& operator+=(const AltForm& rhs);
  AltForm& operator-=(const AltForm& rhs);
  AltForm& operator*=(double s);

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(AltForm a, double s) { return a *= s; }
  friend AltForm operator*(double s, AltForm a) { return a *= s; }
  friend AltForm operator-(AltForm a) { return a *= -1.0; }

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<Mask, double> terms_;
};

// ---------------------------------------------------------------------------
// Metric: symmetric positive definite bilinear form with cached factorization.
// ---------------------------------------------------------------------------

class Metric {
 public:
  explicit Metric(const Mat& g);
  static Metric identity(int dim);

  int dim() const { return static_cast<int>(g_.rows()); }
  const Mat& matrix() const { return g_; }
  const Mat& inverse() const { return g_inv_; }
  bool is_identity() const { return identity_; }

  double inner(const Vec& u, const Vec& v) const;
  double norm(const Vec& u) const;
  double det() const { return det_; }
  double sqrt_det() const { return sqrt_det_; }

  /// Index raising/lowering: sharp maps covector coefficients to a vector,
  /// flat maps a vector to covector coefficients.
  Vec sharp(const Vec& covector) const { return g_inv_ * covector; }
  Vec flat(const Vec& v) const { return g_ * v; }

 private:
  Mat g_, g_inv_;
  double det_ = 0.0, sqrt_det_ = 0.0;
  bool identity_ = false;
};

/// Orientation realized as a reference volume form (degree == dim, nonzero).
struct Orientation {
  AltForm reference;

  static Orientation standard(int dim);
  /// +1 if the reference top coefficient is positive, -1 otherwise.
  double sign() const;
  Orientation flipped() const;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

AltForm wedge(const AltForm& a, const AltForm& b);

/// Slot convention (iota(u)a)(v1,...) = a(u, v1, ...).
AltForm contract(const Vec& u, const AltForm& a);

/// Hodge star with convention a ^ *b = <a,b> dvol.
AltForm hodge(const AltForm& a, const Metric& m, const Orientation& o);

/// Gram-minor pairing of two forms of equal dim and degree.
double form_inner(const AltForm& a, const AltForm& b, const Metric& m);

double form_norm(const AltForm& a, const Metric& m);

/// det of the Gram matrix of vs; 0 iff linearly dependent.
double gram_volume(std::span<const Vec> vs, const Metric& m);

double eval(const AltForm& a, std::span<const Vec> vs);

/// (pullback(a, g))(v1,...,vk) = a(g v1, ..., g vk).
AltForm pullback(const AltForm& a, const Mat& g);

/// Reinterpret a on a larger space, shifting every axis by offset.
AltForm embed(const AltForm& a, int new_dim, int axis_offset);

/// Metric volume form s * sqrt(det g) e^{0...n-1} for orientation sign s.
AltForm volume_form(const Metric& m, const Orientation& o);

/// Covector coefficients of a degree-1 form.
Vec covector_of(const AltForm& a);
AltForm covector_form(const Vec& coeffs);

/// u^* = <u, .>  as a 1-form.
AltForm flat_form(const Metric& m, const Vec& u);

}  // namespace calibra

#endif  // CALIBRA_MULTILINEAR_HPP
