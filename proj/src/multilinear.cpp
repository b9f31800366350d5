#include "calibra/multilinear.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace calibra {

namespace {

void check_same_space(const AltForm& a, const AltForm& b, const char* op) {
  if (a.dim() != b.dim())
    fail("DimensionMismatch", std::string(op) + ": dims " +
                                  std::to_string(a.dim()) + " vs " +
                                  std::to_string(b.dim()));
}

constexpr double kPivotFloor = 1e-12;

}  // namespace

Mask mask_of(std::span<const int> axes) {
  Mask m = 0;
  int prev = -1;
  for (int a : axes) {
    if (a <= prev) fail("ParseError", "multi-index not strictly increasing");
    prev = a;
    m |= Mask{1} << a;
  }
  return m;
}

std::vector<int> axes_of(Mask m) {
  std::vector<int> axes;
  for (int i = 0; m >> i; ++i)
    if (m >> i & 1) axes.push_back(i);
  return axes;
}

int shuffle_sign(Mask a, Mask b) {
  int inv = 0;
  for (int j = 0; b >> j; ++j)
    if (b >> j & 1) inv += std::popcount(a >> (j + 1));
  return (inv & 1) ? -1 : 1;
}

const std::vector<Mask>& masks(int dim, int k) {
  static std::array<std::array<std::vector<Mask>, 9>, 9> cache = [] {
    std::array<std::array<std::vector<Mask>, 9>, 9> table{};
    for (int n = 0; n <= 8; ++n)
      for (Mask m = 0; m < (Mask{1} << n); ++m)
        table[n][mask_degree(m)].push_back(m);
    return table;
  }();
  return cache.at(dim).at(k);
}

AltForm::AltForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > 8) fail("BadDimension", "dim must be in [0,8]");
  if (degree < 0 || degree > dim)
    fail("DegreeOverflow", "degree must be in [0,dim]");
}

AltForm AltForm::term(int dim, std::initializer_list<int> axes, double c) {
  AltForm f(dim, static_cast<int>(axes.size()));
  f.add_term(axes, c);
  return f;
}

double AltForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double AltForm::coeff(std::initializer_list<int> axes) const {
  return coeff(mask_of(std::span<const int>(axes.begin(), axes.size())));
}

void AltForm::set(Mask m, double c) {
  if (mask_degree(m) != degree_ || m >= (Mask{1} << dim_))
    fail("DimensionMismatch", "multi-index does not fit this form");
  if (c == 0.0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void AltForm::accumulate(Mask m, double c) {
  if (c == 0.0) return;
  double next = terms_[m] + c;
  if (next == 0.0)
    terms_.erase(m);
  else
    terms_[m] = next;
}

AltForm& AltForm::add_term(std::initializer_list<int> axes, double c) {
  Mask m = mask_of(std::span<const int>(axes.begin(), axes.size()));
  if (mask_degree(m) != degree_ || (dim_ < 8 && m >= (Mask{1} << dim_)))
    fail("DimensionMismatch", "multi-index does not fit this form");
  accumulate(m, c);
  return *this;
}

double AltForm::sup_norm() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

AltForm AltForm::pruned(double eps) const {
  AltForm out(dim_, degree_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > eps) out.terms_[m] = c;
  return out;
}

AltForm& AltForm::operator+=(const AltForm& rhs) {
  check_same_space(*this, rhs, "add");
  if (degree_ != rhs.degree_) fail("DimensionMismatch", "add: mixed degrees");
  for (const auto& [m, c] : rhs.terms_) accumulate(m, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& rhs) {
  check_same_space(*this, rhs, "sub");
  if (degree_ != rhs.degree_) fail("DimensionMismatch", "sub: mixed degrees");
  for (const auto& [m, c] : rhs.terms_) accumulate(m, -c);
  return *this;
}

AltForm& AltForm::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Metric::Metric(const Mat& g) {
  if (g.rows() != g.cols() || g.rows() < 1 || g.rows() > 8)
    fail("BadDimension", "metric must be square, dim in [1,8]");
  Mat sym = 0.5 * (g + g.transpose());
  double skew = (g - g.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-9 * (1.0 + sym.cwiseAbs().maxCoeff()))
    fail("DegenerateMetric", "matrix is not symmetric");
  g_ = sym;
  Eigen::LDLT<Mat> ldlt(g_);
  double floor = kPivotFloor * g_.trace() / g_.rows();
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() <= floor)
    fail("DegenerateMetric", "matrix is not positive definite");
  g_inv_ = ldlt.solve(Mat::Identity(g_.rows(), g_.cols()));
  det_ = g_.determinant();
  sqrt_det_ = std::sqrt(det_);
  identity_ = g_.isIdentity(0.0);
}

Metric Metric::identity(int dim) { return Metric(Mat::Identity(dim, dim)); }

double Metric::inner(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    fail("DimensionMismatch", "metric inner product");
  return u.dot(g_ * v);
}

double Metric::norm(const Vec& u) const { return std::sqrt(inner(u, u)); }

Orientation Orientation::standard(int dim) {
  AltForm top(dim, dim);
  top.set((Mask{1} << dim) - 1, 1.0);
  return Orientation{top};
}

double Orientation::sign() const {
  const Mask full = (Mask{1} << reference.dim()) - 1;
  double c = reference.coeff(full);
  if (c == 0.0) fail("DegenerateMetric", "orientation reference form is zero");
  return c > 0 ? 1.0 : -1.0;
}

Orientation Orientation::flipped() const { return Orientation{-reference}; }

AltForm wedge(const AltForm& a, const AltForm& b) {
  check_same_space(a, b, "wedge");
  if (a.degree() + b.degree() > a.dim())
    fail("DegreeOverflow", "wedge exceeds top degree");
  AltForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.accumulate(ma | mb, shuffle_sign(ma, mb) * ca * cb);
    }
  return out;
}

AltForm contract(const Vec& u, const AltForm& a) {
  if (u.size() != a.dim()) fail("DimensionMismatch", "contract");
  if (a.degree() < 1) fail("DegreeUnderflow", "cannot contract a 0-form");
  AltForm out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    int pos = 0;
    for (int i = 0; m >> i; ++i) {
      if (!(m >> i & 1)) continue;
      double ui = u[i];
      if (ui != 0.0) out.accumulate(m & ~(Mask{1} << i), (pos & 1 ? -c : c) * ui);
      ++pos;
    }
  }
  return out;
}

double eval(const AltForm& a, std::span<const Vec> vs) {
  if (static_cast<int>(vs.size()) != a.degree())
    fail("DimensionMismatch", "eval: argument count != degree");
  AltForm cur = a;
  for (const Vec& v : vs) cur = contract(v, cur);
  return cur.coeff(Mask{0});
}

namespace {

// <e^I, e^J> = det of the inverse-metric minor with rows I, columns J.
double basis_inner(const Metric& m, Mask I, Mask J) {
  if (m.is_identity()) return I == J ? 1.0 : 0.0;
  const std::vector<int> ri = axes_of(I), cj = axes_of(J);
  const int k = static_cast<int>(ri.size());
  if (k == 0) return 1.0;
  Mat minor(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) minor(r, c) = m.inverse()(ri[r], cj[c]);
  return minor.determinant();
}

}  // namespace

double form_inner(const AltForm& a, const AltForm& b, const Metric& m) {
  check_same_space(a, b, "form_inner");
  if (a.degree() != b.degree()) fail("DimensionMismatch", "form_inner: degrees");
  if (m.dim() != a.dim()) fail("DimensionMismatch", "form_inner: metric dim");
  double s = 0.0;
  if (m.is_identity()) {
    for (const auto& [ma, ca] : a.terms()) s += ca * b.coeff(ma);
    return s;
  }
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) s += ca * cb * basis_inner(m, ma, mb);
  return s;
}

double form_norm(const AltForm& a, const Metric& m) {
  return std::sqrt(std::max(0.0, form_inner(a, a, m)));
}

AltForm hodge(const AltForm& a, const Metric& m, const Orientation& o) {
  if (m.dim() != a.dim() || o.reference.dim() != a.dim())
    fail("DimensionMismatch", "hodge");
  const int n = a.dim(), k = a.degree();
  const double s = o.sign() * m.sqrt_det();
  const Mask full = (Mask{1} << n) - 1;
  AltForm out(n, n - k);
  for (Mask I : masks(n, k)) {
    double c = 0.0;
    if (m.is_identity())
      c = a.coeff(I);
    else
      for (const auto& [mb, cb] : a.terms()) c += cb * basis_inner(m, I, mb);
    if (c == 0.0) continue;
    const Mask Ic = full & ~I;
    out.accumulate(Ic, shuffle_sign(I, Ic) * c * s);
  }
  return out;
}

double gram_volume(std::span<const Vec> vs, const Metric& m) {
  const int k = static_cast<int>(vs.size());
  if (k < 1 || k > m.dim()) fail("DimensionMismatch", "gram_volume: bad count");
  Mat gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram(i, j) = m.inner(vs[i], vs[j]);
  return gram.determinant();
}

AltForm pullback(const AltForm& a, const Mat& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim())
    fail("DimensionMismatch", "pullback");
  const int n = a.dim(), k = a.degree();
  AltForm out(n, k);
  std::vector<Vec> cols(k, Vec(n));
  for (Mask I : masks(n, k)) {
    const std::vector<int> axes = axes_of(I);
    for (int j = 0; j < k; ++j) cols[j] = g.col(axes[j]);
    double c = eval(a, cols);
    if (c != 0.0) out.set(I, c);
  }
  return out;
}

AltForm embed(const AltForm& a, int new_dim, int axis_offset) {
  if (axis_offset < 0 || a.dim() + axis_offset > new_dim)
    fail("DimensionMismatch", "embed");
  AltForm out(new_dim, a.degree());
  for (const auto& [m, c] : a.terms()) out.set(m << axis_offset, c);
  return out;
}

AltForm volume_form(const Metric& m, const Orientation& o) {
  AltForm dvol(m.dim(), m.dim());
  dvol.set((Mask{1} << m.dim()) - 1, o.sign() * m.sqrt_det());
  return dvol;
}

Vec covector_of(const AltForm& a) {
  if (a.degree() != 1) fail("DimensionMismatch", "covector_of: degree != 1");
  Vec c = Vec::Zero(a.dim());
  for (const auto& [m, v] : a.terms()) c[axes_of(m)[0]] = v;
  return c;
}

AltForm covector_form(const Vec& coeffs) {
  AltForm a(static_cast<int>(coeffs.size()), 1);
  for (int i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0.0) a.set(Mask{1} << i, coeffs[i]);
  return a;
}

AltForm flat_form(const Metric& m, const Vec& u) {
  return covector_form(m.flat(u));
}

}  // namespace calibra
