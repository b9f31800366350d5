#ifndef CALIBRA_SAMPLING_HPP
#define CALIBRA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "calibra/multilinear.hpp"

namespace calibra {

/// Seeded source of random test data; deterministic per seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double gauss() { return normal_(gen_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Vec vector(int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gauss();
    return v;
  }

  /// Unit vector for the given metric.
  Vec unit_vector(int dim, const Metric& m) {
    for (;;) {
      Vec v = vector(dim);
      double n = m.norm(v);
      if (n > 1e-6) return v / n;
    }
  }

  AltForm form(int dim, int degree) {
    AltForm a(dim, degree);
    for (Mask m : masks(dim, degree)) a.set(m, gauss());
    return a;
  }

  /// Haar-ish orthogonal matrix via QR of a Gaussian matrix.
  Mat orthogonal(int dim) {
    Mat a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = gauss();
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i)
      if (r(i, i) < 0) q.col(i) = -q.col(i);
    return q;
  }

  /// Invertible matrix with condition number at most cond_max.
  Mat general_linear(int dim, double cond_max) {
    Mat u = orthogonal(dim), v = orthogonal(dim);
    Vec sing(dim);
    double smax = std::sqrt(cond_max), smin = 1.0 / smax;
    for (int i = 0; i < dim; ++i) sing[i] = uniform(smin, smax);
    return u * sing.asDiagonal() * v.transpose();
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace calibra

#endif  // CALIBRA_SAMPLING_HPP
