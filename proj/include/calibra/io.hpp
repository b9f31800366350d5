#ifndef CALIBRA_IO_HPP
#define CALIBRA_IO_HPP

#include <string>
#include <vector>

#include "calibra/multilinear.hpp"

namespace calibra {
namespace io {

/// Sparse form document with paper-style axis labels. Supported label
/// conventions: "dim7-1based" maps labels {1..7} to axes {0..6};
/// "dim8-0based" and "dim6-0based" are identity mappings.
struct FormDocument {
  int dim = 0;
  int degree = 0;
  std::string convention;
  struct Entry {
    std::vector<int> idx;  // strictly increasing labels
    double c = 0.0;
  };
  std::vector<Entry> coeffs;

  static FormDocument from_form(const AltForm& a);
  AltForm to_form() const;

  std::string to_json() const;
  static FormDocument parse(const std::string& text);
};

std::string default_convention(int dim);

/// Vector list document: {"dim": n, "vectors": [[...], ...]}.
std::vector<Vec> parse_vectors(const std::string& text);

/// Number formatting used everywhere in reports: decimal-exact integers,
/// 17-significant-digit floats otherwise.
std::string format_real(double x);

}  // namespace io
}  // namespace calibra

#endif  // CALIBRA_IO_HPP
