#include "calibra/io.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace calibra {
namespace io {

using nlohmann::json;

namespace {

bool is_exact_integer(double x) {
  return std::isfinite(x) && x == std::rint(x) && std::abs(x) <= 9.007199254740992e15;
}

json number_json(double x) {
  if (is_exact_integer(x)) return json(static_cast<std::int64_t>(x));
  return json(x);
}

int label_offset(const std::string& convention) {
  if (convention == "dim7-1based") return 1;
  if (convention == "dim8-0based" || convention == "dim6-0based") return 0;
  fail("ParseError", "unknown axis-label convention: " + convention);
}

}  // namespace

std::string default_convention(int dim) {
  if (dim == 7) return "dim7-1based";
  if (dim == 8) return "dim8-0based";
  if (dim == 6) return "dim6-0based";
  fail("ParseError", "no label convention for dim " + std::to_string(dim));
}

FormDocument FormDocument::from_form(const AltForm& a) {
  FormDocument doc;
  doc.dim = a.dim();
  doc.degree = a.degree();
  doc.convention = default_convention(a.dim());
  const int off = label_offset(doc.convention);
  for (const auto& [m, c] : a.terms()) {
    Entry e;
    for (int ax : axes_of(m)) e.idx.push_back(ax + off);
    e.c = c;
    doc.coeffs.push_back(std::move(e));
  }
  return doc;
}

AltForm FormDocument::to_form() const {
  const int off = label_offset(convention);
  AltForm a(dim, degree);
  for (const Entry& e : coeffs) {
    std::vector<int> axes;
    int prev = -1;
    for (int label : e.idx) {
      int ax = label - off;
      if (ax < 0 || ax >= dim)
        fail("ParseError", "axis label out of range for " + convention);
      if (ax <= prev) fail("ParseError", "idx must be strictly increasing");
      prev = ax;
      axes.push_back(ax);
    }
    if (static_cast<int>(axes.size()) != degree)
      fail("ParseError", "idx length does not match degree");
    a.accumulate(mask_of(axes), e.c);
  }
  return a;
}

std::string FormDocument::to_json() const {
  json j;
  j["dim"] = dim;
  j["degree"] = degree;
  j["convention"] = convention;
  json list = json::array();
  for (const Entry& e : coeffs) {
    json entry;
    entry["idx"] = e.idx;
    entry["c"] = number_json(e.c);
    list.push_back(entry);
  }
  j["coeffs"] = list;
  return j.dump(2);
}

FormDocument FormDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
  try {
    FormDocument doc;
    doc.dim = j.at("dim").get<int>();
    doc.degree = j.at("degree").get<int>();
    doc.convention = j.value("convention", default_convention(doc.dim));
    for (const auto& entry : j.at("coeffs")) {
      Entry e;
      e.idx = entry.at("idx").get<std::vector<int>>();
      e.c = entry.at("c").get<double>();
      doc.coeffs.push_back(std::move(e));
    }
    doc.to_form();  // enforce idx ordering and label range at parse time
    return doc;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("form document: ") + e.what());
  }
}

std::vector<Vec> parse_vectors(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail("ParseError", e.what());
  }
  try {
    std::vector<Vec> out;
    int dim = j.at("dim").get<int>();
    for (const auto& row : j.at("vectors")) {
      std::vector<double> vals = row.get<std::vector<double>>();
      if (static_cast<int>(vals.size()) != dim)
        fail("ParseError", "vector length does not match dim");
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = vals[i];
      out.push_back(v);
    }
    return out;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("vector document: ") + e.what());
  }
}

std::string format_real(double x) {
  if (is_exact_integer(x)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace io
}  // namespace calibra
