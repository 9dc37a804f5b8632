#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "helly/centers.hpp"
#include "helly/lower_bound.hpp"
#include "helly/pipeline.hpp"
#include "helly/types.hpp"

namespace helly {

/// Insertion-ordered JSON value with 17-significant-digit number output,
/// so identical runs serialize to identical bytes.
class Json {
 public:
  Json() : kind_(Kind::Null) {}
  Json(bool b) : kind_(Kind::Bool), bool_(b) {}
  Json(int v) : kind_(Kind::Int), int_(v) {}
  Json(std::int64_t v) : kind_(Kind::Int), int_(v) {}
  Json(std::size_t v) : kind_(Kind::Int), int_(static_cast<std::int64_t>(v)) {}
  Json(double v) : kind_(Kind::Real), real_(v) {}
  Json(const char* s) : kind_(Kind::Str), str_(s) {}
  Json(std::string s) : kind_(Kind::Str), str_(std::move(s)) {}

  static Json object() { Json j; j.kind_ = Kind::Obj; return j; }
  static Json array() { Json j; j.kind_ = Kind::Arr; return j; }
  static Json array_of(const Vector& v);
  static Json array_of(const std::vector<int>& v);
  static Json array_of(const std::vector<double>& v);

  Json& set(const std::string& key, Json v);
  Json& push(Json v);

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;
};

/// Format one double with 17 significant digits (round-trip exact).
std::string format_number(double v);

/// FNV-1a 64-bit over raw bytes, rendered as fnv1a:hex.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// An instance file: dimension, halfspaces, optional labels.
struct Instance {
  HPolytope body;
  std::vector<std::string> labels;
};

Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);

/// A unit-vector file for the lower-bound commands.
StripFamily parse_vectors(const std::string& text);
StripFamily read_vectors(const std::string& path);

/// Report payloads (deterministic; timings only on request).
Json selection_report(const SelectionResult& res, const std::string& input_hash);
Json center_report_json(const CenterReport& rep, int dim,
                        const std::string& input_hash);
Json lowerbound_report(const DiameterGapSummary& sum);
Json probe_report(const ConjectureProbe& probe, const std::string& input_hash);

/// Tolerance with optional env overrides HELLY_EPS_REL and
/// HELLY_CONTAINMENT_SLACK applied (values validated).
Tolerance tolerance_from_env();

}  // namespace helly
