#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helly/io.hpp"

namespace helly {

Json Json::array_of(const Vector& v) {
  Json a = array();
  for (int i = 0; i < v.size(); ++i) a.push(v[i]);
  return a;
}

Json Json::array_of(const std::vector<int>& v) {
  Json a = array();
  for (int x : v) a.push(x);
  return a;
}

Json Json::array_of(const std::vector<double>& v) {
  Json a = array();
  for (double x : v) a.push(x);
  return a;
}

Json& Json::set(const std::string& key, Json v) {
  obj_.emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  arr_.push_back(std::move(v));
  return *this;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";   // normalize -0.0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::Real: out += format_number(real_); break;
    case Kind::Str: escape_into(out, str_); break;
    case Kind::Arr: {
      if (arr_.empty()) { out += "[]"; break; }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < arr_.size(); ++i) {
        out += pad_in;
        arr_[i].write(out, indent, depth + 1);
        if (i + 1 < arr_.size()) out += ",";
        out += nl;
      }
      out += pad;
      out += "]";
      break;
    }
    case Kind::Obj: {
      if (obj_.empty()) { out += "{}"; break; }
      out += "{";
      out += nl;
      for (std::size_t i = 0; i < obj_.size(); ++i) {
        out += pad_in;
        escape_into(out, obj_[i].first);
        out += indent > 0 ? ": " : ":";
        obj_[i].second.write(out, indent, depth + 1);
        if (i + 1 < obj_.size()) out += ",";
        out += nl;
      }
      out += pad;
      out += "}";
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += "\n";
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("instance parse error: ") + e.what());
  }
  try {
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
      throw ParseError("instance: missing integer field 'dimension'");
    const int d = j["dimension"].get<int>();
    if (d < 2) throw ParseError("instance: dimension must be >= 2");
    if (!j.contains("halfspaces") || !j["halfspaces"].is_array() ||
        j["halfspaces"].empty())
      throw ParseError("instance: missing nonempty array 'halfspaces'");
    std::vector<Halfspace> hs;
    for (const auto& e : j["halfspaces"]) {
      if (!e.contains("normal") || !e["normal"].is_array() ||
          static_cast<int>(e["normal"].size()) != d || !e.contains("offset"))
        throw ParseError("instance: each halfspace needs a d-vector 'normal' "
                         "and a number 'offset'");
      Vector n(d);
      for (int i = 0; i < d; ++i) n[i] = e["normal"][i].get<double>();
      hs.push_back({n, e["offset"].get<double>()});
    }
    Instance inst;
    inst.body = HPolytope(d, std::move(hs));
    if (j.contains("labels")) {
      for (const auto& l : j["labels"])
        inst.labels.push_back(l.get<std::string>());
      if (!inst.labels.empty() &&
          inst.labels.size() != inst.body.halfspaces.size())
        throw ParseError("instance: labels must match halfspace count");
    }
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("instance parse error: ") + e.what());
  }
}

Instance read_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

std::string instance_to_json(const Instance& inst) {
  Json root = Json::object();
  root.set("dimension", inst.body.dim);
  Json hs = Json::array();
  for (const Halfspace& h : inst.body.halfspaces) {
    Json e = Json::object();
    e.set("normal", Json::array_of(h.normal));
    e.set("offset", h.offset);
    hs.push(std::move(e));
  }
  root.set("halfspaces", std::move(hs));
  if (!inst.labels.empty()) {
    Json ls = Json::array();
    for (const std::string& l : inst.labels) ls.push(l);
    root.set("labels", std::move(ls));
  }
  return root.dump();
}

StripFamily parse_vectors(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("vectors parse error: ") + e.what());
  }
  try {
    const int d = j.at("dimension").get<int>();
    if (d < 2) throw ParseError("vectors: dimension must be >= 2");
    StripFamily fam;
    fam.dim = d;
    for (const auto& row : j.at("vectors")) {
      if (static_cast<int>(row.size()) != d)
        throw ParseError("vectors: entry dimension mismatch");
      Vector v(d);
      for (int i = 0; i < d; ++i) v[i] = row[i].get<double>();
      fam.vectors.push_back(v);
    }
    if (fam.vectors.empty()) throw ParseError("vectors: empty list");
    return fam;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("vectors parse error: ") + e.what());
  }
}

StripFamily read_vectors(const std::string& path) {
  return parse_vectors(read_file(path));
}

namespace {

Json certificates_json(const std::vector<CertificateEntry>& certs) {
  Json arr = Json::array();
  for (const CertificateEntry& c : certs) {
    Json e = Json::object();
    e.set("name", c.name);
    e.set("pass", c.pass);
    e.set("value", c.value);
    e.set("limit", c.limit);
    arr.push(std::move(e));
  }
  return arr;
}

}  // namespace

Json selection_report(const SelectionResult& res,
                      const std::string& input_hash) {
  Json root = Json::object();
  root.set("command", "select");
  root.set("input_hash", input_hash);
  root.set("mode", to_string(res.mode));
  root.set("center", to_string(res.center_method));
  root.set("z", Json::array_of(res.z));
  root.set("lambda", res.lambda);
  Json sel = Json::object();
  sel.set("indices", Json::array_of(res.indices));
  sel.set("size", res.indices.size());
  sel.set("degenerate_center", res.selection.degenerate_center);
  sel.set("polar_chosen", Json::array_of(res.selection.chosen));
  root.set("selection", std::move(sel));
  Json f = Json::object();
  f.set("certified", res.certified_factor);
  f.set("measured", res.measured_factor);
  f.set("dimension_cap", res.dimension_cap);
  root.set("factors", std::move(f));
  Json r = Json::object();
  r.set("diameter", res.diam_ratio);
  if (res.vol_ratio) r.set("volume", *res.vol_ratio);
  root.set("ratios", std::move(r));
  root.set("subfamily_bounded", res.subfamily_bounded);

  // Every bound asserted above is backed by a named certificate below;
  // selection-level entries first, pipeline-level entries after.
  Json certs = Json::array();
  for (const CertificateEntry& c : res.selection.certificates) {
    Json e = Json::object();
    e.set("name", c.name);
    e.set("pass", c.pass);
    e.set("value", c.value);
    e.set("limit", c.limit);
    certs.push(std::move(e));
  }
  for (const CertificateEntry& c : res.certificates) {
    Json e = Json::object();
    e.set("name", c.name);
    e.set("pass", c.pass);
    e.set("value", c.value);
    e.set("limit", c.limit);
    certs.push(std::move(e));
  }
  root.set("certificates", std::move(certs));
  return root;
}

Json center_report_json(const CenterReport& rep, int dim,
                        const std::string& input_hash) {
  Json root = Json::object();
  root.set("command", "center");
  root.set("input_hash", input_hash);
  root.set("method", to_string(rep.method));
  root.set("z", Json::array_of(rep.z));
  root.set("lambda", rep.lambda);
  Json cert = Json::object();
  cert.set("name", "lambda_at_most_d");
  cert.set("pass", rep.lambda <= dim + 1e-6);
  cert.set("value", rep.lambda);
  cert.set("limit", dim + 1e-6);
  root.set("certificate", std::move(cert));
  return root;
}

Json lowerbound_report(const DiameterGapSummary& sum) {
  Json root = Json::object();
  root.set("command", "lowerbound");
  root.set("d", sum.d);
  root.set("n", sum.n);
  root.set("trials", sum.trials);
  root.set("seed", static_cast<std::int64_t>(sum.seed));
  root.set("covering_radius", sum.covering);
  Json diam = Json::object();
  diam.set("value", sum.diam_full);
  diam.set("cap", sum.diam_cap);
  diam.set("pass", sum.diam_ok);
  diam.set("certificate", "support_within_covering_cap");
  root.set("family_diameter", std::move(diam));
  root.set("resampled_degenerate_draws", sum.resampled);
  root.set("witness_norms", Json::array_of(sum.witness_norms));
  Json norms = Json::object();
  norms.set("min", sum.min_norm);
  norms.set("median", sum.median_norm);
  norms.set("bound", sum.norm_bound);
  norms.set("pass", sum.min_norm >= sum.norm_bound - 1e-6);
  norms.set("certificate", "witness_norm_at_least_d_over_sqrt_sigma");
  // both +-q lie in the symmetric strip intersection, so each witness
  // forces diam(K'_sigma) >= 2|q|
  norms.set("implied_diam_lower_min", 2.0 * sum.min_norm);
  norms.set("implied_diam_lower_median", 2.0 * sum.median_norm);
  root.set("norm_summary", std::move(norms));
  return root;
}

Json probe_report(const ConjectureProbe& probe,
                  const std::string& input_hash) {
  Json root = Json::object();
  root.set("command", "probe-conjecture2");
  root.set("input_hash", input_hash);
  root.set("bounded", probe.bounded);
  if (probe.bounded) {
    root.set("max_norm", probe.max_norm);
    root.set("argmax", Json::array_of(probe.argmax));
    root.set("target_sqrt_d", probe.target);
    root.set("meets_target", probe.meets_target);
  }
  root.set("note", "report only; the conjecture itself is not asserted");
  return root;
}

Tolerance tolerance_from_env() {
  Tolerance tol;
  if (const char* v = std::getenv("HELLY_EPS_REL")) tol.eps_rel = std::atof(v);
  if (const char* v = std::getenv("HELLY_CONTAINMENT_SLACK"))
    tol.containment_slack = std::atof(v);
  tol.validate();
  return tol;
}

}  // namespace helly
