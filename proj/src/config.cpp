#include "holo/config.hpp"

#include <utility>

#include "holo/errors.hpp"
#include "json.hpp"

namespace holo {

namespace {

using Json = nlohmann::ordered_json;

Cx parse_complex(const Json& v, const char* what) {
  if (v.is_number()) return Cx{v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Cx{v[0].get<double>(), v[1].get<double>()};
  throw ConfigError(std::string(what) + " must be a number or [re, im]");
}

ExtComplex parse_ext(const Json& v, const char* what) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ExtComplex::inf();
    throw ConfigError(std::string(what) + ": the only string form is \"inf\"");
  }
  return ExtComplex::at(parse_complex(v, what));
}

CurvePt parse_curve_point(const Json& v, const char* what) {
  if (!v.is_object() || !v.contains("x") || !v.contains("y"))
    throw ConfigError(std::string(what) + " must be an object with x and y");
  return CurvePt{parse_complex(v.at("x"), what), parse_complex(v.at("y"), what)};
}

std::vector<Cx> parse_complex_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + " must be an array");
  std::vector<Cx> out;
  for (const Json& e : v) out.push_back(parse_complex(e, what));
  return out;
}

std::vector<CurvePt> parse_curve_points(const Json& v, const char* what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + " must be an array");
  std::vector<CurvePt> out;
  for (const Json& e : v) out.push_back(parse_curve_point(e, what));
  return out;
}

SurfaceModel parse_surface(const Json& s) {
  if (!s.is_object() || !s.contains("family"))
    throw ConfigError("surface must be an object with a family tag");
  const std::string family = s.at("family").get<std::string>();

  if (family == "sphere") {
    SphereModel m;
    if (s.contains("punctures"))
      for (const Json& e : s.at("punctures")) m.punctures.push_back(parse_ext(e, "puncture"));
    if (s.contains("accumulation"))
      for (const Json& e : s.at("accumulation"))
        m.accumulation.push_back(parse_ext(e, "accumulation point"));
    return m;
  }
  if (family == "cstar") {
    CStarModel m;
    if (s.contains("removed")) m.removed = parse_complex_list(s.at("removed"), "removed point");
    return m;
  }
  if (family == "torus") {
    TorusModel m;
    if (s.contains("modulus")) m.modulus = parse_complex(s.at("modulus"), "modulus");
    if (s.contains("punctures")) m.punctures = parse_curve_points(s.at("punctures"), "puncture");
    return m;
  }
  if (family == "hyperelliptic") {
    HyperellipticModel m;
    if (s.contains("branch")) m.branch = parse_complex_list(s.at("branch"), "branch point");
    if (s.contains("lead")) m.lead = parse_complex(s.at("lead"), "lead");
    if (s.contains("punctures")) m.punctures = parse_curve_points(s.at("punctures"), "puncture");
    return m;
  }
  if (family == "infinite_genus") {
    InfiniteGenusModel m;
    if (s.contains("f_roots")) m.f_roots = parse_complex_list(s.at("f_roots"), "root");
    if (s.contains("punctures")) m.punctures = parse_curve_points(s.at("punctures"), "puncture");
    return m;
  }
  throw ConfigError("unknown surface family: " + family);
}

Json dump_complex(Cx z) { return Json::array({z.real(), z.imag()}); }

Json dump_ext(const ExtComplex& p) {
  if (p.infinite) return Json("inf");
  return dump_complex(p.value);
}

Json dump_curve_point(const CurvePt& q) {
  Json j = Json::object();
  j["x"] = dump_complex(q.x);
  j["y"] = dump_complex(q.y);
  return j;
}

struct SurfaceDumper {
  Json operator()(const SphereModel& m) const {
    Json j = Json::object();
    j["family"] = "sphere";
    j["punctures"] = Json::array();
    for (const ExtComplex& p : m.punctures) j["punctures"].push_back(dump_ext(p));
    j["accumulation"] = Json::array();
    for (const ExtComplex& p : m.accumulation) j["accumulation"].push_back(dump_ext(p));
    return j;
  }
  Json operator()(const CStarModel& m) const {
    Json j = Json::object();
    j["family"] = "cstar";
    j["removed"] = Json::array();
    for (const Cx& t : m.removed) j["removed"].push_back(dump_complex(t));
    return j;
  }
  Json operator()(const TorusModel& m) const {
    Json j = Json::object();
    j["family"] = "torus";
    j["modulus"] = dump_complex(m.modulus);
    j["punctures"] = Json::array();
    for (const CurvePt& q : m.punctures) j["punctures"].push_back(dump_curve_point(q));
    return j;
  }
  Json operator()(const HyperellipticModel& m) const {
    Json j = Json::object();
    j["family"] = "hyperelliptic";
    j["branch"] = Json::array();
    for (const Cx& e : m.branch) j["branch"].push_back(dump_complex(e));
    j["lead"] = dump_complex(m.lead);
    j["punctures"] = Json::array();
    for (const CurvePt& q : m.punctures) j["punctures"].push_back(dump_curve_point(q));
    return j;
  }
  Json operator()(const InfiniteGenusModel& m) const {
    Json j = Json::object();
    j["family"] = "infinite_genus";
    j["f_roots"] = Json::array();
    for (const Cx& r : m.f_roots) j["f_roots"].push_back(dump_complex(r));
    j["punctures"] = Json::array();
    for (const CurvePt& q : m.punctures) j["punctures"].push_back(dump_curve_point(q));
    return j;
  }
};

JobConfig parse_fields(const Json& doc);

}  // namespace

JobConfig parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  try {
    return parse_fields(doc);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed config field: ") + e.what());
  }
}

namespace {

JobConfig parse_fields(const Json& doc) {
  JobConfig cfg;
  if (!doc.contains("surface")) throw ConfigError("config requires a surface section");
  cfg.surface = parse_surface(doc.at("surface"));

  if (doc.contains("truncation")) cfg.truncation = doc.at("truncation").get<int>();
  if (doc.contains("checks")) {
    if (!doc.at("checks").is_array()) throw ConfigError("checks must be an array of names");
    for (const Json& c : doc.at("checks")) cfg.checks.push_back(c.get<std::string>());
  }
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("probes")) cfg.probes = doc.at("probes").get<std::size_t>();

  if (doc.contains("sampling")) {
    const Json& s = doc.at("sampling");
    if (s.contains("center")) cfg.sampling.center = parse_complex(s.at("center"), "center");
    if (s.contains("radius")) cfg.sampling.radius = s.at("radius").get<double>();
    if (s.contains("count")) cfg.sampling.count = s.at("count").get<int>();
    if (s.contains("seed")) cfg.sampling.seed = s.at("seed").get<std::uint64_t>();
    if (cfg.sampling.radius <= 0.0) throw ConfigError("sampling radius must be positive");
    if (cfg.sampling.count < 1) throw ConfigError("sampling count must be at least 1");
  }
  if (doc.contains("output")) {
    const Json& o = doc.at("output");
    if (o.contains("artifact")) cfg.output.artifact = o.at("artifact").get<std::string>();
    if (o.contains("report")) cfg.output.report = o.at("report").get<std::string>();
    if (o.contains("samples")) cfg.output.samples = o.at("samples").get<std::string>();
  }
  if (doc.contains("tamper")) cfg.tamper = doc.at("tamper").get<std::string>();
  return cfg;
}

}  // namespace

std::string serialize_config(const JobConfig& config) {
  Json doc = Json::object();
  doc["surface"] = std::visit(SurfaceDumper{}, config.surface);
  doc["truncation"] = config.truncation;
  doc["checks"] = config.checks;
  doc["seed"] = config.seed;
  doc["probes"] = config.probes;
  doc["sampling"] = Json::object();
  doc["sampling"]["center"] = dump_complex(config.sampling.center);
  doc["sampling"]["radius"] = config.sampling.radius;
  doc["sampling"]["count"] = config.sampling.count;
  doc["sampling"]["seed"] = config.sampling.seed;
  doc["output"] = Json::object();
  doc["output"]["artifact"] = config.output.artifact;
  doc["output"]["report"] = config.output.report;
  doc["output"]["samples"] = config.output.samples;
  if (!config.tamper.empty()) doc["tamper"] = config.tamper;
  return doc.dump(2) + "\n";
}

}  // namespace holo
