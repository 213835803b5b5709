#include "holo/job.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <utility>

#include "holo/errors.hpp"
#include "holo/verify.hpp"
#include "json.hpp"

namespace holo {

namespace {

using Json = nlohmann::ordered_json;

Json dump_complex(Cx z) { return Json::array({z.real(), z.imag()}); }

Json dump_curve_point(const CurvePt& q) {
  Json j = Json::object();
  j["x"] = dump_complex(q.x);
  j["y"] = dump_complex(q.y);
  return j;
}

Json dump_product(const EntireFn& f) {
  Json j = Json::object();
  j["leading"] = dump_complex(f.leading());
  j["roots"] = Json::array();
  for (const Cx& r : f.roots()) j["roots"].push_back(dump_complex(r));
  return j;
}

Json dump_coefficients(const EntireFn& f) {
  Json j = Json::array();
  for (const Cx& c : f.coefficients()) j.push_back(dump_complex(c));
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw Error("cannot open output file: " + path);
  ofs << content;
  if (!ofs) throw Error("failed writing output file: " + path);
}

}  // namespace

JobCommand parse_command(const std::string& name) {
  if (name == "construct") return JobCommand::Construct;
  if (name == "verify") return JobCommand::Verify;
  if (name == "sample") return JobCommand::Sample;
  if (name == "export") return JobCommand::Export;
  throw ConfigError("unknown command: " + name);
}

void apply_tamper(EmbeddingArtifact& artifact, const std::string& tamper) {
  if (tamper.empty()) return;
  if (tamper == "interpolant_offset") {
    artifact.interp_offset = Cx{1.0};
    return;
  }
  if (tamper == "constant_map") {
    artifact.constant_second = true;
    return;
  }
  if (tamper == "fullfiber_target_collide") {
    CurveGraph* cg = std::get_if<CurveGraph>(&artifact.graph);
    if (!cg) throw ConfigError("tamper fullfiber_target_collide needs a curve artifact");
    for (FiberColumn& col : artifact.columns) {
      if (col.kind != FiberKind::Full || col.removed.empty()) continue;
      // Sink the stored target onto one removed sheet value and rebuild the
      // numerator so the artifact still agrees with its own column data.
      col.y_target = col.removed.front().y;
      std::vector<std::pair<Cx, Cx>> nodes;
      for (const FiberColumn& c : artifact.columns) nodes.emplace_back(c.x, c.y_target);
      cg->shear.a = build_interpolant(nodes, cg->shear.b);
      return;
    }
    throw ConfigError("tamper fullfiber_target_collide needs a full fiber column");
  }
  throw ConfigError("unknown tamper: " + tamper);
}

std::string artifact_to_json(const EmbeddingArtifact& artifact) {
  Json doc = Json::object();
  doc["family"] = artifact.family;
  doc["truncation"] = artifact.truncation;
  doc["base"] = artifact.base == BaseCoord::First ? "first" : "second";

  doc["punctures"] = Json::array();
  for (const CurvePt& q : artifact.punctures) doc["punctures"].push_back(dump_curve_point(q));

  doc["columns"] = Json::array();
  for (const FiberColumn& col : artifact.columns) {
    Json j = Json::object();
    j["x"] = dump_complex(col.x);
    j["kind"] = col.kind == FiberKind::Full ? "full" : "half";
    j["y_target"] = dump_complex(col.y_target);
    j["removed"] = col.removed.size();
    doc["columns"].push_back(std::move(j));
  }

  if (const SphereGraph* sg = std::get_if<SphereGraph>(&artifact.graph)) {
    Json g = Json::object();
    g["type"] = "plane";
    g["denominator"] = dump_product(sg->q);
    doc["graph"] = std::move(g);
  } else {
    const CurveGraph& cg = std::get<CurveGraph>(artifact.graph);
    Json g = Json::object();
    g["type"] = "curve";
    g["p"] = dump_product(cg.curve.p());
    g["denominator"] = dump_product(cg.shear.b);
    g["numerator_coefficients"] = dump_coefficients(cg.shear.a);
    g["extension"] = Json::array();
    for (const ExtensionEntry& e : cg.extension) {
      Json je = Json::object();
      je["x"] = dump_complex(e.x);
      je["y_kept"] = dump_complex(e.y_kept);
      je["value"] = dump_complex(e.value);
      je["deriv"] = dump_complex(e.deriv);
      g["extension"].push_back(std::move(je));
    }
    doc["graph"] = std::move(g);

    ExtensionAudit audit = audit_extension_limits(artifact);
    Json ja = Json::object();
    ja["all_ok"] = audit.all_ok;
    ja["max_final_deviation"] = audit.max_final_deviation;
    ja["ladders"] = Json::array();
    for (const ExtensionLadder& lad : audit.ladders) {
      Json jl = Json::object();
      jl["x"] = dump_complex(lad.x);
      jl["deviation"] = Json::array({lad.deviation[0], lad.deviation[1], lad.deviation[2]});
      jl["decreasing"] = lad.decreasing;
      jl["converged"] = lad.converged;
      ja["ladders"].push_back(std::move(jl));
    }
    doc["extension_audit"] = std::move(ja);
  }

  if (const HyperellipticModel* h = std::get_if<HyperellipticModel>(&artifact.model)) {
    doc["genus"] = hyperelliptic_genus(h->branch.size());
    doc["weierstrass_points"] = weierstrass_point_count(h->branch.size());
  }
  if (std::abs(artifact.interp_offset) != 0.0 || artifact.constant_second) {
    Json jt = Json::object();
    jt["interp_offset"] = dump_complex(artifact.interp_offset);
    jt["constant_second"] = artifact.constant_second;
    doc["tamper_state"] = std::move(jt);
  }
  return doc.dump(2) + "\n";
}

std::string sample_table(const EmbeddingArtifact& artifact, const SamplingConfig& sampling) {
  const AffineCurve* curve = artifact.curve();
  std::string out = "sheet,base_re,base_im,out1_re,out1_im,out2_re,out2_im\n";

  auto emit = [&out, &artifact](std::size_t sheet, const CurvePt& pt) {
    std::array<Cx, 2> img = artifact.image(pt);
    out += std::to_string(sheet) + "," + fmt_double(pt.x.real()) + "," +
           fmt_double(pt.x.imag()) + "," + fmt_double(img[0].real()) + "," +
           fmt_double(img[0].imag()) + "," + fmt_double(img[1].real()) + "," +
           fmt_double(img[1].imag()) + "\n";
  };

  // Predictable first row: the region center on sheet 0.
  if (curve) {
    emit(0, curve->fiber(sampling.center).front());
  } else {
    emit(0, CurvePt{sampling.center, Cx{0.0}});
  }

  Rng rng(sampling.seed);
  const EntireFn& den = artifact.denominator();
  for (int row = 1; row < sampling.count; ++row) {
    bool emitted = false;
    for (int tries = 0; tries < 10000 && !emitted; ++tries) {
      Cx x = rng.in_disk(sampling.center, sampling.radius);
      if (std::abs(den.eval(x)) < 1e-12) continue;
      if (curve) {
        auto fib = curve->fiber(x);
        if (fib.size() < 2) continue;
        std::size_t sheet = rng.unit() < 0.5 ? 0 : 1;
        bool punctured = false;
        for (const CurvePt& q : artifact.punctures)
          punctured |= std::abs(fib[sheet].x - q.x) < 1e-9 && std::abs(fib[sheet].y - q.y) < 1e-9;
        if (punctured) continue;
        emit(sheet, fib[sheet]);
      } else {
        bool punctured = false;
        for (const CurvePt& q : artifact.punctures) punctured |= std::abs(x - q.x) < 1e-9;
        if (punctured) continue;
        emit(0, CurvePt{x, Cx{0.0}});
      }
      emitted = true;
    }
    if (!emitted) throw Error("sampling region is exhausted by exclusions");
  }
  return out;
}

int run_job(const JobConfig& config, JobCommand command, const std::string& out_dir,
            std::ostream& err) {
  try {
    EmbeddingArtifact artifact = embed_model(config.surface, config.truncation);
    apply_tamper(artifact, config.tamper);

    std::filesystem::path base =
        out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
    if (!out_dir.empty()) std::filesystem::create_directories(base);
    auto path_of = [&base](const std::string& name) { return (base / name).string(); };

    const bool wants_artifact =
        command == JobCommand::Construct || command == JobCommand::Export;
    const bool wants_report = command == JobCommand::Verify || command == JobCommand::Export;
    const bool wants_samples = command == JobCommand::Sample || command == JobCommand::Export;

    bool passed = true;
    if (wants_artifact) write_file(path_of(config.output.artifact), artifact_to_json(artifact));
    if (wants_report) {
      VerifyOptions opt;
      opt.seed = config.seed;
      opt.probes = config.probes;
      opt.checks = config.checks;
      VerificationReport report = verify_artifact(artifact, opt);
      write_file(path_of(config.output.report), report.serialize());
      passed = report.all_passed();
    }
    if (wants_samples)
      write_file(path_of(config.output.samples), sample_table(artifact, config.sampling));
    return passed ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "job failed: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace holo
