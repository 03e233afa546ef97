#include "faithcert/cli/run.hpp"

#include <fstream>
#include <memory>

#include "faithcert/ecurve/hesse.hpp"
#include "faithcert/errors.hpp"
#include "faithcert/lie/certificates.hpp"
#include "faithcert/lie/lie_algebra.hpp"
#include "faithcert/lie/uea.hpp"
#include "faithcert/rees/rees.hpp"
#include "faithcert/sklyanin/context.hpp"
#include "faithcert/sklyanin/tower.hpp"

namespace faithcert::cli {

using nlohmann::json;

namespace {

/// Runs `stage`; a hypothesis violation raised by a module becomes one
/// precondition-error record named `name`. Returns false in that case.
template <typename Stage>
bool guarded(CertificateReport& report, const std::string& name, const std::string& anchor, Stage&& stage) {
  try {
    stage();
    return true;
  } catch (const PreconditionError& e) {
    report.add(CheckRecord{name, anchor, Status::precondition_error, json{{"error", e.what()}}});
  } catch (const DegenerateConfiguration& e) {
    report.add(CheckRecord{name, anchor, Status::precondition_error, json{{"error", e.what()}}});
  } catch (const BackendMismatch& e) {
    report.add(CheckRecord{name, anchor, Status::precondition_error, json{{"error", e.what()}}});
  } catch (const DimensionMismatch& e) {
    report.add(CheckRecord{name, anchor, Status::precondition_error, json{{"error", e.what()}}});
  }
  return false;
}

struct LieInput {
  std::shared_ptr<const lie::LieAlgebra> algebra;
  lie::UeaElement x;
};

LieInput build_lie(const LieConfig& cfg, Field field) {
  lie::LieAlgebra algebra = [&] {
    if (cfg.builtin) return lie::LieAlgebra::builtin(*cfg.builtin, field);
    std::vector<lie::StructureConstant> brackets;
    for (const auto& b : cfg.structure_constants) brackets.push_back({b.i, b.j, b.k, Scalar::parse(field, b.value)});
    try {
      return lie::LieAlgebra::from_brackets(field, cfg.dim, brackets, cfg.labels);
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }();
  auto ptr = std::make_shared<const lie::LieAlgebra>(std::move(algebra));
  Vector x_lie(ptr->dim(), Scalar::zero(field));
  if (cfg.x.empty()) {
    x_lie[0] = Scalar::one(field);
  } else {
    for (std::size_t i = 0; i < cfg.x.size(); ++i) x_lie[i] = Scalar::parse(field, cfg.x[i]);
  }
  auto x = lie::UeaElement::from_lie(ptr, x_lie) + lie::UeaElement::scalar(ptr, Scalar::parse(field, cfg.mu));
  return {ptr, std::move(x)};
}

ecurve::ProjPoint point(Field field, const CurveConfig::Triple& t) {
  return ecurve::ProjPoint::make(Scalar::parse(field, t[0]), Scalar::parse(field, t[1]), Scalar::parse(field, t[2]));
}

void run_sklyanin(const RunConfig& config, Field field, CertificateReport& report) {
  const CurveConfig& cfg = *config.curve;
  std::optional<ecurve::HesseCurve> curve;
  std::optional<ecurve::ProjPoint> p, P, Q, S;
  bool all = false;
  const bool built = guarded(report, "ecurve.points_on_curve", "p, P, Q, S lie on E: x^3+y^3+z^3 = 3 psi xyz", [&] {
    curve.emplace(Scalar::parse(field, cfg.psi));
    p = point(field, cfg.p);
    P = point(field, cfg.P);
    Q = point(field, cfg.Q);
    S = point(field, cfg.S);
    json data = json::object();
    all = true;
    for (const auto& [name, pt] : {std::pair{"p", &*p}, {"P", &*P}, {"Q", &*Q}, {"S", &*S}}) {
      const bool on = ecurve::on_curve(*curve, *pt);
      all = all && on;
      data[name] = {{"point", pt->to_string()}, {"on_curve", on}};
    }
    report.add(CheckRecord{"ecurve.points_on_curve", "p, P, Q, S lie on E: x^3+y^3+z^3 = 3 psi xyz",
                           all ? Status::pass : Status::precondition_error, data});
  });
  if (!built || !all) return;

  sklyanin::SklyaninCaps caps;
  caps.d = config.caps.sklyanin_d();
  caps.n_max = config.caps.n_max;
  caps.tensor_cap = config.caps.tensor_cap;
  caps.sample_margin = config.caps.sample_margin;
  caps.torsion_bound = config.caps.torsion_bound;
  std::unique_ptr<sklyanin::SklyaninContext> ctx;
  if (!guarded(report, "sklyanin.context", "A = T(V)/(R_2) built from (E, sigma)", [&] {
        ctx = std::make_unique<sklyanin::SklyaninContext>(*curve, *p, caps);
      }))
    return;
  guarded(report, "sklyanin.suite", "AL_n tower hypotheses", [&] {
    report.append(sklyanin::sklyanin_suite(*ctx, *P, *Q, *S));
  });
}

}  // namespace

CertificateReport run(const RunConfig& config) {
  validate(config);
  const Field field = Field::parse(config.backend);
  CertificateReport report;

  if (config.runs(Suite::env) || config.runs(Suite::rees)) {
    std::optional<LieInput> input;
    if (guarded(report, "env.input", "g is a Lie algebra and x = x' + mu in U(g)",
                [&] { input = build_lie(*config.lie, field); })) {
      if (config.runs(Suite::env)) {
        guarded(report, "env.suite", "U/Ux faithful", [&] {
          const auto d = config.caps.env_d();
          report.append(lie::env_suite(input->algebra, input->x, d, config.caps.shifts(input->algebra->dim())));
        });
      }
      if (config.runs(Suite::rees)) {
        guarded(report, "rees.suite", "ann_U(U/Ux) = 0 iff ann_R(R/R x~) = 0", [&] {
          report.append(rees::verify_rees_transfer(input->x, config.caps.env_d()));
        });
      }
    }
  }
  if (config.runs(Suite::sklyanin)) run_sklyanin(config, field, report);
  return report;
}

int exit_code(Status verdict) {
  switch (verdict) {
    case Status::pass:
    case Status::skipped: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
    case Status::precondition_error: return 3;
  }
  return 3;
}

json report_to_json(const CertificateReport& report) {
  json checks = json::array();
  json timing = json::array();
  double total = 0.0;
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"data", c.data}});
    timing.push_back({{"name", c.name}, {"elapsed_ms", c.elapsed_ms}});
    total += c.elapsed_ms;
  }
  return json{{"schema", kReportSchema},
              {"verdict", to_string(report.verdict())},
              {"checks", std::move(checks)},
              {"timing", {{"checks", std::move(timing)}, {"total_ms", total}}}};
}

CertificateReport report_from_json(const json& j) {
  if (j.value("schema", "") != kReportSchema) throw std::runtime_error("unsupported report schema");
  CertificateReport report;
  const json* timing = nullptr;
  if (j.contains("timing") && j["timing"].contains("checks")) timing = &j["timing"]["checks"];
  const auto& checks = j.at("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    CheckRecord record{c.at("name").get<std::string>(), c.at("anchor").get<std::string>(),
                       status_from_string(c.at("status").get<std::string>()), c.value("data", json::object())};
    if (timing && i < timing->size()) record.elapsed_ms = (*timing)[i].value("elapsed_ms", 0.0);
    report.add(std::move(record));
  }
  return report;
}

void emit_report(const CertificateReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << report_to_json(report).dump(2) << '\n';
  if (!out) throw std::runtime_error(path + ": write failed");
}

CertificateReport parse_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open report");
  return report_from_json(json::parse(in));
}

}  // namespace faithcert::cli
