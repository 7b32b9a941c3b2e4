#include "paperlab/report.hpp"

#include <cerrno>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paperlab/structure.hpp"

namespace paperlab {

using nlohmann::json;

const Check* Stage::find(const std::string& check) const {
  for (const Check& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

const Stage* ScenarioReport::stage(const std::string& name) const {
  for (const Stage& s : stages) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::size_t ScenarioReport::check_count() const {
  std::size_t n = 0;
  for (const Stage& s : stages) n += s.checks.size();
  return n;
}

std::size_t ScenarioReport::mismatch_count() const {
  std::size_t n = 0;
  for (const Stage& s : stages) {
    for (const Check& c : s.checks) n += c.match ? 0 : 1;
  }
  return n;
}

std::size_t ScenarioReport::error_count() const {
  std::size_t n = 0;
  for (const Stage& s : stages) n += s.status == StageStatus::kError ? 1 : 0;
  return n;
}

bool ScenarioReport::all_match() const { return mismatch_count() == 0 && error_count() == 0; }

int ScenarioReport::exit_code() const {
  for (const Stage& s : stages) {
    if (s.error == ErrorCode::kResourceCap) return kExitResourceCap;
  }
  return all_match() ? kExitOk : kExitMismatch;
}

namespace {

template <class Body>
Stage run_stage(std::string name, Body&& body) {
  Stage stage;
  stage.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(stage);
  } catch (const Error& e) {
    stage.status = StageStatus::kError;
    stage.error = e.code();
    stage.message = e.what();
  } catch (const std::exception& e) {
    stage.status = StageStatus::kError;
    stage.error = ErrorCode::kInternal;
    stage.message = e.what();
  }
  stage.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return stage;
}

void check(Stage& stage, std::string name, json expected, json computed) {
  const bool match = expected == computed;
  stage.checks.push_back(Check{std::move(name), std::move(expected), std::move(computed), match});
}

json matrix_rows(const MatrixFp& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t nonidentity_bireflections(const MatrixGroup& g) {
  std::size_t n = 0;
  for (const MatrixFp& e : g.elements()) {
    if (!e.is_identity() && is_bireflection(e)) ++n;
  }
  return n;
}

// sum_k Z^k * (c_k), top power first
std::string format_norm(const std::vector<Polynomial>& coefficients) {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (coefficients[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string z = k == 0 ? "" : k == 1 ? "Z" : "Z^" + std::to_string(k);
    const std::string c = format_polynomial(coefficients[k]);
    if (z.empty()) {
      out += "(" + c + ")";
    } else if (c == "1") {
      out += z;
    } else {
      out += "(" + c + ")*" + z;
    }
  }
  return out.empty() ? "0" : out;
}

json polynomial_list(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const Polynomial& f : polys) out.push_back(format_polynomial(f));
  return out;
}

void groups_stage(const Scenario& sc, Stage& s) {
  const ScenarioExpectations& e = sc.expected;
  check(s, "order_g", e.order_g, sc.g.order());
  check(s, "order_h", e.order_h, sc.h.order());
  check(s, "g_abelian", true, is_abelian(sc.g));
  check(s, "g_generated_by_bireflections", true, generated_by_bireflections(sc.g));
  check(s, "h_nonidentity_bireflections", 0, nonidentity_bireflections(sc.h));
  check(s, "h_generated_by_bireflections", false, generated_by_bireflections(sc.h));
  check(s, "galois_factors", e.galois_factors, elementary_abelian_quotient(sc.g, sc.h).invariant_factors);
  check(s, "h_nontrivial_character", false, has_nontrivial_character(sc.h));
  s.facts["g_nonidentity_bireflections"] = nonidentity_bireflections(sc.g);
  s.facts["h_abelian"] = is_abelian(sc.h);
}

void r_stage(const Scenario& sc, std::uint32_t max_degree, Stage& s) {
  const GeneratorSet gens = build_R_generators(sc);
  const auto polys = gens.polynomials();
  s.facts["generators"] = polynomial_list(polys);

  bool invariant = true;
  for (const Polynomial& f : polys) invariant = invariant && check_invariant(sc.g, f);
  check(s, "generators_invariant", true, invariant);

  const PresentedRing pr = presentation_ideal(polys);
  check(s, "presentation_ideal_zero", true, pr.ideal().is_zero_ideal());
  const RingVerdict v = depth_report(pr);
  check(s, "dimension", static_cast<int>(2 * sc.d), v.dimension);
  check(s, "cohen_macaulay", true, v.is_cohen_macaulay);

  const std::uint32_t window = std::max<std::uint32_t>(max_degree, 2 * sc.p + 4);
  const HilbertComparison cmp = hilbert_consistency(pr, sc.g, window);
  s.facts["hilbert_window"] = window;
  s.facts["hilbert_function"] = cmp.invariant;
  check(s, "hilbert_consistency", true, cmp.consistent);

  const RingPtr& r = sc.ring;
  for (std::size_t i = 0; i < sc.d; ++i) {
    const Polynomial x = Polynomial::variable(r, 2 * i);
    const Polynomial y = Polynomial::variable(r, 2 * i + 1);
    std::vector<Polynomial> closed(sc.p + 1, Polynomial(r));
    closed[sc.p] = Polynomial::constant(r, 1);
    closed[1] = -y.pow(sc.p - 1);
    closed[0] = -(x.pow(sc.p) - x * y.pow(sc.p - 1));
    const NormPolynomial norm = norm_polynomial(sc.g, r, 2 * i);
    check(s, "norm_identity_x" + std::to_string(i + 1), format_norm(closed), format_norm(norm.coefficients));
  }

  const IntegralityResult integral = integrality_certificate(sc.g, r, gens);
  check(s, "certificate", certificate_name(Certificate::kIntegralAndMatching),
        certificate_name(integral.generators.certificate));
  json offending = json::array();
  for (const auto& o : integral.offending) offending.push_back(o.describe());
  s.facts["offending_norm_coefficients"] = offending;
}

void s_stage(const Scenario& sc, std::uint32_t max_degree, Stage& s) {
  const RingPtr& r = sc.ring;
  const GeneratorSet gens = minimal_generators(sc.h, r, max_degree);
  s.facts["degree_bound"] = max_degree;
  s.facts["generators_by_degree"] = gens.count_by_degree();
  s.facts["generators"] = polynomial_list(gens.polynomials());

  bool invariant = true;
  for (const auto& e : gens.entries) invariant = invariant && check_invariant(sc.h, e.poly);
  check(s, "generators_invariant", true, invariant);

  const IntegralityResult integral = integrality_certificate(sc.h, r, gens);
  check(s, "certificate", certificate_name(Certificate::kIntegralAndMatching),
        certificate_name(integral.generators.certificate));
  s.facts["hilbert_window"] = integral.hilbert_window;

  const PresentedRing pr = presentation_ideal(gens.polynomials());
  bool sound = true;
  for (const Polynomial& f : pr.ideal().basis()) sound = sound && pr.substitute(f).is_zero();
  check(s, "substitution_soundness", true, sound);
  s.facts["presentation_variables"] = pr.num_vars();
  s.facts["presentation_relations"] = pr.ideal().basis().size();

  const FreeResolution res = free_resolution(pr);
  json betti = json::array();
  for (const auto& [key, value] : res.betti.entries) betti.push_back({key.first, key.second, value});
  s.facts["betti"] = betti;
  s.facts["betti_table"] = res.betti.to_string();
  s.facts["nonminimal_ranks"] = res.nonminimal_ranks;
  s.facts["cut_variables"] = res.cut_variables;

  const RingVerdict v = depth_report(pr, res);
  s.facts["projective_dimension"] = v.projective_dimension;
  check(s, "dimension", sc.expected.dimension, v.dimension);
  check(s, "depth", sc.expected.depth, v.depth);
  check(s, "cohen_macaulay", sc.expected.cm_defect == 0, v.is_cohen_macaulay);
  check(s, "cm_defect", sc.expected.cm_defect, v.cm_defect);
  check(s, "auslander_buchsbaum", true, v.depth + v.projective_dimension == v.num_vars);
  check(s, "euler_characteristic", true, v.euler_check);
}

}  // namespace

ScenarioReport run_verification(const Scenario& sc, const VerifyOptions& options) {
  ScenarioReport report;
  report.p = sc.p;
  report.d = sc.d;
  report.max_degree = options.max_degree.value_or(default_degree_bound(sc.p, sc.d));
  report.stretch = options.stretch;

  json g_gens = json::array(), h_gens = json::array();
  for (const MatrixFp& m : sc.g.generators()) g_gens.push_back(matrix_rows(m));
  for (const MatrixFp& m : sc.h.generators()) h_gens.push_back(matrix_rows(m));
  report.scenario = {{"p", sc.p},
                     {"d", sc.d},
                     {"max_degree", report.max_degree},
                     {"stretch", report.stretch},
                     {"variables", sc.ring->vars().names},
                     {"g_generators", g_gens},
                     {"h_generators", h_gens}};

  const std::uint32_t bound = report.max_degree;
  report.stages.push_back(run_stage("groups", [&](Stage& s) { groups_stage(sc, s); }));
  report.stages.push_back(run_stage("R", [&](Stage& s) { r_stage(sc, bound, s); }));
  if ((sc.p == 2 && sc.d == 3) || options.stretch) {
    report.stages.push_back(run_stage("S", [&](Stage& s) { s_stage(sc, bound, s); }));
  } else {
    Stage skipped;
    skipped.name = "S";
    skipped.status = StageStatus::kSkipped;
    skipped.message = "runs by default only for p = 2, d = 3; pass --stretch";
    report.stages.push_back(std::move(skipped));
  }
  return report;
}

namespace {

const char* status_name(StageStatus s) {
  switch (s) {
    case StageStatus::kOk: return "ok";
    case StageStatus::kError: return "error";
    case StageStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::string render_text(const ScenarioReport& report) {
  std::ostringstream out;
  out << "scenario: p=" << report.p << " d=" << report.d << " max_degree=" << report.max_degree
      << " stretch=" << (report.stretch ? "yes" : "no") << "\n";
  for (const Stage& s : report.stages) {
    out << "\n[" << s.name << "] " << status_name(s.status);
    if (s.error) out << " (" << error_code_name(*s.error) << ")";
    if (!s.message.empty()) out << ": " << s.message;
    out << "\n";
    for (const Check& c : s.checks) {
      std::string name = c.name;
      name.resize(std::max<std::size_t>(name.size(), 30), ' ');
      out << "  " << name << " expected " << c.expected.dump() << "  computed " << c.computed.dump() << "  "
          << (c.match ? "ok" : "MISMATCH") << "\n";
    }
    if (s.facts.contains("generators_by_degree")) {
      out << "  generators by degree: " << s.facts["generators_by_degree"].dump() << "\n";
    }
    if (s.facts.contains("presentation_variables")) {
      out << "  presentation: " << s.facts["presentation_variables"].get<std::size_t>() << " variables, "
          << s.facts["presentation_relations"].get<std::size_t>() << " relations\n";
    }
    if (s.facts.contains("projective_dimension")) {
      out << "  projective dimension: " << s.facts["projective_dimension"].dump() << "\n";
    }
    if (s.facts.contains("betti_table")) {
      out << "  Betti table (rows: internal degree, columns: homological index):\n";
      std::istringstream lines(s.facts["betti_table"].get<std::string>());
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }

  if (const Stage* s = report.stage("S"); s && s->status == StageStatus::kOk) {
    const Check* dim = s->find("dimension");
    const Check* depth = s->find("depth");
    const Check* cm = s->find("cohen_macaulay");
    const Check* defect = s->find("cm_defect");
    if (dim && depth && cm && defect) {
      out << "\nverdict: T^H is " << (cm->computed.get<bool>() ? "COHEN-MACAULAY" : "NOT COHEN-MACAULAY")
          << " (dim " << dim->computed.dump() << ", depth " << depth->computed.dump() << ", defect "
          << defect->computed.dump() << ")\n";
    }
  }
  out << "\nsummary: " << report.check_count() << " checks, " << report.mismatch_count() << " mismatches, "
      << report.error_count() << " stage errors\n";
  return out.str();
}

}  // namespace

json report_to_json(const ScenarioReport& report) {
  json stages = json::array();
  json timings = json::object();
  double total = 0.0;
  for (const Stage& s : report.stages) {
    json checks = json::array();
    for (const Check& c : s.checks) {
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    }
    json error = nullptr;
    if (s.error) error = {{"code", error_code_name(*s.error)}, {"message", s.message}};
    stages.push_back({{"name", s.name},
                      {"status", status_name(s.status)},
                      {"error", error},
                      {"note", s.status == StageStatus::kSkipped ? s.message : ""},
                      {"checks", checks},
                      {"facts", s.facts}});
    timings[s.name] = s.seconds;
    total += s.seconds;
  }
  timings["total"] = total;
  return {{"schema_version", kReportSchemaVersion},
          {"scenario", report.scenario},
          {"stages", stages},
          {"summary",
           {{"checks", report.check_count()},
            {"mismatches", report.mismatch_count()},
            {"stage_errors", report.error_count()},
            {"all_match", report.all_match()}}},
          {"timings", timings}};
}

json without_timings(json report) {
  report.erase("timings");
  return report;
}

std::string render_report(const ScenarioReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_to_json(report).dump(2) + "\n";
  return render_text(report);
}

void emit_report(const ScenarioReport& report, ReportFormat format, const std::string& path) {
  const std::string text = render_report(report, format);
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, path + ": " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, path + ": " + std::strerror(errno));
}

}  // namespace paperlab
