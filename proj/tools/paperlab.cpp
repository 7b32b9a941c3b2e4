#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paperlab/compute.hpp"
#include "paperlab/report.hpp"

using namespace paperlab;

namespace {

int run_example(std::uint32_t p, std::size_t d, std::optional<std::uint32_t> max_degree, bool stretch,
                const std::string& format, const std::string& out) {
  ScenarioReport report;
  try {
    const Scenario sc = d == 3 ? build_example_main(p) : build_example_general(p, d);
    report = run_verification(sc, VerifyOptions{max_degree, stretch});
  } catch (const Error& e) {
    std::cerr << "paperlab: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kResourceCap ? kExitResourceCap : kExitUsage;
  }
  try {
    emit_report(report, format == "text" ? ReportFormat::kText : ReportFormat::kJson, out);
  } catch (const Error& e) {
    std::cerr << "paperlab: " << e.what() << "\n";
    return kExitOutput;
  }
  return report.exit_code();
}

int run_compute_command(const std::string& op_name, const std::string& input, const std::string& out) {
  const auto op = parse_compute_op(op_name);
  std::string text;
  {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "paperlab: cannot read " << input << "\n";
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json result;
  try {
    result = run_compute(*op, parse_compute_text(text));
  } catch (const Error& e) {
    std::cerr << "paperlab: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::kResourceCap) return kExitResourceCap;
    if (e.code() == ErrorCode::kInternal) return kExitMismatch;
    return kExitUsage;
  }
  const std::string dump = result.dump(2) + "\n";
  if (out.empty()) {
    std::cout << dump;
    return kExitOk;
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  file << dump;
  file.flush();
  if (!file) {
    std::cerr << "paperlab: cannot write " << out << "\n";
    return kExitOutput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of modular invariant ring examples over prime fields"};
  app.require_subcommand(1);

  auto* example = app.add_subcommand("example", "build and verify a scenario");
  std::uint32_t p = 2;
  std::size_t d = 3;
  std::optional<std::uint32_t> max_degree;
  bool stretch = false;
  std::string format = "json";
  std::string out;
  example->add_option("--p", p, "prime characteristic")->required();
  example->add_option("--d", d, "number of blocks (at least 3)")->default_val(3);
  example->add_option("--max-degree", max_degree, "degree bound for generators of T^H")->check(CLI::PositiveNumber);
  example->add_flag("--stretch", stretch, "run the T^H pipeline outside p = 2, d = 3");
  example->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  example->add_option("--out", out, "output path (default stdout)");

  auto* compute = app.add_subcommand("compute", "Groebner basis, depth or presentation of user input");
  std::string op;
  std::string input;
  std::string compute_out;
  compute->add_option("operation", op, "groebner | depth | presentation")
      ->required()
      ->check(CLI::IsMember({"groebner", "depth", "presentation"}));
  compute->add_option("--input", input, "JSON input file")->required();
  compute->add_option("--out", compute_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*example) return run_example(p, d, max_degree, stretch, format, out);
  return run_compute_command(op, input, compute_out);
}
