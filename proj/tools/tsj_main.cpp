// tsj: command line front end.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsj/analysis.hpp"
#include "tsj/error.hpp"
#include "tsj/oracle.hpp"
#include "tsj/report.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kPrecondition = 3,
  kInternal = 4,
};

struct Options {
  std::string polynomial;
  std::string json_file;
  std::string batch_file;
  bool json = false;
  bool strata = false;
  bool integer_weights = false;
  bool trace = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tsj::InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

tsj::AnalysisInput input_from_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return tsj::input_from_json(text);
  return tsj::input_from_polynomial(text);
}

std::uint64_t oracle_seed() {
  const char* env = std::getenv("TSJ_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw tsj::InvalidArgument(std::string("TSJ_SEED must be a non-negative integer, got '") + env + "'");
  }
}

using Command = std::function<int(const tsj::AnalysisReport&, const Options&, std::ostream&)>;

int not_jacobian(const tsj::AnalysisReport& r) {
  std::cerr << "tsj: not a Jacobian semigroup ideal: mu = " << r.mu << ", rank = " << r.rank << "\n";
  return kPrecondition;
}

int run_analyze(const tsj::AnalysisReport& r, const Options& o, std::ostream& out) {
  const tsj::RenderOptions render{.strata_detail = o.strata, .integer_weights = o.integer_weights};
  out << (o.json ? tsj::analysis_json(r, render) : tsj::analysis_text(r, render));
  return kOk;
}

int run_reconstruct(const tsj::AnalysisReport& r, const Options& o, std::ostream& out) {
  if (!r.is_jacobian) return not_jacobian(r);
  const tsj::RenderOptions render{.trace = o.trace};
  out << (o.json ? tsj::reconstruction_json(r, render) : tsj::reconstruction_text(r, render));
  return kOk;
}

int run_classify(const tsj::AnalysisReport& r, const Options& o, std::ostream& out) {
  if (!r.is_jacobian) return not_jacobian(r);
  out << (o.json ? tsj::classification_json(r) : tsj::classification_text(r));
  return kOk;
}

int run_strata(const tsj::AnalysisReport& r, const Options& o, std::ostream& out) {
  if (!r.is_jacobian) return not_jacobian(r);
  out << (o.json ? tsj::strata_json(r) : tsj::strata_text(r));
  return kOk;
}

int run_oracle(const tsj::AnalysisReport& r, const Options&, std::ostream& out) {
  const auto results = tsj::oracle::cross_check(r, oracle_seed());
  bool ok = true;
  for (const auto& c : results) {
    out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    ok = ok && c.passed;
  }
  return ok ? kOk : kInternal;
}

// Runs one input and maps library errors to exit codes.
int run_one(const std::function<tsj::AnalysisInput()>& load, const Command& command, const Options& o,
            std::ostream& out) {
  try {
    const tsj::AnalysisReport report = tsj::analyze(load());
    return command(report, o, out);
  } catch (const tsj::ParseError& e) {
    std::cerr << "tsj: parse error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const tsj::InvalidArgument& e) {
    std::cerr << "tsj: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const tsj::PreconditionViolated& e) {
    std::cerr << "tsj: precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const tsj::InternalError& e) {
    std::cerr << "tsj: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "tsj: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int dispatch(const Command& command, const Options& o) {
  const int sources = !o.polynomial.empty() + !o.json_file.empty() + !o.batch_file.empty();
  if (sources != 1) {
    std::cerr << "tsj: give exactly one of POLY, --json-file or --batch\n";
    return kInvalidInput;
  }
  if (!o.batch_file.empty()) {
    std::string contents;
    try {
      contents = read_file(o.batch_file);
    } catch (const tsj::Error& e) {
      std::cerr << "tsj: " << e.what() << "\n";
      return kInvalidInput;
    }
    std::istringstream lines(contents);
    std::string line;
    int worst = kOk;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
      std::cout << "== " << line << "\n";
      worst = std::max(worst, run_one([&] { return input_from_text(line); }, command, o, std::cout));
    }
    return worst;
  }
  if (!o.json_file.empty()) {
    return run_one([&] { return tsj::input_from_json(read_file(o.json_file)); }, command, o, std::cout);
  }
  return run_one([&] { return tsj::input_from_polynomial(o.polynomial); }, command, o, std::cout);
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& description,
                      Options& o) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("POLY", o.polynomial, "polynomial, e.g. \"x^2 + y^2*z\"");
  sub->add_option("--json-file", o.json_file, "JSON support {\"n\":3,\"support\":[[2,0,0],[0,2,1]]}");
  sub->add_option("--batch", o.batch_file, "file with one polynomial or JSON support per line");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian semigroup ideals and Thom-Sebastiani reconstruction"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = add_command(app, "analyze", "full report", o);
  analyze->add_flag("--json", o.json, "JSON output");
  analyze->add_flag("--strata", o.strata, "list strata and logarithmic generators");
  analyze->add_flag("--weights-integer", o.integer_weights, "also print integer weights");

  auto* reconstruct = add_command(app, "reconstruct", "Thom-Sebastiani witness", o);
  reconstruct->add_flag("--json", o.json, "JSON output");
  reconstruct->add_flag("--trace", o.trace, "print the reconstruction steps");

  auto* classify = add_command(app, "classify", "singularity classification", o);
  classify->add_flag("--json", o.json, "JSON output");

  auto* strata = add_command(app, "strata", "logarithmic stratification", o);
  strata->add_flag("--json", o.json, "JSON output");

  auto* oracle = add_command(app, "oracle-check", "brute-force cross-checks (seed from TSJ_SEED)", o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (analyze->parsed()) return dispatch(run_analyze, o);
  if (reconstruct->parsed()) return dispatch(run_reconstruct, o);
  if (classify->parsed()) return dispatch(run_classify, o);
  if (strata->parsed()) return dispatch(run_strata, o);
  if (oracle->parsed()) return dispatch(run_oracle, o);
  return kInvalidInput;
}
