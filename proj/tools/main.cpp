// mhs: command-line front end. Every subcommand prints JSON (or its text
// view) on stdout. Bad input exits with 2, a failed invariant with 1.

#include <iostream>

#include "CLI11.hpp"
#include "mhs/report.hpp"

namespace {

struct Common {
  std::string germ;
  std::string vars;
  std::string order = "grevlex";
  std::string format = "json";
  bool oracle = false;
  double oracle_eps = 1e-3;
};

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void emit(const mhs::Json& j, const std::string& format) {
  if (format == "text") std::cout << mhs::render_text(j);
  else std::cout << j.dump(2) << "\n";
}

// Runs the pipeline and prints the selected keys; an empty selection prints
// the whole report.
int run(const Common& c, const std::vector<std::string>& keys) {
  mhs::GermSpec spec;
  spec.polynomial = c.germ;
  spec.variables = split_vars(c.vars);
  spec.order = c.order;
  mhs::AnalyzeOptions opts;
  opts.oracle = c.oracle;
  opts.oracle_eps = c.oracle_eps;
  try {
    mhs::Json report = mhs::analyze(spec, opts);
    mhs::Json out = report;
    if (!keys.empty()) {
      out = mhs::Json::object();
      for (const auto& k : keys) {
        const auto& v = report.at(k);
        if (v.is_string() && v.get<std::string>().rfind("unavailable", 0) == 0) {
          emit(mhs::error_json(mhs::Error(mhs::ErrorCode::NotQuasiHomogeneous,
                                          k + " is " + v.get<std::string>())),
               c.format);
          return 2;
        }
        out[k] = v;
      }
      out["version"] = report["version"];
    }
    emit(out, c.format);
    return mhs::failed_invariants(report).empty() ? 0 : 1;
  } catch (const mhs::Error& e) {
    emit(mhs::error_json(e), c.format);
    return mhs::is_input_error(e.code()) ? 2 : 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor algebra, residue pairing and Hodge data of an isolated hypersurface germ"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mhs::kVersion));

  Common c;
  auto germ_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("germ", c.germ, "polynomial, e.g. \"x^3 + y^4\"")->required();
    sub->add_option("--vars", c.vars, "comma-separated variables (default: inferred, sorted)");
    sub->add_option("--order", c.order, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };

  auto* analyze = germ_command("analyze", "full report");
  auto* spectrum = germ_command("spectrum", "spectrum and Hodge numbers (qh germs)");
  auto* residue = germ_command("residue-matrix", "basis and residue Gram matrix");
  auto* weight = germ_command("weight-filtration", "weight filtration, level forms, bilinear checks");
  auto* signature = germ_command("signature", "signature by formula and by inertia (qh germs)");
  for (auto* sub : {analyze, residue}) {
    sub->add_flag("--oracle", c.oracle, "cross-check the Gram matrix with the Morse-sum oracle");
    sub->add_option("--oracle-eps", c.oracle_eps, "perturbation scale for the oracle")
        ->check(CLI::PositiveNumber);
  }

  std::string corpus;
  bool update_golden = false;
  auto* check = app.add_subcommand("check", "run the corpus against its goldens");
  check->add_option("corpus", corpus, "corpus directory")->required();
  check->add_flag("--update-golden", update_golden, "rewrite golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) return run(c, {});
  if (*spectrum) return run(c, {"germ", "spectrum", "hodge"});
  if (*residue) {
    std::vector<std::string> keys{"germ", "mu", "basis", "residue"};
    if (c.oracle) keys.push_back("oracle");
    return run(c, keys);
  }
  if (*weight) return run(c, {"germ", "mu", "weight", "bilinear"});
  if (*signature) return run(c, {"germ", "signature"});

  try {
    auto outcomes = mhs::check_corpus(corpus, update_golden);
    std::size_t failed = 0;
    for (const auto& o : outcomes) {
      std::cout << (o.pass ? "PASS " : "FAIL ") << o.name << "\n";
      for (const auto& p : o.problems) std::cout << "  " << p << "\n";
      failed += o.pass ? 0 : 1;
    }
    std::cout << outcomes.size() - failed << "/" << outcomes.size() << " germs passed"
              << (update_golden ? " (goldens updated)" : "") << "\n";
    return failed ? 1 : 0;
  } catch (const mhs::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
