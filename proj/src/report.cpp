#include "mhs/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mhs/signature.hpp"
#include "mhs/weight.hpp"

namespace mhs {

namespace {

constexpr const char* kNotQh = "unavailable: not quasi-homogeneous";

Json rat(const Rational& r) { return to_string(r); }

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class Map>
Json keyed(const Map& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

Json pq_counts(const std::map<std::pair<int, int>, std::size_t>& m) {
  Json out = Json::object();
  for (const auto& [pq, d] : m) out[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
  return out;
}

class Stopwatch {
 public:
  explicit Stopwatch(Json& sink) : sink_(sink), last_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    sink_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  Json& sink_;
  std::chrono::steady_clock::time_point last_;
};

// The residue normalization constant (-1)^{n(n+1)/2} (2 pi i)^{n+1}.
std::string normalization_constant(std::size_t n) {
  const bool negative = (n * (n + 1) / 2) % 2 != 0;
  return std::string(negative ? "-" : "") + "(2 pi i)^" + std::to_string(n + 1) + " Res_f";
}

Rational eps_to_rational(double eps) {
  if (!(eps > 0) || !std::isfinite(eps))
    throw Error(ErrorCode::InvalidArgument, "oracle eps must be positive");
  Rational r(static_cast<long>(std::llround(eps * 1e12)), 1000000000000L);
  r.canonicalize();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "oracle eps is below 1e-12");
  return r;
}

Json residue_section(const MilnorAlgebra& a, const ResidueForm& r, Json& inv) {
  Json s;
  s["gram"] = matrix_json(r.gram);
  s["functional"] = Json::array();
  for (const auto& v : r.functional) s["functional"].push_back(rat(v));
  inv["gram_symmetric"] = r.gram.is_symmetric();
  try {
    s["hessian_pairing"] = rat(hessian_residue_check(a, r));
    inv["hessian_normalization"] = true;
  } catch (const Error& e) {
    s["hessian_pairing"] = e.what();
    inv["hessian_normalization"] = false;
  }
  s["normalization"] = {{"constant", normalization_constant(a.fiber_dimension())},
                        {"rule", "l(Hess f) = mu"}};
  return s;
}

struct QhData {
  SpectrumTable spectrum;
  HodgeGrading grading;
  Conjugation conjugation;
};

Json spectrum_section(const MilnorAlgebra& a, const QhData& q, Json& inv) {
  Json rows = Json::array();
  for (const auto& row : q.spectrum.rows)
    rows.push_back({{"monomial", a.format(row.monomial)},
                    {"level", rat(row.level)},
                    {"beta", rat(row.beta)},
                    {"unipotent", row.unipotent}});
  std::vector<Rational> beta, mirror;
  const Rational n(static_cast<long>(q.spectrum.n));
  for (const auto& row : q.spectrum.rows) {
    beta.push_back(row.beta);
    mirror.push_back(n - 1 - row.beta);
  }
  std::sort(beta.begin(), beta.end());
  std::sort(mirror.begin(), mirror.end());
  inv["spectrum_symmetric"] = beta == mirror;
  return rows;
}

Json hodge_section(const MilnorAlgebra& a, const QhData& q, Json& inv) {
  Json s;
  auto table = hodge_number_table(q.grading);
  s["numbers"] = {{"unipotent", pq_counts(table.unipotent)}, {"other", pq_counts(table.other)}};
  Json index = Json::array();
  for (std::size_t i = 0; i < a.mu(); ++i) {
    const auto& h = q.grading.index[i];
    const std::size_t k = q.conjugation.kappa[i];
    index.push_back({{"monomial", a.format(a.basis()[i])},
                     {"p", h.p},
                     {"q", h.q},
                     {"conjugate", a.format(a.basis()[k])},
                     {"conjugate_phase", "i^" + std::to_string(q.conjugation.exponent[i])}});
  }
  s["classes"] = std::move(index);
  s["flipped_orbits"] = q.conjugation.flipped_orbits;
  inv["opposite_filtrations"] = opposite_filtration_check(q.grading);
  bool involution = true;
  for (std::size_t i = 0; i < a.mu(); ++i)
    involution = involution && q.conjugation.kappa[q.conjugation.kappa[i]] == i;
  inv["conjugation_involution"] = involution;
  return s;
}

Json weight_section(const MilnorAlgebra& a, const ResidueForm& r, const QhData* q, Json& inv,
                    Json& bilinear) {
  Json s;
  const RatMatrix& n = a.germ_matrix();
  auto jp = jordan_partition_nilpotent(n);
  auto w = nilpotent_weight_filtration(n);
  auto p = primitive_parts(w, n);
  s["jordan_partition"] = jp.blocks;
  s["graded_dimensions"] = keyed(w.graded_dimensions());
  s["primitive_dimensions"] = keyed(p.dimensions());
  inv["jacobson_morosov"] = jacobson_morosov_axioms(w, n);
  inv["lefschetz"] = lefschetz_consistent(w, p, jp);

  std::optional<RatMatrix> ct;
  if (q) ct = weil_signs(q->grading).ctilde_matrix();
  try {
    auto lf = level_form(r, n, p, ct);
    Json forms = Json::object();
    for (const auto& [l, m] : lf.matrices) forms[std::to_string(l)] = matrix_json(m);
    s["level_forms"] = std::move(forms);
    s["twisted"] = lf.twisted;
  } catch (const Error& e) {
    s["level_forms"] = error_json(e);
  }

  std::optional<HodgeData> hd;
  if (q) hd = HodgeData{&q->grading, &q->conjugation};
  auto rep = bilinear_relation_check(r, n, w, p, hd);
  bilinear = {{"orthogonal", rep.orthogonal},
              {"well_defined", rep.well_defined},
              {"self_adjoint", rep.self_adjoint},
              {"nondegenerate", rep.nondegenerate},
              {"findings", rep.findings}};
  bilinear["definite"] = rep.definite ? Json(*rep.definite) : Json(kNotQh);
  bilinear["global_exponent"] = rep.global_exponent ? Json(*rep.global_exponent) : Json(nullptr);
  inv["bilinear_relations"] = rep.ok();
  return s;
}

Json signature_section(const ResidueForm& r, const QhData& q, Json& inv) {
  const long long formula = signature_formula(hodge_number_table(q.grading));
  auto direct = signature_direct(r, q.grading, q.conjugation);
  inv["signature_agreement"] = formula == direct.value();
  return {{"sigma_formula", formula},
          {"sigma_direct", direct.value()},
          {"calibration_sign", direct.calibration_sign},
          {"agree", formula == direct.value()}};
}

Json oracle_section(const MilnorAlgebra& a, const ResidueForm& r, const AnalyzeOptions& o) {
  Json s;
  s["eps"] = o.oracle_eps;
  s["seed"] = o.oracle_seed;
  try {
    auto m = morse_oracle(a, random_perturbation(a.nvars(), eps_to_rational(o.oracle_eps),
                                                 o.oracle_seed));
    s["max_deviation"] = max_deviation(m, r.gram);
    s["max_imaginary"] = m.max_imaginary;
  } catch (const Error& e) {
    s["error"] = error_json(e)["error"];
  }
  return s;
}

}  // namespace

GermSpec GermSpec::from_json(const Json& j) {
  GermSpec s;
  try {
    s.name = j.value("name", std::string());
    s.polynomial = j.at("polynomial").get<std::string>();
    if (j.contains("variables")) s.variables = j.at("variables").get<std::vector<std::string>>();
    if (j.contains("order")) s.order = j.at("order").get<std::string>();
    if (j.contains("expect")) s.expect = j.at("expect");
    if (j.contains("expect_error")) s.expect_error = j.at("expect_error").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed germ spec: ") + e.what());
  }
  if (!s.expect.is_object())
    throw Error(ErrorCode::InvalidArgument, "\"expect\" must be an object of JSON pointers");
  return s;
}

Json GermSpec::to_json() const {
  Json j{{"name", name}, {"polynomial", polynomial}, {"variables", variables}};
  if (order) j["order"] = *order;
  if (!expect.empty()) j["expect"] = expect;
  if (expect_error) j["expect_error"] = *expect_error;
  return j;
}

Json analyze(const GermSpec& spec, const AnalyzeOptions& options) {
  if (options.oracle) eps_to_rational(options.oracle_eps);  // reject bad input early
  Json report;
  Json timings = Json::object();
  Json inv = Json::object();
  Stopwatch clock(timings);

  auto vars = spec.variables.empty() ? infer_variables(spec.polynomial) : spec.variables;
  if (vars.empty()) throw Error(ErrorCode::ZeroGerm, "the germ has no variables");
  MonomialOrder order;
  if (spec.order) order.kind = parse_order_kind(*spec.order);
  Polynomial f = parse_polynomial(spec.polynomial, vars);
  MilnorAlgebra a(f, vars, order);
  clock.lap("milnor");

  report["version"] = kVersion;
  report["germ"] = {{"input", spec.polynomial},
                    {"polynomial", a.format(a.germ())},
                    {"variables", vars},
                    {"order", std::string(to_string(order.kind))}};
  report["mu"] = a.mu();
  report["fiber_dimension"] = a.fiber_dimension();
  report["localized"] = a.localized();
  Json basis = Json::array();
  for (const auto& m : a.basis()) basis.push_back(a.format(m));
  report["basis"] = std::move(basis);
  if (a.is_quasi_homogeneous()) {
    Json w = Json::array();
    for (const auto& x : a.weights()) w.push_back(rat(x));
    report["qh_weights"] = std::move(w);
  } else {
    report["qh_weights"] = kNotQh;
  }

  ResidueForm r = gram_matrix(a);
  report["residue"] = residue_section(a, r, inv);
  clock.lap("residue");

  std::optional<QhData> q;
  if (a.is_quasi_homogeneous()) {
    QhData d;
    d.spectrum = spectrum(a);
    d.grading = hodge_bigrading(d.spectrum);
    d.conjugation = conjugation_map(d.spectrum, d.grading, r);
    q = std::move(d);
    report["spectrum"] = spectrum_section(a, *q, inv);
    report["hodge"] = hodge_section(a, *q, inv);
  } else {
    report["spectrum"] = kNotQh;
    report["hodge"] = kNotQh;
  }
  clock.lap("hodge");

  Json bilinear;
  report["weight"] = weight_section(a, r, q ? &*q : nullptr, inv, bilinear);
  report["bilinear"] = std::move(bilinear);
  clock.lap("weight");

  report["signature"] = q ? signature_section(r, *q, inv) : Json(kNotQh);
  clock.lap("signature");

  if (options.oracle) {
    report["oracle"] = oracle_section(a, r, options);
    clock.lap("oracle");
  }
  report["invariants"] = std::move(inv);
  report["timings_ms"] = std::move(timings);
  return report;
}

Json comparable(Json report) {
  report.erase("timings_ms");
  return report;
}

std::vector<std::string> failed_invariants(const Json& report) {
  std::vector<std::string> out;
  if (!report.contains("invariants")) return out;
  for (const auto& [k, v] : report["invariants"].items())
    if (!v.get<bool>()) out.push_back(k);
  return out;
}

Json error_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::ZeroGerm:
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::NotIsolatedAtOrigin:
    case ErrorCode::NotQuasiHomogeneous:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

namespace {

Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + p.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, p.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& p, const Json& j) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  out << j.dump(2) << "\n";
}

GermOutcome check_one(const std::filesystem::path& file, bool update_golden) {
  GermOutcome o;
  o.name = file.stem().string();
  auto fail = [&](std::string why) {
    o.pass = false;
    o.problems.push_back(std::move(why));
  };
  GermSpec spec;
  try {
    spec = GermSpec::from_json(read_json(file));
  } catch (const Error& e) {
    fail(e.what());
    return o;
  }
  if (!spec.name.empty()) o.name = spec.name;
  const auto golden = file.parent_path() / "golden" / (file.stem().string() + ".json");

  Json report;
  try {
    report = comparable(analyze(spec));
  } catch (const Error& e) {
    report = error_json(e);
    const std::string code(to_string(e.code()));
    if (!spec.expect_error) fail("unexpected error " + code + ": " + e.what());
    else if (*spec.expect_error != code)
      fail("expected error " + *spec.expect_error + ", got " + code);
  }
  if (spec.expect_error && !report.contains("error"))
    fail("expected error " + *spec.expect_error + ", but the analysis succeeded");

  for (const auto& name : failed_invariants(report)) fail("invariant failed: " + name);
  for (const auto& [pointer, want] : spec.expect.items()) {
    Json::json_pointer ptr(pointer);
    if (!report.contains(ptr)) fail("expected " + pointer + " = " + want.dump() + ", missing");
    else if (report[ptr] != want)
      fail("expected " + pointer + " = " + want.dump() + ", got " + report[ptr].dump());
  }

  if (update_golden) {
    write_json(golden, report);
  } else if (!std::filesystem::exists(golden)) {
    fail("missing golden file " + golden.string());
  } else {
    Json want = read_json(golden);
    if (want != report)
      for (const auto& op : Json::diff(want, report))
        fail("golden mismatch: " + op["op"].get<std::string>() + " " +
             op["path"].get<std::string>() + (op.contains("value") ? " -> " + op["value"].dump() : ""));
  }
  return o;
}

void render(const Json& j, const std::string& path, std::ostringstream& out) {
  auto leaf = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_array()) {
    out << path << ":\n";
    for (const auto& row : j) {
      out << "  ";
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << leaf(row[i]);
      out << "\n";
    }
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << path << ": ";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << leaf(j[i]);
    out << "\n";
  } else {
    out << path << ": " << leaf(j) << "\n";
  }
}

}  // namespace

std::vector<GermOutcome> check_corpus(const std::filesystem::path& dir, bool update_golden) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::InvalidArgument, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<GermOutcome> out;
  for (const auto& f : files) out.push_back(check_one(f, update_golden));
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace mhs
