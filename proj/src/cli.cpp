#include "shiftcis/cli.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "shiftcis/errors.hpp"
#include "shiftcis/exactset.hpp"
#include "shiftcis/io.hpp"
#include "shiftcis/lerch.hpp"
#include "shiftcis/operatorlab.hpp"
#include "shiftcis/splinekernel.hpp"
#include "shiftcis/symbolcurve.hpp"

namespace shiftcis {

namespace {

struct Alpha {
  double value = 0.0;
  bool exact = false;  // given as p/q
  Rational q;
  std::string text;
};

Alpha parse_alpha(const std::string& text, const char* name = "alpha") {
  if (text.empty()) throw DomainError(std::string("--") + name + " is required");
  Alpha a;
  a.text = text;
  a.q = parse_rational(text);
  a.value = to_double(a.q);
  a.exact = text.find('/') != std::string::npos;
  return a;
}

std::string canonical_job(const JobSpec& job) {
  std::ostringstream ss;
  ss << job.command << '|' << job.alpha << '|' << job.beta << '|' << job.family << '|' << job.m << '|';
  for (int n : job.sections) ss << n << ',';
  ss << '|' << job.grid << '|' << job.seed << '|' << job.samples;
  return ss.str();
}

json header(const JobSpec& job, const std::string& input_bytes) {
  return json{{"tool", "shiftcis"},
              {"version", kVersion},
              {"command", job.command},
              {"input_digest", digest_hex(canonical_job(job) + '\n' + input_bytes)}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ParseError("write to '" + path + "' failed");
}

TransversalSet load_set(const std::string& path, std::string& bytes) {
  if (path.empty()) throw DomainError("--input is required");
  bytes = read_file(path);
  return validate_transversal(intervals_from_json(parse_json_text(bytes, path)));
}

json verdict_json(const SplineVerdict& v) {
  json j{{"verdict", v.cis ? "CIS" : "NotCIS"}, {"min_modulus", v.min_modulus}};
  j["reason"] = v.reason.empty() ? json(nullptr) : json(v.reason);
  j["index"] = v.reason == "SymbolVanishes" ? json(nullptr) : json(v.index);
  return j;
}

json cmd_transversal(const JobSpec& job, std::string& bytes) {
  TransversalSet set = load_set(job.input_path, bytes);
  CongruenceData cd = congruence_decompose(set);
  AlphaRegion region = admissible_region(cd);
  json out;
  out["set"] = intervals_to_json(set.pieces())["intervals"];
  out["congruence"] = congruence_to_json(cd);
  out["region"] = region_to_json(region);
  json adm = json::array();
  for (const auto& iv : region.admissible_intervals()) adm.push_back(interval_to_json(iv));
  out["admissible"] = adm;
  return out;
}

json cmd_winding(const JobSpec& job, std::string& bytes) {
  TransversalSet set = load_set(job.input_path, bytes);
  CongruenceData cd = congruence_decompose(set);
  Alpha a = parse_alpha(job.alpha);
  long long idx = a.exact ? index_formula(cd, a.q) : index_formula(cd, a.value);
  SymbolCurve curve = build_symbol_curve(cd, a.value);
  json out;
  out["alpha"] = a.text;
  out["index"] = idx;
  out["curve_index"] = curve_index(curve);
  out["numeric_index"] = numeric_winding_adaptive(curve);
  out["min_modulus"] = curve_min_modulus(curve);
  out["closure_defect"] = curve.closure_defect();
  out["pieces"] = curve.pieces().size();
  if (!job.csv_path.empty()) {
    std::ostringstream csv;
    write_curve_csv(csv, curve, job.samples);
    write_text(job.csv_path, csv.str());
  }
  return out;
}

json cmd_spline_cis(const JobSpec& job) {
  Alpha a = parse_alpha(job.alpha);
  SplineVerdict v = cis_classify_spline({job.m, a.value});
  json out{{"m", job.m}, {"alpha", a.text}};
  out.update(verdict_json(v));
  return out;
}

PolyR family_poly(const JobSpec& job) {
  if (job.family == "gm") return gm_poly(job.m, parse_alpha(job.beta, "beta").q);
  if (job.family == "euler-frobenius") return euler_frobenius(job.m);
  if (job.family == "modified-euler-frobenius") return modified_euler_frobenius(job.m);
  if (job.family == "euler") return euler_poly(job.m);
  if (job.family == "cot") return cot_poly(job.m);
  throw DomainError("unknown polynomial family '" + job.family + "'");
}

json cmd_gm(const JobSpec& job) {
  PolyR p = family_poly(job);
  json out{{"family", job.family}, {"m", job.m}};
  if (job.family == "gm") out["beta"] = job.beta;
  out["poly"] = poly_to_json(p);
  return out;
}

json cmd_zeros(const JobSpec& job, std::string& bytes) {
  PolyR p;
  json out;
  if (!job.input_path.empty()) {
    bytes = read_file(job.input_path);
    p = poly_from_json(parse_json_text(bytes, job.input_path));
  } else {
    p = family_poly(job);
    out["family"] = job.family;
    out["m"] = job.m;
    if (job.family == "gm") out["beta"] = job.beta;
  }
  if (p.is_zero()) throw DegenerateError("zero polynomial");
  out["poly"] = poly_to_json(p);
  out["zero_split"] = zero_split_to_json(zero_split(p));
  out["real_negative_simple"] = p.degree() >= 1 && real_negative_simple(p);
  return out;
}

json cmd_lerch(const JobSpec& job) {
  std::vector<HeatCell> heat;
  ZeroFreeReport r = zero_free_scan(job.m, job.grid, job.grid, job.jobs, job.csv_path.empty() ? nullptr : &heat);
  if (!job.csv_path.empty()) {
    std::ostringstream csv;
    write_heatmap_csv(csv, heat);
    write_text(job.csv_path, csv.str());
  }
  return json{{"m", r.m}, {"grid", job.grid}, {"min_abs", r.min_abs}, {"lambda_at", r.lambda_at}, {"x_at", r.x_at}};
}

json cmd_toeplitz(const JobSpec& job) {
  Alpha a = parse_alpha(job.alpha);
  SplineConfig cfg{job.m, a.value};
  auto rows = spline_section_sweep(cfg, job.sections, job.grid, job.jobs);
  json N = json::array(), cond = json::array(), smin = json::array(), smax = json::array();
  for (const auto& r : rows) {
    N.push_back(r.N);
    cond.push_back(r.cond);
    smin.push_back(r.singular_min);
    smax.push_back(r.singular_max);
  }
  json out{{"alpha", a.text}, {"m", job.m}, {"N", N}, {"cond", cond}, {"singular_min", smin}, {"singular_max", smax}};
  out.update(verdict_json(cis_classify_spline(cfg)));
  if (!job.csv_path.empty()) {
    std::ostringstream csv;
    write_sections_csv(csv, a.value, job.m, rows);
    write_text(job.csv_path, csv.str());
  }
  return out;
}

json cmd_reconstruct(const JobSpec& job, std::string& bytes) {
  Alpha a = parse_alpha(job.alpha);
  Generator gen = SplineGenerator{job.m};
  json out{{"alpha", a.text}, {"seed", job.seed}};
  if (!job.input_path.empty()) {
    TransversalSet set = load_set(job.input_path, bytes);
    CongruenceData cd = congruence_decompose(set);
    out["generator"] = "transversal";
    bool in_range = abs(a.q) <= cd.bound();
    long long idx = a.exact ? index_formula(cd, a.q) : index_formula(cd, a.value);
    out["index"] = idx;
    out["verdict"] = (idx == 0 && in_range) ? "CIS" : "NotCIS";
    gen = TransversalGenerator{std::move(set)};
  } else {
    out["generator"] = "spline";
    out["m"] = job.m;
    out.update(verdict_json(cis_classify_spline({job.m, a.value})));
  }

  std::vector<ReconstructionReport> reps(job.sections.size());
  if (job.jobs <= 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) reps[i] = reconstruct_experiment(gen, a.value, job.sections[i], job.seed);
  } else {
    std::vector<std::future<ReconstructionReport>> futs;
    for (int n : job.sections)
      futs.push_back(std::async(std::launch::async, [&gen, &a, n, &job] {
        return reconstruct_experiment(gen, a.value, n, job.seed);
      }));
    for (std::size_t i = 0; i < reps.size(); ++i) reps[i] = futs[i].get();
  }
  json N = json::array(), cond = json::array(), err = json::array(), inner = json::array(), res = json::array();
  for (const auto& r : reps) {
    N.push_back(r.N);
    cond.push_back(std::isfinite(r.cond) ? json(r.cond) : json("inf"));
    err.push_back(r.max_error);
    inner.push_back(r.inner_error);
    res.push_back(r.residual);
  }
  out["N"] = N;
  out["cond"] = cond;
  out["recon_error"] = err;
  out["inner_error"] = inner;
  out["residual"] = res;
  return out;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.jobs < 1) throw DomainError("--jobs must be >= 1");
    std::string bytes;
    json body;
    const std::string& c = job.command;
    if (c == "transversal-analyze")
      body = cmd_transversal(job, bytes);
    else if (c == "winding")
      body = cmd_winding(job, bytes);
    else if (c == "spline-cis")
      body = cmd_spline_cis(job);
    else if (c == "gm")
      body = cmd_gm(job);
    else if (c == "zeros")
      body = cmd_zeros(job, bytes);
    else if (c == "lerch-scan")
      body = cmd_lerch(job);
    else if (c == "toeplitz-sweep")
      body = cmd_toeplitz(job);
    else if (c == "reconstruct")
      body = cmd_reconstruct(job, bytes);
    else
      throw DomainError("unknown command '" + c + "'");

    json doc = header(job, bytes);
    doc.update(body);
    std::string text = doc.dump(2) + "\n";
    if (job.output_path.empty())
      out << text;
    else
      write_text(job.output_path, text);
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Admissible shift parameters for complete interpolation sets"};
  app.set_version_flag("--version", kVersion);
  JobSpec job;
  app.add_option("--input", job.input_path, "Input JSON (transversal set or polynomial)");
  app.add_option("--output", job.output_path, "Write the JSON report here instead of stdout");
  app.add_option("--csv", job.csv_path, "Also write plot data as CSV");
  app.add_option("--alpha", job.alpha, "Shift parameter, decimal or p/q");
  app.add_option("--beta", job.beta, "Second argument of G_m, decimal or p/q");
  app.add_option("--family", job.family, "gm | euler-frobenius | modified-euler-frobenius | euler | cot");
  app.add_option("--m", job.m, "Spline order / polynomial index");
  app.add_option("--sections", job.sections, "Comma-separated section sizes")->delimiter(',');
  app.add_option("--grid", job.grid, "Grid size");
  app.add_option("--seed", job.seed, "Random seed");
  app.add_option("--jobs", job.jobs, "Worker threads for sweeps");
  app.add_option("--samples", job.samples, "Samples per piece for curve CSV output");
  app.require_subcommand(1);
  const std::pair<const char*, const char*> commands[] = {
      {"transversal-analyze", "Congruence data and admissible alpha region of a transversal set"},
      {"winding", "Symbol-curve winding number at one alpha"},
      {"spline-cis", "Complete-interpolation verdict for the B-spline space"},
      {"gm", "Exact coefficients of a polynomial family"},
      {"zeros", "Zero split of a polynomial about the unit circle"},
      {"lerch-scan", "Zero-free scan of the doubly infinite Lerch sum"},
      {"toeplitz-sweep", "Finite-section condition numbers of the spline symbol"},
      {"reconstruct", "Sampling/reconstruction error experiment"},
  };
  for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  job.command = app.get_subcommands().front()->get_name();
  return run(job, out, err);
}

}  // namespace shiftcis
