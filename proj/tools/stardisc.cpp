// Command-line front end: bound calculators, exact and cover-based
// discrepancy, cover and chain construction, the constant audit and the
// seeded Monte Carlo check.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stardisc/bounds.hpp"
#include "stardisc/covers.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/errors.hpp"
#include "stardisc/io.hpp"
#include "stardisc/montecarlo.hpp"
#include "stardisc/report.hpp"

namespace {

using namespace stardisc;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kRefused = 3 };

struct Options {
  double q = 0.0;
  std::size_t s = 0;
  std::uint64_t n = 0;
  bool uniform = false;
  std::string format = "text";
  std::string q_list = "0.01,0.5,0.9,0.99,0.999";
  std::string s_list = "10,100";
  double eps = 0.0;
  std::optional<double> inverse_q;
  std::string input;
  std::string method = "exact";
  double delta = 0.01;
  std::optional<std::uint64_t> budget;
  bool bracket = false;
  std::string output;
  unsigned k = 0;
  std::string x;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::string parallelism = "auto";
  double ci_level = 0.99;
  std::string csv;
};

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::uint64_t budget_of(const Options& o) { return o.budget ? *o.budget : work_budget_from_env(); }

Method method_of(const Options& o) {
  if (o.method == "exact") return Method::exact;
  if (o.method == "cover") return Method::cover;
  throw input_error("--method must be exact or cover");
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Sends output to --output when given, stdout otherwise.
template <class Write>
void write_to(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write(out);
}

int cmd_bound(const Options& o) {
  const double coeff = o.uniform ? corollary_coefficient(o.q) : theorem_coefficient(o.q, o.s);
  const double value = o.uniform ? corollary_bound(o.q, o.s, o.n) : theorem_bound(o.q, o.s, o.n);
  const double threshold = trivial_regime_threshold(o.q, o.s);
  const bool trivial = static_cast<double>(o.n) < threshold;
  if (o.format == "json") {
    Json j = report_header("bound");
    j["inputs"] = {{"q", o.q}, {"s", o.s}, {"n", o.n}};
    j["form"] = o.uniform ? "corollary" : "theorem";
    j["coefficient"] = coeff;
    j["coefficient_display"] = round_up_cents(coeff);
    j["bound"] = value;
    j["regime"] = {{"trivial", trivial}, {"threshold", threshold}};
    emit(j);
  } else {
    std::cout << "bound        " << fixed(value, 3) << "  (" << format_real(value) << ")\n"
              << "coefficient  " << fixed(round_up_cents(coeff), 2) << "  ("
              << format_real(coeff) << ")\n"
              << "regime       " << (trivial ? "trivial" : "non-trivial")
              << "  (N >= " << fixed(threshold, 2) << " needed for the constant chain)\n";
  }
  return kOk;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_real_list(text)) {
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
      throw input_error("dimensions must be positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

int cmd_table(const Options& o) {
  const auto qs = parse_real_list(o.q_list);
  const auto dims = parse_dims(o.s_list);
  const auto t = coefficient_table(qs, dims);
  if (o.format == "json") {
    emit(table_to_json(t));
  } else if (o.format == "csv") {
    std::cout << "s,q,coefficient,display\n";
    for (std::size_t i = 0; i < dims.size(); ++i)
      for (std::size_t j = 0; j < qs.size(); ++j)
        std::cout << dims[i] << ',' << format_real(qs[j]) << ',' << format_real(t.values[i][j])
                  << ',' << fixed(round_up_cents(t.values[i][j]), 2) << '\n';
  } else if (o.format == "text") {
    std::cout << std::left << std::setw(10) << "q";
    for (double q : qs) std::cout << std::right << std::setw(9) << format_real(q);
    std::cout << '\n';
    for (std::size_t i = 0; i < dims.size(); ++i) {
      std::cout << std::left << std::setw(10) << ("c(q," + std::to_string(dims[i]) + ")");
      for (double v : t.values[i]) std::cout << std::right << std::setw(9) << fixed(round_up_cents(v), 2);
      std::cout << '\n';
    }
  } else {
    throw input_error("--format must be text, csv or json");
  }
  return kOk;
}

int cmd_inverse(const Options& o) {
  const auto existence = inverse_discrepancy_existence(o.s, o.eps);
  std::optional<std::uint64_t> theorem;
  if (o.inverse_q) theorem = inverse_discrepancy_theorem(*o.inverse_q, o.s, o.eps);
  if (o.format == "json") {
    Json j = report_header("inverse");
    j["inputs"] = {{"s", o.s}, {"eps", o.eps}};
    if (o.inverse_q) j["inputs"]["q"] = *o.inverse_q;
    j["existence"] = existence;
    if (theorem) j["theorem"] = *theorem;
    emit(j);
  } else {
    std::cout << "existence (c = 10)  N = " << existence << '\n';
    if (theorem)
      std::cout << "random, prob >= " << format_real(*o.inverse_q) << "  N = " << *theorem << '\n';
  }
  return kOk;
}

int cmd_disc(const Options& o) {
  const Method m = method_of(o);
  const auto points = load_point_set(o.input);
  const auto r = m == Method::exact ? star_discrepancy_exact(points, budget_of(o))
                                    : star_discrepancy_cover(points, o.delta, budget_of(o));
  if (o.format == "json") {
    emit(discrepancy_to_json(r, points));
  } else {
    std::cout << "method   " << to_string(r.method) << '\n';
    if (r.delta)
      std::cout << "D*       in [" << format_real(r.value) << ", " << format_real(r.value + *r.delta)
                << "]\n";
    else
      std::cout << "D*       " << format_real(r.value) << '\n';
    std::cout << "witness ";
    for (double c : r.witness.coords()) std::cout << ' ' << format_real(c);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_cover(const Options& o) {
  if (o.bracket) {
    const auto cover = equidistant_bracketing_cover(o.s, o.delta, budget_of(o));
    write_to(o.output, [&](std::ostream& out) { write_brackets(out, cover); });
  } else {
    auto cover = equidistant_cover(o.s, o.delta, budget_of(o));
    const PointSet members(o.s, std::move(cover.members));
    write_to(o.output, [&](std::ostream& out) { write_point_set(out, members); });
  }
  return kOk;
}

int cmd_chain(const Options& o) {
  const Point x(parse_real_list(o.x));
  if (x.dim() != o.s)
    throw input_error("--x has " + std::to_string(x.dim()) + " coordinates but --s is " +
                      std::to_string(o.s));
  const auto c = build_chain(x, o.k, budget_of(o));
  if (o.format == "json") {
    emit(chain_to_json(c));
  } else {
    for (unsigned k = 0; k < c.chain.size(); ++k) {
      std::cout << "p" << std::left << std::setw(3) << k;
      for (double v : c.chain[k].coords()) std::cout << ' ' << std::setw(22) << format_real(v);
      if (k <= c.levels)
        std::cout << " link measure " << format_real(box_difference_measure(c.link(k)));
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_audit(const Options& o) {
  const auto r = audit_proof(o.q, o.s, o.n);
  if (o.format == "json") {
    emit(audit_to_json(r));
  } else {
    std::cout << "K = " << r.constants.levels << ", L = " << format_real(r.constants.log_inv)
              << '\n';
    for (const auto& c : r.checks)
      std::cout << (c.pass ? "pass  " : "FAIL  ") << std::left << std::setw(22) << c.name
                << format_real(c.lhs) << " <= " << format_real(c.rhs) << '\n';
    std::cout << (r.overall ? "overall: pass\n" : "overall: FAIL\n");
  }
  return r.overall ? kOk : kInternal;
}

int cmd_generate(const Options& o) {
  const auto points = generate_uniform(o.s, o.n, o.seed);
  write_to(o.output, [&](std::ostream& out) {
    out << "# " << Philox4x32::kName << " seed " << o.seed << '\n';
    write_point_set(out, points);
  });
  return kOk;
}

int cmd_verify(const Options& o) {
  ExperimentConfig cfg;
  cfg.s = o.s;
  cfg.n = o.n;
  cfg.q = o.q;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.method = method_of(o);
  cfg.delta = o.delta;
  cfg.budget = budget_of(o);
  cfg.ci_level = o.ci_level;
  if (o.parallelism == "auto") {
    cfg.parallelism = 0;
  } else {
    const double p = parse_real(o.parallelism);
    if (!(p >= 1.0 && p <= 1024.0) || p != static_cast<double>(static_cast<unsigned>(p)))
      throw input_error("--parallelism must be a positive integer or auto");
    cfg.parallelism = static_cast<unsigned>(p);
  }
  const auto r = run_experiment(cfg);
  if (!o.csv.empty()) write_to(o.csv, [&](std::ostream& out) { write_trial_csv(out, r); });
  if (o.format == "json") {
    emit(experiment_to_json(r));
  } else {
    std::cout << "threshold              " << format_real(r.threshold) << '\n'
              << "passes                 " << r.pass_count << " / " << cfg.trials << '\n'
              << "empirical probability  " << format_real(r.empirical_probability) << '\n'
              << "ci (" << format_real(cfg.ci_level) << ")              [" << fixed(r.ci_low, 6)
              << ", " << fixed(r.ci_high, 6) << "]\n"
              << "scaled D* min/med/max  " << fixed(r.scaled.min, 4) << " / "
              << fixed(r.scaled.median, 4) << " / " << fixed(r.scaled.max, 4) << '\n'
              << "scaled D* mean         " << fixed(r.scaled.mean, 4) << '\n';
    if (r.surrogate) std::cout << "note: cover method, discrepancies are upper ends L + delta\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-discrepancy bounds, covers and Monte Carlo checks"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* c) { c->add_option("--q", o.q, "probability in (0,1)")->required(); };
  auto add_s = [&](CLI::App* c) { c->add_option("--s", o.s, "dimension")->required(); };
  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "number of points")->required(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "work budget in elementary steps (env STARDISC_BUDGET)");
  };

  auto* bound = app.add_subcommand("bound", "discrepancy bound holding with probability q");
  add_q(bound);
  add_s(bound);
  add_n(bound);
  bound->add_flag("--uniform", o.uniform, "use the dimension-uniform form");
  add_format(bound);

  auto* table = app.add_subcommand("table", "coefficient c(q,s) table");
  table->add_option("--q-list", o.q_list, "comma-separated q values");
  table->add_option("--s-list", o.s_list, "comma-separated dimensions");
  table->add_option("--format", o.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* inverse = app.add_subcommand("inverse", "number of points needed for discrepancy eps");
  add_s(inverse);
  inverse->add_option("--eps", o.eps, "target discrepancy")->required();
  inverse->add_option("--q", o.inverse_q, "probability for the random-set form");
  add_format(inverse);

  auto* disc = app.add_subcommand("disc", "star discrepancy of a point-set file");
  disc->add_option("--input", o.input, "point-set file")->required()->check(CLI::ExistingFile);
  disc->add_option("--method", o.method, "exact or cover")->check(CLI::IsMember({"exact", "cover"}));
  disc->add_option("--delta", o.delta, "cover resolution for --method cover");
  add_budget(disc);
  add_format(disc);

  auto* cover = app.add_subcommand("cover", "write an equidistant delta-cover");
  add_s(cover);
  cover->add_option("--delta", o.delta, "cover resolution")->required();
  cover->add_flag("--bracket", o.bracket, "write the bracketing cover instead");
  cover->add_option("--output", o.output, "output file (default stdout)");
  add_budget(cover);

  auto* chain = app.add_subcommand("chain", "dyadic chain decomposition of a point");
  add_s(chain);
  chain->add_option("--k", o.k, "number of levels K")->required();
  chain->add_option("--x", o.x, "comma-separated coordinates")->required();
  add_budget(chain);
  add_format(chain);

  auto* audit = app.add_subcommand("audit", "re-check the constant chain for (q, s, N)");
  add_q(audit);
  add_s(audit);
  add_n(audit);
  add_format(audit);

  auto* generate = app.add_subcommand("generate", "write a seeded uniform random point set");
  add_s(generate);
  add_n(generate);
  generate->add_option("--seed", o.seed, "master seed")->required();
  generate->add_option("--output", o.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Monte Carlo check of the probability guarantee");
  add_s(verify);
  add_n(verify);
  add_q(verify);
  verify->add_option("--trials", o.trials, "number of random point sets")->required();
  verify->add_option("--seed", o.seed, "master seed")->required();
  verify->add_option("--method", o.method, "exact or cover")
      ->check(CLI::IsMember({"exact", "cover"}));
  verify->add_option("--delta", o.delta, "cover resolution for --method cover");
  verify->add_option("--parallelism", o.parallelism, "worker threads or auto");
  verify->add_option("--ci-level", o.ci_level, "two-sided confidence level");
  verify->add_option("--csv", o.csv, "per-trial CSV output");
  add_budget(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) return cmd_bound(o);
    if (*table) return cmd_table(o);
    if (*inverse) return cmd_inverse(o);
    if (*disc) return cmd_disc(o);
    if (*cover) return cmd_cover(o);
    if (*chain) return cmd_chain(o);
    if (*audit) return cmd_audit(o);
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const regime_error& e) {
    std::cerr << "refused: " << e.what() << " (threshold " << format_real(e.threshold()) << ")\n";
    return kRefused;
  } catch (const capacity_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
