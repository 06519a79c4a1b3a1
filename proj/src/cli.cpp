#include "isotropy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "isotropy/chern_oracle.hpp"
#include "isotropy/errors.hpp"
#include "isotropy/isotropy_engine.hpp"
#include "isotropy/schur_eval.hpp"
#include "isotropy/self_check.hpp"
#include "isotropy/sweep.hpp"

namespace isotropy::cli {

namespace {

using Json = nlohmann::ordered_json;

// A domain answer that should still be reported but exit nonzero.
struct Outcome {
  Json result;
  int exit_code = kExitOk;
  std::function<void(std::ostream&)> table;
};

Json partition_json(const Partition& p) { return Json(p.parts()); }

// Small integers stay numbers; anything that might not fit a double is a string.
Json integer_json(const ExactInt& v) {
  if (v.fits_sint_p()) return Json(v.get_si());
  return Json(to_decimal(v));
}

Json expansion_json(const SchurExpansion& e) {
  Json list = Json::array();
  for (const auto& [mu, c] : e.coefficients) {
    list.push_back(Json{{"mu", partition_json(mu)}, {"coeff", to_decimal(c)}});
  }
  return list;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = row[i];
        if (i + 1 < row.size()) cell.resize(width[i], ' ');
        line += cell;
        if (i + 1 < row.size()) line += "  ";
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string threshold_text(const std::optional<ExactInt>& t) {
  return t ? to_decimal(*t) : "-";
}

// Everything a subcommand may read; only the options it registers are set.
struct Inputs {
  std::string lambda_text;
  Partition lambda;
  int k = 0;
  int n = 0;
  std::optional<int> max_k_opt;
  bool json = false;
  bool timing = false;
  std::size_t max_tableaux = 1'000'000;
  std::size_t max_terms = 5'000'000;
  SweepOptions sweep;

  OracleLimits oracle_limits() const { return OracleLimits{max_tableaux, max_terms}; }
};

Outcome run_dim(const Inputs& in) {
  const DimensionValue d = dim_schur_module(in.lambda, in.n);
  Outcome o;
  o.result = Json{{"lambda", partition_json(in.lambda)}, {"n", in.n}, {"dim", to_decimal(d.value)}};
  o.table = [d](std::ostream& os) {
    Table t({"lambda", "n", "dim"});
    t.add({d.lambda.to_string(), std::to_string(d.n), to_decimal(d.value)});
    t.print(os);
  };
  return o;
}

Outcome run_decide(const Inputs& in) {
  const Verdict v = decide(in.lambda, in.k, in.n, DecideOptions{in.oracle_limits()});
  const ExactInt dim = dim_schur_module(in.lambda, in.k).value;
  Outcome o;
  o.result = Json{{"isotropic", v.isotropic},
                  {"rule", std::string(rule_name(v.rule))},
                  {"threshold_n", v.threshold_n ? integer_json(*v.threshold_n) : Json(nullptr)},
                  {"dim", to_decimal(dim)},
                  {"detail", v.detail}};
  o.table = [v, dim, in](std::ostream& os) {
    Table t({"lambda", "k", "n", "dim", "isotropic", "rule", "threshold_n"});
    t.add({in.lambda.to_string(), std::to_string(in.k), std::to_string(in.n), to_decimal(dim),
           yes_no(v.isotropic), std::string(rule_name(v.rule)), threshold_text(v.threshold_n)});
    t.print(os);
    os << v.detail << '\n';
  };
  return o;
}

Outcome run_min_n(const Inputs& in) {
  const int k_from = in.k;
  const int k_to = in.max_k_opt.value_or(in.k);
  if (k_to < k_from) throw CLI::ValidationError("--max-k", "must be >= --k");
  Json rows = Json::array();
  Table t({"k", "dim", "threshold_n", "rule", "dim Gr(k,threshold_n)"});
  for (int k = k_from; k <= k_to; ++k) {
    const ExactInt dim = dim_schur_module(in.lambda, k).value;
    try {
      const ExactInt th = threshold_n(in.lambda, k);
      // Rule name as decide() reports it just above the threshold.
      const int probe = th.fits_sint_p() ? static_cast<int>(th.get_si()) + 1 : k + 1;
      const Verdict v = decide(in.lambda, k, std::max(probe, k), DecideOptions{in.oracle_limits()});
      rows.push_back(Json{{"k", k},
                          {"dim", to_decimal(dim)},
                          {"threshold_n", integer_json(th)},
                          {"rule", std::string(rule_name(v.rule))}});
      t.add({std::to_string(k), to_decimal(dim), to_decimal(th), std::string(rule_name(v.rule)),
             to_decimal(ExactInt(ExactInt(k) * (th - k)))});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutOfTheoremScope || k_from == k_to) throw;
      rows.push_back(Json{{"k", k}, {"dim", to_decimal(dim)}, {"threshold_n", nullptr},
                          {"rule", "oracle-fallback"}});
      t.add({std::to_string(k), to_decimal(dim), "-", "oracle-fallback", "-"});
    }
  }
  Outcome o;
  o.result = Json{{"lambda", partition_json(in.lambda)}, {"rows", rows}};
  o.table = [t](std::ostream& os) { t.print(os); };
  return o;
}

Outcome run_oracle(const Inputs& in) {
  const ChernVerdict v = top_chern_nonzero(in.lambda, in.k, in.n, in.oracle_limits());
  Outcome o;
  o.result = Json{{"nonzero", v.nonzero},
                  {"degree", to_decimal(v.degree)},
                  {"shortcut", std::string(shortcut_name(v.shortcut))},
                  {"surviving", expansion_json(v.surviving)}};
  o.table = [v, in](std::ostream& os) {
    Table t({"lambda", "k", "n", "degree", "dim Gr", "nonzero", "shortcut"});
    t.add({in.lambda.to_string(), std::to_string(in.k), std::to_string(in.n),
           to_decimal(v.degree), std::to_string(in.k * (in.n - in.k)), yes_no(v.nonzero),
           std::string(shortcut_name(v.shortcut))});
    t.print(os);
    if (!v.surviving.is_zero()) {
      os << '\n';
      Table s({"mu", "coeff"});
      for (const auto& [mu, c] : v.surviving.coefficients) s.add({mu.to_string(), to_decimal(c)});
      s.print(os);
    }
  };
  return o;
}

Outcome run_inequality_table(const Inputs& in) {
  const InequalityReport r = tevelev_inequalities(in.lambda, in.k, in.n);
  Json rows = Json::array();
  Table t({"i", "dim S_lambda C^(k-i)", "(k-i)(n-k-i)", "holds"});
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"i", row.i}, {"lhs", to_decimal(row.lhs)}, {"rhs", to_decimal(row.rhs)},
                        {"holds", row.holds}});
    t.add({std::to_string(row.i), to_decimal(row.lhs), to_decimal(row.rhs), yes_no(row.holds)});
  }
  Outcome o;
  o.result = Json{{"rows", rows}, {"all_hold", r.all_hold}};
  const bool all = r.all_hold;
  o.table = [t, all](std::ostream& os) {
    t.print(os);
    os << "all rows hold: " << yes_no(all) << '\n';
  };
  return o;
}

Outcome run_proof_chain(const Inputs& in) {
  const ProofChainReport r = verify_proof_chain(in.lambda, in.k, in.n);
  Json steps = Json::array();
  Table t({"step", "lhs", "rel", "rhs"});
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"label", s.label},
                         {"lhs", to_decimal(s.lhs)},
                         {"relation", std::string(relation_symbol(s.relation))},
                         {"rhs", to_decimal(s.rhs)},
                         {"holds", s.holds}});
    t.add({s.label, to_decimal(s.lhs), std::string(relation_symbol(s.relation)), to_decimal(s.rhs)});
  }
  Outcome o;
  o.result = Json{{"terminal_case", r.terminal_case}, {"steps", steps}};
  const std::string terminal = r.terminal_case;
  o.table = [t, terminal](std::ostream& os) {
    t.print(os);
    os << "terminal case: " << terminal << '\n';
  };
  return o;
}

Json string_list(const std::vector<std::string>& items) { return Json(items); }

Outcome run_sweep_command(const Inputs& in) {
  SweepOptions options = in.sweep;
  options.oracle = in.oracle_limits();
  const SweepReport r = run_sweep(options);
  Json rows = Json::array();
  Table t({"lambda", "k", "n", "dim", "decide", "rule", "oracle", "status"});
  for (const auto& row : r.rows) {
    Json j{{"lambda", partition_json(row.lambda)}, {"k", row.k}, {"n", row.n},
           {"dim", to_decimal(row.dim)}};
    j["isotropic"] = row.verdict ? Json(row.verdict->isotropic) : Json(nullptr);
    j["rule"] = row.verdict ? Json(std::string(rule_name(row.verdict->rule))) : Json(nullptr);
    j["oracle_nonzero"] = row.oracle_nonzero ? Json(*row.oracle_nonzero) : Json(nullptr);
    j["agreement"] = std::string(agreement_name(row.agreement));
    rows.push_back(std::move(j));
    t.add({row.lambda.to_string(), std::to_string(row.k), std::to_string(row.n),
           to_decimal(row.dim), row.verdict ? yes_no(row.verdict->isotropic) : "error",
           row.verdict ? std::string(rule_name(row.verdict->rule)) : row.error,
           row.oracle_nonzero ? (*row.oracle_nonzero ? "nonzero" : "zero") : "-",
           std::string(agreement_name(row.agreement))});
  }
  Outcome o;
  o.result = Json{{"clean", r.clean()},
                  {"rows_checked", r.rows.size()},
                  {"oracle_checked", r.oracle_checked},
                  {"main_theorem_instances", r.main_theorem_instances},
                  {"tightness_checked", r.tightness_checked},
                  {"disagreements", string_list(r.disagreements)},
                  {"tightness_failures", string_list(r.tightness_failures)},
                  {"inequality_failures", string_list(r.inequality_failures)},
                  {"monotonicity_failures", string_list(r.monotonicity_failures)},
                  {"errors", string_list(r.errors)},
                  {"rows", rows}};
  o.exit_code = r.clean() ? kExitOk : kExitDisagreement;
  o.table = [t, r](std::ostream& os) {
    t.print(os);
    os << '\n'
       << "rows " << r.rows.size() << ", oracle checked " << r.oracle_checked
       << ", disagreements " << r.disagreements.size() << ", tightness failures "
       << r.tightness_failures.size() << ", inequality failures " << r.inequality_failures.size()
       << ", monotonicity failures " << r.monotonicity_failures.size() << ", errors "
       << r.errors.size() << '\n';
    for (const auto& list : {&r.disagreements, &r.tightness_failures, &r.inequality_failures,
                             &r.monotonicity_failures, &r.errors}) {
      for (const auto& line : *list) os << "  " << line << '\n';
    }
  };
  return o;
}

Outcome run_self_check_command(const Inputs&) {
  const auto suites = run_self_check();
  Json list = Json::array();
  bool all = true;
  Table t({"suite", "cases", "violations", "passed"});
  for (const auto& s : suites) {
    all = all && s.passed();
    list.push_back(Json{{"name", s.name},
                        {"cases", s.cases},
                        {"violations", string_list(s.violations)},
                        {"passed", s.passed()}});
    t.add({s.name, std::to_string(s.cases), std::to_string(s.violations.size()), yes_no(s.passed())});
  }
  Outcome o;
  o.result = Json{{"passed", all}, {"suites", list}};
  o.exit_code = all ? kExitOk : kExitDisagreement;
  o.table = [t, suites](std::ostream& os) {
    t.print(os);
    for (const auto& s : suites) {
      for (const auto& v : s.violations) os << "  " << s.name << ": " << v << '\n';
    }
  };
  return o;
}

Json echo_inputs(const std::string& command, const Inputs& in) {
  Json j = Json::object();
  if (command == "sweep") {
    j["max_size"] = in.sweep.max_size;
    j["max_k"] = in.sweep.max_k;
    j["max_n"] = in.sweep.max_n;
    j["with_oracle"] = in.sweep.with_oracle;
    return j;
  }
  if (command == "self-check") return j;
  j["lambda"] = partition_json(in.lambda);
  if (command != "dim") j["k"] = in.k;
  if (command == "min-n") {
    if (in.max_k_opt) j["max_k"] = *in.max_k_opt;
  } else {
    j["n"] = in.n;
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropic subspaces of generic forms of Schur symmetry type", "isotropy"};
  app.require_subcommand(1);
  Inputs in;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", in.json, "Emit a JSON envelope instead of a table");
    sub->add_flag("--timing", in.timing, "Record wall time in timing_ms (breaks byte determinism)");
    sub->add_option("--max-tableaux", in.max_tableaux, "Tableau enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", in.max_terms, "Polynomial term cap")->check(CLI::PositiveNumber);
  };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", in.lambda_text, "Partition, e.g. 2,1")->required();
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", in.k, "Subspace dimension")->required()->check(CLI::PositiveNumber);
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", in.n, "Ambient dimension")->required()->check(CLI::NonNegativeNumber);
  };

  using Handler = Outcome (*)(const Inputs&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* dim = app.add_subcommand("dim", "dim S_lambda C^n");
  add_lambda(dim);
  add_n(dim);
  commands.emplace_back(dim, &run_dim);

  auto* dec = app.add_subcommand("decide", "Is a generic form k-isotropic?");
  add_lambda(dec);
  add_k(dec);
  add_n(dec);
  commands.emplace_back(dec, &run_decide);

  auto* minn = app.add_subcommand("min-n", "Least ambient dimension giving isotropy");
  add_lambda(minn);
  add_k(minn);
  minn->add_option("--max-k", in.max_k_opt, "Tabulate k..max-k")->check(CLI::PositiveNumber);
  commands.emplace_back(minn, &run_min_n);

  auto* orc = app.add_subcommand("oracle", "Top Chern class of S_lambda R* on Gr(k,n)");
  add_lambda(orc);
  add_k(orc);
  add_n(orc);
  commands.emplace_back(orc, &run_oracle);

  auto* ineq = app.add_subcommand("check-lemma36", "Tevelev inequality table");
  add_lambda(ineq);
  add_k(ineq);
  add_n(ineq);
  commands.emplace_back(ineq, &run_inequality_table);

  auto* chain = app.add_subcommand("proof-chain", "Replay the inequality chain for an instance");
  add_lambda(chain);
  add_k(chain);
  add_n(chain);
  commands.emplace_back(chain, &run_proof_chain);

  auto* sw = app.add_subcommand("sweep", "Decide over a grid, optionally against the oracle");
  sw->add_option("--max-size", in.sweep.max_size, "Largest |lambda|")->check(CLI::PositiveNumber);
  sw->add_option("--max-k", in.sweep.max_k, "Largest k")->check(CLI::PositiveNumber);
  sw->add_option("--max-n", in.sweep.max_n, "Largest n")->check(CLI::PositiveNumber);
  sw->add_flag("--with-oracle", in.sweep.with_oracle, "Compare every verdict with the oracle");
  commands.emplace_back(sw, &run_sweep_command);

  auto* sc = app.add_subcommand("self-check", "Dimension agreement and inequality suites");
  commands.emplace_back(sc, &run_self_check_command);

  for (auto& [sub, handler] : commands) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CLI::App* chosen = nullptr;
  Handler handler = nullptr;
  try {
    app.parse(reversed);
    for (auto& [sub, h] : commands) {
      if (sub->parsed()) {
        chosen = sub;
        handler = h;
      }
    }
    if (chosen->get_option_no_throw("--lambda") != nullptr) {
      in.lambda = parse_partition(in.lambda_text);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: --lambda: " << e.what() << '\n' << chosen->help();
    return kExitUsage;
  }
  const std::string command = chosen->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = handler(in);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (in.json) {
      Json envelope{{"schema_version", kSchemaVersion},
                    {"command", command},
                    {"inputs", echo_inputs(command, in)},
                    {"error", Json{{"code", std::string(error_code_name(e.code()))},
                                   {"message", e.what()}}},
                    {"timing_ms", 0}};
      out << envelope.dump(2) << '\n';
    }
    return kExitDomainError;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  if (in.json) {
    Json envelope{{"schema_version", kSchemaVersion},
                  {"command", command},
                  {"inputs", echo_inputs(command, in)},
                  {"result", outcome.result},
                  {"timing_ms", in.timing ? static_cast<long long>(elapsed) : 0LL}};
    out << envelope.dump(2) << '\n';
  } else {
    outcome.table(out);
    if (in.timing) out << "time: " << elapsed << " ms\n";
  }
  return outcome.exit_code;
}

}  // namespace isotropy::cli
