#include "ducci/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include <CLI11.hpp>

#include "ducci/coeff.hpp"
#include "ducci/cycle.hpp"
#include "ducci/graph.hpp"
#include "ducci/predecessor.hpp"
#include "ducci/sweep.hpp"

namespace ducci::cli {

namespace {

struct BudgetOpts {
  std::uint64_t max_steps = Budget{}.max_steps;
  std::uint64_t max_states = Budget{}.max_states;

  Budget budget() const { return Budget{max_steps, max_states}; }
};

void add_budget_options(CLI::App* cmd, BudgetOpts& opts) {
  cmd->add_option("--max-steps", opts.max_steps, "iteration cap");
  cmd->add_option("--max-states", opts.max_states, "stored-state cap");
}

// Prints the orbit of u one tuple per line: the pre-period and one full
// cycle, stopping before the first repeated state.
void print_orbit_until_repeat(const ZmTuple& start, const Budget& budget,
                              std::ostream& out) {
  std::unordered_set<std::string> seen;
  ZmTuple cur = start;
  std::uint64_t steps = 0;
  while (true) {
    out << cur.to_text() << "\n";
    seen.insert(cur.key());
    if (seen.size() > budget.max_states) {
      throw BudgetExceeded("orbit outran max_states", steps);
    }
    cur = ducci_step(cur);
    if (++steps > budget.max_steps) {
      throw BudgetExceeded("orbit outran max_steps", steps);
    }
    if (seen.contains(cur.key())) break;
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Ducci-map dynamics on Z_m^n"};
  app.require_subcommand(1);

  // step
  auto* step_cmd = app.add_subcommand("step", "apply the map once");
  std::uint32_t step_m = 0;
  std::string step_tuple;
  step_cmd->add_option("--m", step_m, "modulus")->required();
  step_cmd->add_option("--tuple", step_tuple, "comma-separated entries")->required();

  // orbit
  auto* orbit_cmd =
      app.add_subcommand("orbit", "print the orbit, one tuple per line");
  std::uint32_t orbit_m = 0;
  std::string orbit_tuple;
  std::int64_t orbit_steps = -1;
  BudgetOpts orbit_budget;
  orbit_cmd->add_option("--m", orbit_m, "modulus")->required();
  orbit_cmd->add_option("--tuple", orbit_tuple, "start tuple")->required();
  orbit_cmd->add_option("--steps", orbit_steps,
                        "print exactly this many steps (default: stop before "
                        "the first repeat)");
  add_budget_options(orbit_cmd, orbit_budget);

  // cycle
  auto* cycle_cmd =
      app.add_subcommand("cycle", "pre-period and period of an orbit");
  std::uint32_t cycle_n = 0, cycle_m = 0;
  std::string cycle_tuple;
  BudgetOpts cycle_budget;
  cycle_cmd->add_option("--n", cycle_n, "length (basic tuple)");
  cycle_cmd->add_option("--m", cycle_m, "modulus")->required();
  cycle_cmd->add_option("--tuple", cycle_tuple, "start tuple (default: basic)");
  add_budget_options(cycle_cmd, cycle_budget);

  // coeff
  auto* coeff_cmd =
      app.add_subcommand("coeff", "coefficient row r for Z_m^n");
  std::uint32_t coeff_n = 0, coeff_m = 0;
  std::uint64_t coeff_r = 0;
  bool coeff_reverse = false;
  coeff_cmd->add_option("--n", coeff_n, "length")->required();
  coeff_cmd->add_option("--m", coeff_m, "modulus")->required();
  coeff_cmd->add_option("--r", coeff_r, "row index")->required();
  coeff_cmd->add_flag("--reverse", coeff_reverse,
                      "print in iterate order (reversed row)");

  // pred
  auto* pred_cmd = app.add_subcommand("pred", "predecessors of a tuple");
  std::uint32_t pred_n = 0, pred_m = 0;
  std::string pred_tuple;
  bool pred_all = false, pred_construct = false, pred_exists = false,
       pred_general = false;
  pred_cmd->add_option("--n", pred_n, "length (checked against the tuple)");
  pred_cmd->add_option("--m", pred_m, "modulus")->required();
  pred_cmd->add_option("--tuple", pred_tuple, "target tuple")->required();
  pred_cmd->add_flag("--all", pred_all, "list the full family (default)");
  pred_cmd->add_flag("--construct", pred_construct, "print the anchored predecessor");
  pred_cmd->add_flag("--exists", pred_exists, "print yes/no");
  pred_cmd->add_flag("--general", pred_general,
                     "brute-force scan (works for odd n)");

  // formula
  auto* formula_cmd =
      app.add_subcommand("formula", "closed-form pre-period value or bound");
  std::uint32_t formula_n = 0, formula_m = 0;
  bool formula_computed = false;
  BudgetOpts formula_budget;
  formula_cmd->add_option("--n", formula_n, "length")->required();
  formula_cmd->add_option("--m", formula_m, "modulus")->required();
  formula_cmd->add_flag("--computed", formula_computed,
                        "also compute the value by cycle detection");
  add_budget_options(formula_cmd, formula_budget);

  // graph
  auto* graph_cmd =
      app.add_subcommand("graph", "DOT transition graph around the basic cycle");
  std::uint32_t graph_n = 0, graph_m = 0, graph_depth = 0;
  std::string graph_out;
  BudgetOpts graph_budget;
  graph_cmd->add_option("--n", graph_n, "length (even)")->required();
  graph_cmd->add_option("--m", graph_m, "modulus")->required();
  graph_cmd->add_option("--depth", graph_depth, "backward expansion radius")->required();
  graph_cmd->add_option("--out", graph_out, "output file (default: stdout)");
  add_budget_options(graph_cmd, graph_budget);

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "closed form vs. computed values over an (n, m) grid");
  SweepConfig sweep_cfg;
  BudgetOpts sweep_budget;
  std::string sweep_filter = "all";
  sweep_cmd->add_option("--n-min", sweep_cfg.n_min, "smallest n (rounded up to even)");
  sweep_cmd->add_option("--n-max", sweep_cfg.n_max, "largest n");
  sweep_cmd->add_option("--m-min", sweep_cfg.m_min, "smallest m");
  sweep_cmd->add_option("--m-max", sweep_cfg.m_max, "largest m");
  sweep_cmd->add_option("--out", sweep_cfg.output_path,
                        "CSV file, appended idempotently (default: stdout)");
  sweep_cmd->add_option("--jsonl", sweep_cfg.jsonl_path, "JSON-lines mirror");
  sweep_cmd
      ->add_option("--filter", sweep_filter,
                   "cell filter: all | prime-power-gcf | coprime")
      ->check(CLI::IsMember({"all", "prime-power-gcf", "coprime"}));
  sweep_cmd->add_option("--jobs", sweep_cfg.jobs, "worker threads");
  add_budget_options(sweep_cmd, sweep_budget);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the lemma suite over a (p,k,n1,c) grid");
  LemmaGridConfig lemma_cfg;
  verify_cmd->add_option("--primes", lemma_cfg.primes, "primes to test");
  verify_cmd->add_option("--k-max", lemma_cfg.k_max, "largest exponent");
  verify_cmd->add_option("--n1", lemma_cfg.n1_set, "cofactor lengths");
  verify_cmd->add_option("--c-max", lemma_cfg.c_max, "largest row multiple");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (step_cmd->parsed()) {
      const ZmTuple u = ZmTuple::from_text(step_tuple, step_m);
      out << ducci_step(u).to_text() << "\n";
    } else if (orbit_cmd->parsed()) {
      const ZmTuple u = ZmTuple::from_text(orbit_tuple, orbit_m);
      if (orbit_steps < 0) {
        print_orbit_until_repeat(u, orbit_budget.budget(), out);
      } else {
        ZmTuple cur = u;
        out << cur.to_text() << "\n";
        for (std::int64_t i = 0; i < orbit_steps; ++i) {
          cur = ducci_step(cur);
          out << cur.to_text() << "\n";
        }
      }
    } else if (cycle_cmd->parsed()) {
      ZmTuple start = cycle_tuple.empty()
                          ? basic_tuple(cycle_n, cycle_m)
                          : ZmTuple::from_text(cycle_tuple, cycle_m);
      if (!cycle_tuple.empty() && cycle_n != 0 && cycle_n != start.size()) {
        throw ShapeMismatch("--n disagrees with the tuple length");
      }
      const CycleInfo info = cycle_info(start, cycle_budget.budget());
      out << "len=" << info.len << " per=" << info.per << "\n";
    } else if (coeff_cmd->parsed()) {
      const CoeffRow row = coeff_row(coeff_n, coeff_m, coeff_r);
      if (coeff_reverse) {
        out << row.reversed_tuple().to_text() << "\n";
      } else {
        std::string text;
        for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
          if (i) text.push_back(',');
          text += std::to_string(row.coeffs[i]);
        }
        out << text << "\n";
      }
    } else if (pred_cmd->parsed()) {
      const int modes = int(pred_all) + int(pred_construct) + int(pred_exists) +
                        int(pred_general);
      if (modes > 1) {
        err << "usage error: --all, --construct, --exists and --general are "
               "mutually exclusive\n";
        return 2;
      }
      const ZmTuple u = ZmTuple::from_text(pred_tuple, pred_m);
      if (pred_n != 0 && pred_n != u.size()) {
        throw ShapeMismatch("--n disagrees with the tuple length");
      }
      if (pred_exists) {
        out << (has_predecessor(u) ? "yes" : "no") << "\n";
      } else if (pred_construct) {
        out << construct_predecessor(u).to_text() << "\n";
      } else if (pred_general) {
        for (const ZmTuple& y : solve_predecessors_general(u).members) {
          out << y.to_text() << "\n";
        }
      } else {
        for (const ZmTuple& y : all_predecessors(u).members) {
          out << y.to_text() << "\n";
        }
      }
    } else if (formula_cmd->parsed()) {
      const LBoundResult res = l_formula(formula_n, formula_m);
      out << "L=" << res.value << " kind=" << to_string(res.kind)
          << " case=" << to_string(res.case_id);
      if (formula_computed) {
        const CycleInfo info =
            lp_values(formula_n, formula_m, formula_budget.budget());
        out << " computed=" << info.len;
      }
      out << "\n";
    } else if (graph_cmd->parsed()) {
      const TransitionGraph g =
          basic_cycle_graph(graph_n, graph_m, graph_depth, graph_budget.budget());
      const std::string dot = to_dot(g);
      if (graph_out.empty()) {
        out << dot;
      } else {
        std::ofstream file(graph_out);
        if (!file || !(file << dot)) {
          throw OutputUnwritable("cannot write " + graph_out);
        }
      }
    } else if (sweep_cmd->parsed()) {
      sweep_cfg.budget = sweep_budget.budget();
      if (sweep_filter == "prime-power-gcf") {
        sweep_cfg.filter = SweepFilter::PrimePowerGcf;
      } else if (sweep_filter == "coprime") {
        sweep_cfg.filter = SweepFilter::Coprime;
      }
      const std::vector<SweepRecord> records = sweep_theorem1(sweep_cfg);
      if (sweep_cfg.output_path.empty()) {
        out << sweep_csv_header() << "\n";
        for (const auto& rec : records) out << to_csv(rec) << "\n";
      }
      std::uint64_t yes = 0, no = 0, exceeded = 0;
      for (const auto& rec : records) {
        switch (rec.agrees) {
          case Agreement::Yes: ++yes; break;
          case Agreement::No: ++no; break;
          case Agreement::BudgetExceeded: ++exceeded; break;
        }
      }
      out << "rows=" << records.size() << " agree=" << yes << " disagree=" << no
          << " budget-exceeded=" << exceeded << "\n";
      if (no > 0) return 1;
    } else if (verify_cmd->parsed()) {
      const LemmaGridReport report = verify_all_lemmas(lemma_cfg);
      for (const auto& note : report.notes) out << "skip " << note << "\n";
      for (const auto& fail : report.failures) out << "FAIL " << fail << "\n";
      out << "lemma-cells passed=" << report.passed
          << " failed=" << report.failed << " skipped=" << report.skipped
          << "\n";
      if (!report.all_pass()) return 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ducci::cli
