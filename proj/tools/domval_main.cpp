// Command-line front end: loads a workspace directory of text-format objects
// and runs the checkers and the evaluator on them. Exit codes: 0 all checks
// passed, 1 an assertion failed, 2 malformed input or unknown names.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "domval/formats.hpp"
#include "domval/generators.hpp"
#include "domval/integration.hpp"
#include "domval/interval.hpp"
#include "domval/lang.hpp"
#include "domval/monad.hpp"
#include "domval/poset.hpp"
#include "domval/valuation.hpp"
#include "domval/workspace.hpp"

namespace {

using domval::BiIntegrand;
using domval::Cdf;
using domval::Integrand;
using domval::Rational;
using domval::SimpleValuation;
using domval::StepMap;
using domval::Workspace;
using Json = nlohmann::ordered_json;

struct Options {
  std::string workspace = ".";
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t trials = 200;
  std::size_t max_elems = domval::kDefaultEnumBound;
};

Json atoms_json(const SimpleValuation& v) {
  Json atoms = Json::array();
  for (const auto& [idx, w] : v.atoms()) {
    atoms.push_back({{"element", v.poset()->element(idx)}, {"weight", w.to_string()}});
  }
  return atoms;
}

void emit(const Options& opt, const Json& report, const std::string& human) {
  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human << "\n";
  }
}

int cmd_integrate(const Options& opt, const std::string& val_name, const std::string& fn_name) {
  Workspace ws = Workspace::load(opt.workspace);
  const SimpleValuation& nu = ws.valuation(val_name);
  const Integrand& h = ws.integrand(fn_name);
  Rational closed = domval::integrate(h, nu);
  Rational oracle = domval::integrate_riemann_oracle(h, nu);
  bool ok = closed == oracle;
  Json report{{"command", "integrate"},
              {"valuation", val_name},
              {"integrand", fn_name},
              {"closed_form", closed.to_string()},
              {"riemann_oracle", oracle.to_string()},
              {"equal", ok}};
  emit(opt, report,
       closed.to_string() + (ok ? " == " : " != ") + oracle.to_string() + (ok ? " OK" : " FAIL"));
  return ok ? 0 : 1;
}

int cmd_compare(const Options& opt, const std::string& left_name, const std::string& right_name) {
  Workspace ws = Workspace::load(opt.workspace);
  const SimpleValuation& a = ws.valuation(left_name);
  const SimpleValuation& b = ws.valuation(right_name);
  domval::StochasticOrder order = domval::compare_stochastic(a, b);
  bool within_bound = a.poset()->size() <= opt.max_elems;
  bool agree = true;
  if (within_bound) {
    bool le = domval::stochastic_leq_exhaustive(a, b, opt.max_elems);
    bool ge = domval::stochastic_leq_exhaustive(b, a, opt.max_elems);
    agree = le == (order == domval::StochasticOrder::less ||
                   order == domval::StochasticOrder::equal) &&
            ge == (order == domval::StochasticOrder::greater ||
                   order == domval::StochasticOrder::equal);
  }
  Json report{{"command", "compare"},
              {"left", left_name},
              {"right", right_name},
              {"order", domval::to_string(order)},
              {"exhaustive_checked", within_bound},
              {"procedures_agree", agree}};
  emit(opt, report,
       std::string(domval::to_string(order)) + (agree ? "" : "  (flow/exhaustive DISAGREE)"));
  return agree ? 0 : 1;
}

int cmd_fubini(const Options& opt, const std::string& nu_name, const std::string& mu_name,
               const std::string& h_name) {
  Workspace ws = Workspace::load(opt.workspace);
  const SimpleValuation& nu = ws.valuation(nu_name);
  const SimpleValuation& mu = ws.valuation(mu_name);
  const BiIntegrand& h = ws.bi_integrand(h_name);
  domval::FubiniResult result = domval::fubini_check(nu, mu, h);
  Rational product_route = domval::integrate(h.on_product(), domval::product_valuation(nu, mu));
  bool ok = result.equal && result.lhs == product_route;
  Json report{{"command", "fubini"},
              {"nu", nu_name},
              {"mu", mu_name},
              {"h", h_name},
              {"lhs", result.lhs.to_string()},
              {"rhs", result.rhs.to_string()},
              {"product_route", product_route.to_string()},
              {"equal", ok}};
  emit(opt, report,
       "lhs " + result.lhs.to_string() + " rhs " + result.rhs.to_string() + " product " +
           product_route.to_string() + (ok ? " OK" : " FAIL"));
  return ok ? 0 : 1;
}

int cmd_laws(const Options& opt) {
  domval::MonadLawReport report =
      domval::check_monad_laws(opt.trials, opt.seed, std::min<std::size_t>(opt.max_elems, 6));
  auto fraction = [&](const domval::LawCount& c) {
    return std::to_string(c.passed) + "/" + std::to_string(report.trials);
  };
  Json json{{"command", "laws"},
            {"seed", opt.seed},
            {"trials", report.trials},
            {"left_unit_passed", report.left_unit.passed},
            {"right_unit_passed", report.right_unit.passed},
            {"associativity_passed", report.associativity.passed},
            {"all_passed", report.all_passed()}};
  emit(opt, json,
       "left-unit " + fraction(report.left_unit) + " right-unit " + fraction(report.right_unit) +
           " associativity " + fraction(report.associativity) +
           (report.all_passed() ? " OK" : " FAIL"));
  return report.all_passed() ? 0 : 1;
}

int cmd_pushforward(const Options& opt, const std::string& cdf_name,
                    const std::string& step_name) {
  Workspace ws = Workspace::load(opt.workspace);
  const Cdf& cdf = ws.cdf(cdf_name);
  const StepMap& step = ws.stepmap(step_name);
  SimpleValuation pushed = domval::pushforward(cdf, step);
  // Mass-on-opens identity against the interval-union measurement, over every
  // upper set of the target poset.
  bool identity_ok = true;
  bool opens_checked = step.target()->size() <= opt.max_elems;
  if (opens_checked) {
    for (const auto& open : domval::enumerate_upper_sets(step.target(), opt.max_elems)) {
      if (pushed.mass(open) != domval::preimage_mass(cdf, step, open)) {
        identity_ok = false;
        break;
      }
    }
  }
  Json report{{"command", "pushforward"},
              {"cdf", cdf_name},
              {"stepmap", step_name},
              {"atoms", atoms_json(pushed)},
              {"total_mass", pushed.total_mass().to_string()},
              {"opens_checked", opens_checked},
              {"identity_ok", identity_ok}};
  emit(opt, report, pushed.to_string() + (identity_ok ? "" : "  (identity FAIL)"));
  return identity_ok ? 0 : 1;
}

int cmd_eval(const Options& opt, const std::string& prog_name) {
  Workspace ws = Workspace::load(opt.workspace);
  SimpleValuation result = domval::lang::eval(ws.program(prog_name), ws.sample_env());
  Json report{{"command", "eval"},
              {"program", prog_name},
              {"poset", result.poset()->name()},
              {"atoms", atoms_json(result)},
              {"mass", result.total_mass().to_string()}};
  emit(opt, report, result.to_string() + "\nmass " + result.total_mass().to_string());
  return 0;
}

int cmd_equiv(const Options& opt, const std::string& p1_name, const std::string& p2_name) {
  Workspace ws = Workspace::load(opt.workspace);
  bool equal =
      domval::lang::check_equiv(ws.program(p1_name), ws.program(p2_name), ws.sample_env());
  Json report{{"command", "equiv"}, {"p1", p1_name}, {"p2", p2_name}, {"equal", equal}};
  emit(opt, report, equal ? "EQUIV" : "DIFFER");
  return 0;
}

int cmd_central(const Options& opt, const std::string& val_name) {
  Workspace ws = Workspace::load(opt.workspace);
  const SimpleValuation& nu = ws.valuation(val_name);
  domval::CentralReport report = domval::central_falsifier(nu, opt.trials, opt.seed);
  Json json{{"command", "central"},
            {"valuation", val_name},
            {"trials", report.trials},
            {"seed", opt.seed},
            {"falsified", report.falsified},
            {"stream_digest", report.stream_digest}};
  std::string human = std::string("falsified: ") + (report.falsified ? "true" : "false");
  if (report.witness) {
    const auto& w = *report.witness;
    std::string other = domval::formats::to_text(*w.other);
    std::string mu = domval::formats::to_text(w.mu, "witness_mu");
    std::string h = domval::formats::to_text(w.h, "witness_h");
    json["witness"] = {{"trial", w.trial},
                       {"lhs", w.lhs.to_string()},
                       {"rhs", w.rhs.to_string()},
                       {"poset", other},
                       {"mu", mu},
                       {"h", h}};
    human += "\ntrial " + std::to_string(w.trial) + " lhs " + w.lhs.to_string() + " rhs " +
             w.rhs.to_string() + "\n" + other + mu + h;
  }
  emit(opt, json, human);
  return report.falsified ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checkers for valuations on finite posets"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand name

  Options opt;
  app.add_option("-w,--workspace", opt.workspace, "workspace directory");
  app.add_flag("--json", opt.json, "emit a machine-readable report");
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--trials", opt.trials, "trial count for randomized suites");
  app.add_option("--max-elems", opt.max_elems, "upper-set enumeration bound");

  std::string arg1, arg2, arg3;

  CLI::App* integrate = app.add_subcommand("integrate", "closed-form vs Riemann-oracle integral");
  integrate->add_option("valuation", arg1)->required();
  integrate->add_option("integrand", arg2)->required();

  CLI::App* compare = app.add_subcommand("compare", "stochastic order of two valuations");
  compare->add_option("left", arg1)->required();
  compare->add_option("right", arg2)->required();

  CLI::App* fubini = app.add_subcommand("fubini", "both iterated integrals plus the product route");
  fubini->add_option("nu", arg1)->required();
  fubini->add_option("mu", arg2)->required();
  fubini->add_option("biintegrand", arg3)->required();

  CLI::App* laws = app.add_subcommand("laws", "monad laws on random instances");

  CLI::App* pushfwd = app.add_subcommand("pushforward", "interval valuation along a step map");
  pushfwd->add_option("cdf", arg1)->required();
  pushfwd->add_option("stepmap", arg2)->required();

  CLI::App* eval = app.add_subcommand("eval", "denotation of a program");
  eval->add_option("program", arg1)->required();

  CLI::App* equiv = app.add_subcommand("equiv", "exact denotational equivalence of two programs");
  equiv->add_option("p1", arg1)->required();
  equiv->add_option("p2", arg2)->required();

  CLI::App* central = app.add_subcommand("central", "randomized centrality falsifier");
  central->add_option("valuation", arg1)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(integrate)) return cmd_integrate(opt, arg1, arg2);
    if (app.got_subcommand(compare)) return cmd_compare(opt, arg1, arg2);
    if (app.got_subcommand(fubini)) return cmd_fubini(opt, arg1, arg2, arg3);
    if (app.got_subcommand(laws)) return cmd_laws(opt);
    if (app.got_subcommand(pushfwd)) return cmd_pushforward(opt, arg1, arg2);
    if (app.got_subcommand(eval)) return cmd_eval(opt, arg1);
    if (app.got_subcommand(equiv)) return cmd_equiv(opt, arg1, arg2);
    if (app.got_subcommand(central)) return cmd_central(opt, arg1);
  } catch (const domval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
