#include <iostream>

#include "CLI11.hpp"

#include "gibbslab/cli.hpp"

namespace {

using gibbslab::cli::RunConfig;

void add_model_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--model", c.model, "ising | potts:Q | path to model JSON");
  sub->add_option("--J", c.J, "coupling constant");
  sub->add_option("--beta", c.beta, "inverse temperature");
  sub->add_option("--theta", c.theta, "Ising theta = tanh(J*beta)");
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--k", c.k, "tree order")->required();
  sub->add_option("--output", c.output, "write the result to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gibbs specifications and boundary laws on Cayley trees", "gibbslab"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--max-states", c.max_states, "cap on exhaustively enumerated states")
      ->envname("GIBBSLAB_MAX_STATES");

  auto* tree = app.add_subcommand("tree", "print sphere and ball sizes");
  add_common(tree, c);
  tree->add_option("--depth", c.depth, "truncation depth")->required();
  tree->add_option("--format", c.format, "text | json");
  tree->add_option("action", c.action, "info");

  auto* spec = app.add_subcommand("verify-spec", "check zeta_m zeta_n = zeta_m by enumeration");
  add_common(spec, c);
  add_model_options(spec, c);
  spec->add_option("--depth", c.depth, "truncation depth (default m+1)");
  spec->add_option("--m", c.m, "outer volume")->required();
  spec->add_option("--n", c.n, "inner volume")->required();
  spec->add_option("--boundary", c.boundary, "uniform:VALUE | configuration JSON file");
  spec->add_option("--tol", c.tol, "tolerance (default 1e-10)");

  auto* compat = app.add_subcommand("verify-compat", "brute-force compatibility of field kernels");
  add_common(compat, c);
  add_model_options(compat, c);
  compat->add_option("--depth", c.depth, "truncation depth (default n)");
  compat->add_option("--n", c.n, "level n >= 1")->required();
  compat->add_option("--field", c.field,
                     "homogeneous:VALUE | fixed-point:{+,0,-} | field JSON file")
      ->required();
  compat->add_option("--tol", c.tol, "tolerance (default 1e-10)");

  auto* law = app.add_subcommand("check-law", "evaluate the boundary-law equation per vertex");
  add_common(law, c);
  add_model_options(law, c);
  law->add_option("--depth", c.depth, "truncation depth")->required();
  law->add_option("--field", c.field,
                  "homogeneous:VALUE | fixed-point:{+,0,-} | field JSON file")
      ->required();
  law->add_option("--generation", c.generation, "restrict to one sphere");
  law->add_option("--tol", c.tol, "tolerance (default 1e-10)");

  auto* solve = app.add_subcommand("solve", "homogeneous solutions of h = k f(h, theta)");
  add_common(solve, c);
  solve->add_option("--theta", c.theta, "theta");
  solve->add_option("--J", c.J, "coupling constant");
  solve->add_option("--beta", c.beta, "inverse temperature");
  solve->add_option("--tol", c.tol, "bisection tolerance (default 1e-12)");

  auto* scan = app.add_subcommand("scan", "solution count over a theta grid");
  add_common(scan, c);
  scan->add_option("--theta-min", c.theta_min)->required();
  scan->add_option("--theta-max", c.theta_max)->required();
  scan->add_option("--steps", c.steps)->required();
  scan->add_option("--tol", c.tol, "bisection tolerance (default 1e-12)");

  auto* marg = app.add_subcommand("marginals", "observables of the marginal family");
  add_common(marg, c);
  add_model_options(marg, c);
  marg->add_option("--depth", c.depth, "truncation depth")->required();
  marg->add_option("--field", c.field,
                   "homogeneous:VALUE | fixed-point:{+,0,-} | field JSON file")
      ->required();
  marg->add_option("--n-max", c.n_max, "deepest level (default depth)");
  marg->add_option("--observable", c.observable, "magnetization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gibbslab::cli::kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return gibbslab::cli::run(c, std::cout, std::cerr);
}
