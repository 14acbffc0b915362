#include "gibbslab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gibbslab/boundary_law.hpp"
#include "gibbslab/measures.hpp"
#include "gibbslab/model_io.hpp"
#include "gibbslab/specification.hpp"

namespace gibbslab::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("cannot parse " + what + " '" + text + "' as a number");
  }
  return v;
}

struct Model {
  PairInteraction interaction;
  std::optional<double> theta;
  ojson parameters;
};

Model resolve_model(const RunConfig& c) {
  if (c.theta && (c.J || c.beta)) {
    throw UsageError("give either --theta or --J/--beta, not both");
  }
  if (is_builtin_model(c.model)) {
    if (c.theta) {
      if (c.model != "ising") throw UsageError("--theta applies to the Ising model only");
      const auto p = IsingParameters::from_theta(*c.theta);
      return {p.interaction(), p.theta(),
              ojson{{"J", round15(p.J())},
                    {"beta", round15(p.beta())},
                    {"theta", round15(p.theta())},
                    {"theta_source", "given"}}};
    }
    if (!c.beta) throw UsageError("supply --theta, or --beta with an optional --J");
    const double J = c.J.value_or(1.0);
    Model m{builtin_model(c.model, J, *c.beta), std::nullopt,
            ojson{{"J", round15(J)}, {"beta", round15(*c.beta)}}};
    if (m.interaction.is_ising()) {
      m.theta = std::tanh(J * *c.beta);
      m.parameters["theta"] = round15(*m.theta);
      m.parameters["theta_source"] = "tanh(J*beta)";
    }
    return m;
  }
  if (c.theta) throw UsageError("--theta cannot be combined with a model file");
  PairInteraction interaction = model_from_json(read_json_file(c.model));
  interaction = interaction.with_parameters(c.J.value_or(interaction.J()),
                                            c.beta.value_or(interaction.beta()));
  Model m{interaction, std::nullopt,
          ojson{{"J", round15(interaction.J())}, {"beta", round15(interaction.beta())}}};
  if (interaction.is_ising()) {
    m.theta = std::tanh(interaction.coupling());
    m.parameters["theta"] = round15(*m.theta);
    m.parameters["theta_source"] = "tanh(J*beta)";
  }
  return m;
}

double resolve_theta(const RunConfig& c, ojson& parameters) {
  if (c.theta && (c.J || c.beta)) {
    throw UsageError("give either --theta or --J/--beta, not both");
  }
  if (c.theta) {
    parameters = {{"theta", round15(*c.theta)}, {"theta_source", "given"}};
    return *c.theta;
  }
  if (!c.beta) throw UsageError("supply --theta, or --beta with an optional --J");
  const auto p = IsingParameters::from_coupling(c.J.value_or(1.0), *c.beta);
  parameters = {{"J", round15(p.J())},
                {"beta", round15(p.beta())},
                {"theta", round15(p.theta())},
                {"theta_source", "tanh(J*beta)"}};
  return p.theta();
}

BoundaryField resolve_field(const std::string& spec, int k, const Model& model) {
  if (spec.empty()) throw UsageError("missing required option --field");
  if (spec.starts_with("homogeneous:")) {
    return BoundaryField::homogeneous(parse_double(spec.substr(12), "field value"));
  }
  if (spec.starts_with("fixed-point:")) {
    if (!model.theta || !model.interaction.is_ising()) {
      throw UsageError("fixed-point fields need the Ising model");
    }
    const std::string branch = spec.substr(12);
    const auto report = solve_homogeneous(k, *model.theta);
    double h = 0.0;
    if (branch == "+") {
      h = report.solutions.back();
    } else if (branch == "-") {
      h = report.solutions.front();
    } else if (branch != "0") {
      throw UsageError("fixed-point branch must be +, - or 0");
    }
    return homogeneous_solution_field(k, *model.theta, h);
  }
  return field_from_json(read_json_file(spec));
}

Configuration resolve_boundary(const std::string& spec, const CayleyTree& tree, int level) {
  if (spec.starts_with("uniform:")) {
    const double v = parse_double(spec.substr(8), "boundary value");
    const auto sphere = tree.sphere(level);
    return Configuration::uniform(sphere, v);
  }
  return configuration_from_json(read_json_file(spec));
}

ojson certificate_json(const std::string& command, const ConsistencyCertificate& cert,
                       const ojson& parameters) {
  ojson j;
  j["command"] = command;
  j["residual"] = round15(cert.residual);
  j["tol"] = cert.tol;
  j["verdict"] = cert.verdict;
  ojson a = ojson::object();
  for (const auto& [x, v] : cert.normalizers) a[std::to_string(x)] = round15(v);
  j["a"] = a;
  ojson lz = ojson::object();
  for (const auto& [n, v] : cert.log_z) lz[std::to_string(n)] = round15(v);
  j["logZ"] = lz;
  if (cert.z_recursion_residual) {
    j["z_recursion_residual"] = round15(*cert.z_recursion_residual);
  }
  if (!cert.excluded.empty()) j["excluded"] = cert.excluded;
  j["parameters"] = parameters;
  return j;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

double tolerance(const RunConfig& c, double fallback) {
  const double tol = c.tol.value_or(fallback);
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  return tol;
}

int cmd_tree(const RunConfig& c, std::ostream& out) {
  if (c.action != "info") throw UsageError("unknown tree action '" + c.action + "'");
  const CayleyTree tree(require(c.k, "--k"), require(c.depth, "--depth"));
  Sink sink(c.output, out);
  if (c.format == "json") {
    std::vector<std::size_t> sizes;
    for (int n = 0; n <= tree.depth(); ++n) sizes.push_back(tree.sphere_size(n));
    ojson j{{"k", tree.order()},
            {"depth", tree.depth()},
            {"sphere_sizes", sizes},
            {"ball_size", tree.size()}};
    *sink << j.dump(2) << '\n';
  } else if (c.format == "text") {
    auto row = [&](const std::string& label, std::size_t v) {
      *sink << std::left << std::setw(10) << label << std::right << std::setw(12) << v
            << '\n';
    };
    row("k", static_cast<std::size_t>(tree.order()));
    row("depth", static_cast<std::size_t>(tree.depth()));
    for (int n = 0; n <= tree.depth(); ++n) {
      row("|W_" + std::to_string(n) + "|", tree.sphere_size(n));
    }
    row("|V_" + std::to_string(tree.depth()) + "|", tree.size());
  } else {
    throw UsageError("--format must be text or json");
  }
  return kOk;
}

int cmd_verify_spec(const RunConfig& c, std::ostream& out) {
  const int m = require(c.m, "--m");
  const int n = require(c.n, "--n");
  const CayleyTree tree(require(c.k, "--k"), c.depth.value_or(m + 1));
  const Model model = resolve_model(c);
  const PairPotential potential(model.interaction);
  const Configuration omega = resolve_boundary(c.boundary, tree, m + 1);
  const auto cert = check_specification(potential, tree, m, n, omega, tolerance(c, 1e-10),
                                        c.max_states);
  Sink sink(c.output, out);
  *sink << certificate_json(c.command, cert, model.parameters).dump(2) << '\n';
  return cert.verdict ? kOk : kVerdictFalse;
}

int cmd_verify_compat(const RunConfig& c, std::ostream& out) {
  const int n = require(c.n, "--n");
  const int k = require(c.k, "--k");
  const CayleyTree tree(k, c.depth.value_or(n));
  const Model model = resolve_model(c);
  const BoundaryField h = resolve_field(c.field, k, model);
  const auto cert = check_compatibility_bruteforce(model.interaction, tree, n, h,
                                                   tolerance(c, 1e-10), c.max_states);
  Sink sink(c.output, out);
  *sink << certificate_json(c.command, cert, model.parameters).dump(2) << '\n';
  return cert.verdict ? kOk : kVerdictFalse;
}

int cmd_check_law(const RunConfig& c, std::ostream& out) {
  const int k = require(c.k, "--k");
  const CayleyTree tree(k, require(c.depth, "--depth"));
  const Model model = resolve_model(c);
  const BoundaryField h = resolve_field(c.field, k, model);
  const auto cert = check_functional_equation(model.interaction, tree, h,
                                              tolerance(c, 1e-10), c.generation);
  Sink sink(c.output, out);
  *sink << certificate_json(c.command, cert, model.parameters).dump(2) << '\n';
  return cert.verdict ? kOk : kVerdictFalse;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const int k = require(c.k, "--k");
  ojson parameters;
  const double theta = resolve_theta(c, parameters);
  const auto report = solve_homogeneous(k, theta, tolerance(c, 1e-12));
  ojson j;
  j["k"] = report.k;
  j["theta"] = round15(report.theta);
  j["tol"] = report.tol;
  ojson sols = ojson::array();
  ojson slopes = ojson::array();
  ojson stab = ojson::array();
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    sols.push_back(round15(report.solutions[i]));
    slopes.push_back(round15(report.slopes[i]));
    stab.push_back(std::string(to_string(report.stability[i])));
  }
  j["solutions"] = sols;
  j["stability"] = stab;
  j["slopes"] = slopes;
  j["close_roots_warning"] = report.close_roots_warning;
  j["critical_theta"] = round15(critical_theta(k));
  j["parameters"] = parameters;
  Sink sink(c.output, out);
  *sink << j.dump(2) << '\n';
  return kOk;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  const int k = require(c.k, "--k");
  const double lo = require(c.theta_min, "--theta-min");
  const double hi = require(c.theta_max, "--theta-max");
  const int steps = require(c.steps, "--steps");
  if (steps < 1) throw UsageError("--steps must be >= 1");
  if (c.theta || c.J || c.beta) throw UsageError("scan takes a theta range only");
  const double tol = tolerance(c, 1e-12);

  std::ostringstream csv;
  csv << "theta,n_solutions,h_min,h_mid,h_max,stable_flags\n";
  for (int i = 0; i < steps; ++i) {
    const double theta =
        steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    const auto r = solve_homogeneous(k, theta, tol);
    const auto& s = r.solutions;
    std::string h_min, h_mid, h_max;
    if (s.size() == 1) {
      h_mid = format_number(s[0]);
    } else if (s.size() >= 3) {
      h_min = format_number(s.front());
      h_mid = format_number(s[s.size() / 2]);
      h_max = format_number(s.back());
    } else if (s.size() == 2) {
      h_min = format_number(s.front());
      h_max = format_number(s.back());
    }
    std::string flags;
    for (std::size_t j = 0; j < r.stability.size(); ++j) {
      if (j > 0) flags += ';';
      flags += to_string(r.stability[j]);
    }
    csv << format_number(theta) << ',' << s.size() << ',' << h_min << ',' << h_mid << ','
        << h_max << ',' << flags << '\n';
  }
  Sink sink(c.output, out);
  *sink << csv.str();
  return kOk;
}

int cmd_marginals(const RunConfig& c, std::ostream& out) {
  const int k = require(c.k, "--k");
  const CayleyTree tree(k, require(c.depth, "--depth"));
  if (c.observable != "magnetization") {
    throw UsageError("unsupported observable '" + c.observable + "'");
  }
  const Model model = resolve_model(c);
  const BoundaryField h = resolve_field(c.field, k, model);
  const int n_max = c.n_max.value_or(tree.depth());
  const auto family = build_marginals(model.interaction, tree, h, n_max, c.max_states);

  std::ostringstream csv;
  csv << "vertex_index,generation,magnetization\n";
  for (Vertex x = 0; x < tree.ball_size(n_max); ++x) {
    csv << x << ',' << tree.generation(x) << ','
        << format_number(magnetization(family, tree, x)) << '\n';
  }
  Sink sink(c.output, out);
  *sink << csv.str();
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.max_states == 0) throw UsageError("--max-states must be positive");
    const std::string& cmd = config.command;
    if (cmd == "tree") return cmd_tree(config, out);
    if (cmd == "verify-spec") return cmd_verify_spec(config, out);
    if (cmd == "verify-compat") return cmd_verify_compat(config, out);
    if (cmd == "check-law") return cmd_check_law(config, out);
    if (cmd == "solve") return cmd_solve(config, out);
    if (cmd == "scan") return cmd_scan(config, out);
    if (cmd == "marginals") return cmd_marginals(config, out);
    throw UsageError("unknown subcommand '" + cmd + "'");
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gibbslab::cli
