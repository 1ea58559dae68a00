#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ordlip/ordlip.hpp>

namespace {

struct GlobalOpts {
  double epsilon = 1e-9;
  std::string format = "json";
  std::string output;
};

// Results go to stdout unless --output names a file.
void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty())
    std::cout << text;
  else
    ordlip::io::write_text_file(g.output, text);
}

std::vector<std::pair<int, int>> parse_edges(const std::vector<std::string>& tokens) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
      throw ordlip::Error(ordlip::Errc::ParseError, "edge \"" + tok + "\" is not of the form u-v");
    try {
      edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ordlip::Error(ordlip::Errc::ParseError, "edge \"" + tok + "\" is not of the form u-v");
    }
  }
  return edges;
}

int run_check(const GlobalOpts& g, const std::string& instance_path) {
  const ordlip::Context ctx{g.epsilon};
  const auto poset = ordlip::io::read_instance(instance_path, ctx);
  const auto report = ordlip::check_radiality(poset, ctx);
  if (g.format == "tsv")
    emit(g, ordlip::io::report_tsv(report));
  else
    emit(g, ordlip::io::dump(ordlip::io::report_to_json(report)));
  return report.radial ? 0 : 1;
}

int run_extend(const GlobalOpts& g, const std::string& instance_path, const std::string& function_path,
               const std::string& selector, const std::string& order, bool oracle_check) {
  const ordlip::Context ctx{g.epsilon};
  const auto poset = ordlip::io::read_instance(instance_path, ctx);
  const auto f = ordlip::io::read_function(function_path, ctx);

  ordlip::ExtensionPolicy policy;
  policy.selector = selector == "max"   ? ordlip::Selector::Max
                    : selector == "mid" ? ordlip::Selector::Mid
                                        : ordlip::Selector::Min;
  policy.point_order =
      order == "descending" ? ordlip::PointOrder::Descending : ordlip::PointOrder::Ascending;

  const auto outcome = ordlip::extend(poset, f, policy, ctx);
  if (g.format == "tsv")
    emit(g, ordlip::io::function_table_tsv(poset, outcome.F));
  else
    emit(g, ordlip::io::dump(ordlip::io::outcome_to_json(outcome)));

  if (oracle_check) {
    const auto oracle = ordlip::oracle_solve(poset, f, ctx);
    const bool feasible = outcome.status == ordlip::ExtensionStatus::Feasible;
    bool agree = feasible == oracle.feasible;
    if (agree && feasible) {
      for (int p = 0; p < poset.size() && agree; ++p)
        for (int t = 0; t < f.width(); ++t) {
          const double v = outcome.F[p][t];
          bool ok = true;
          switch (policy.selector) {
            case ordlip::Selector::Min: ok = std::abs(v - oracle.Fmin[p][t]) <= ctx.epsilon; break;
            case ordlip::Selector::Max: ok = std::abs(v - oracle.Fmax[p][t]) <= ctx.epsilon; break;
            case ordlip::Selector::Mid:
              ok = v >= oracle.Fmin[p][t] - ctx.epsilon && v <= oracle.Fmax[p][t] + ctx.epsilon;
              break;
          }
          if (!ok) {
            agree = false;
            break;
          }
        }
    }
    if (!agree) {
      std::cerr << "oracle disagreement: constructive extension and difference-constraint solver diverge"
                << std::endl;
      return 1;
    }
  }
  return outcome.status == ordlip::ExtensionStatus::Feasible ? 0 : 1;
}

int run_represent(const GlobalOpts& g, const std::string& instance_path, bool strict) {
  const ordlip::Context ctx{g.epsilon};
  const auto poset = ordlip::io::read_instance(instance_path, ctx);
  if (strict) {
    const auto m = ordlip::strict_monotone_map(poset, ctx);
    if (g.format == "tsv") {
      std::vector<std::vector<double>> rows;
      rows.reserve(m.values.size());
      for (double v : m.values) rows.push_back({v});
      emit(g, ordlip::io::function_table_tsv(poset, rows));
    } else {
      emit(g, ordlip::io::dump(ordlip::io::strict_map_to_json(m)));
    }
    return 0;
  }
  const auto fam = ordlip::representing_family(poset, ctx);
  if (g.format == "tsv")
    emit(g, ordlip::io::family_tsv(poset, fam));
  else
    emit(g, ordlip::io::dump(ordlip::io::family_to_json(fam)));
  return 0;
}

int run_remetrize(const GlobalOpts& g, const std::string& instance_path, const std::string& function_path) {
  const ordlip::Context ctx{g.epsilon};
  const auto poset = ordlip::io::read_instance(instance_path, ctx);
  const auto f = ordlip::io::read_function(function_path, ctx);
  const auto result = ordlip::extend_uniform(poset, f, ctx);
  if (g.format == "tsv")
    emit(g, ordlip::io::function_table_tsv(poset, result.outcome.F));
  else
    emit(g, ordlip::io::dump(ordlip::io::uniform_to_json(result)));
  return result.certificate.holds ? 0 : 1;
}

int run_generate(const GlobalOpts& g, const ordlip::GeneratorSpec& spec) {
  const ordlip::Context ctx{g.epsilon};
  const auto poset = ordlip::make_instance(spec, ctx);
  emit(g, ordlip::io::dump(ordlip::io::poset_to_json(poset)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-preserving Lipschitz extensions on finite metric posets"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--epsilon", g.epsilon, "comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", g.output, "write the result to this file instead of stdout");

  auto* check = app.add_subcommand("check", "radiality diagnostics for an instance");
  check->fallthrough();
  std::string check_instance;
  check->add_option("instance", check_instance, "instance JSON file")->required();

  auto* extend = app.add_subcommand("extend", "monotone Lipschitz extension of a partial function");
  extend->fallthrough();
  std::string ext_instance, ext_function;
  std::string ext_selector = "min", ext_order = "ascending";
  bool ext_oracle = false;
  extend->add_option("instance", ext_instance, "instance JSON file")->required();
  extend->add_option("function", ext_function, "partial function JSON file")->required();
  extend->add_option("--policy", ext_selector, "value selector")->check(CLI::IsMember({"min", "max", "mid"}));
  extend->add_option("--order", ext_order, "visit order")->check(CLI::IsMember({"ascending", "descending"}));
  extend->add_flag("--oracle-check", ext_oracle, "cross-validate against the difference-constraint solver");

  auto* represent = app.add_subcommand("represent", "representing family (or strict monotone map) of a radial instance");
  represent->fallthrough();
  std::string rep_instance;
  bool rep_strict = false;
  represent->add_option("instance", rep_instance, "instance JSON file")->required();
  represent->add_flag("--strict", rep_strict, "emit one strictly increasing 1-Lipschitz map instead");

  auto* remetrize = app.add_subcommand("remetrize", "uniformly continuous extension via the concave majorant");
  remetrize->fallthrough();
  std::string rem_instance, rem_function;
  remetrize->add_option("instance", rem_instance, "instance JSON file")->required();
  remetrize->add_option("function", rem_function, "partial function JSON file")->required();

  auto* generate = app.add_subcommand("generate", "write an instance from a named generator");
  generate->fallthrough();
  std::string gen_spec_path, gen_kind, gen_metric = "dt";
  std::vector<std::string> gen_edges;
  ordlip::GeneratorSpec spec;
  generate->add_option("--spec", gen_spec_path, "generator spec JSON file");
  generate->add_option("--kind", gen_kind, "generator kind")
      ->check(CLI::IsMember({"example1", "example2", "example3", "example4", "random-discrete",
                             "random-euclidean", "random-loset", "random-metric-loset"}));
  generate->add_option("--a", spec.a, "example1 parameter a");
  generate->add_option("--b", spec.b, "example1 parameter b");
  generate->add_option("--edges", gen_edges, "example2 tree edges as u-v tokens");
  generate->add_option("--root", spec.root, "example2 root vertex");
  generate->add_option("--metric", gen_metric, "example2 metric")->check(CLI::IsMember({"dt", "rho"}));
  generate->add_option("--a-points", spec.a_points, "example3 component A as reals");
  generate->add_option("--b-points", spec.b_points, "example3 component B as reals");
  generate->add_option("--theta", spec.theta, "example3 cross-distance scale");
  generate->add_option("--samples", spec.samples, "example4 interval samples");
  generate->add_option("--antichain", spec.antichain, "example4 antichain size");
  generate->add_option("--n", spec.n, "random generators: point count");
  generate->add_option("--edge-prob", spec.edge_prob, "random-discrete: order density");
  generate->add_option("--seed", spec.seed, "random generators: seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(g, check_instance);
    if (app.got_subcommand(extend))
      return run_extend(g, ext_instance, ext_function, ext_selector, ext_order, ext_oracle);
    if (app.got_subcommand(represent)) return run_represent(g, rep_instance, rep_strict);
    if (app.got_subcommand(remetrize)) return run_remetrize(g, rem_instance, rem_function);
    if (app.got_subcommand(generate)) {
      if (!gen_spec_path.empty()) {
        spec = ordlip::io::spec_from_json(ordlip::io::read_json_file(gen_spec_path));
      } else {
        if (gen_kind.empty())
          throw ordlip::Error(ordlip::Errc::ParseError, "generate needs --spec or --kind");
        spec.kind = ordlip::io::generator_kind_from_string(gen_kind);
        if (!gen_edges.empty()) spec.edges = parse_edges(gen_edges);
        spec.rho_metric = gen_metric == "rho";
      }
      return run_generate(g, spec);
    }
  } catch (const ordlip::Error& e) {
    std::cerr << e.what() << std::endl;
    return e.code() == ordlip::Errc::NotRadial ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
