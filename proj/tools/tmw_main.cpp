// tmw: stable weighted graphs, contraction posets, tropical moduli cones,
// tropicalization of nodal models and Weierstrass j-invariants.
//
// Exit codes: 0 success, 1 validation/input error, 2 internal invariant
// violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tmw/tmw.hpp"

namespace {

int guard_limit() {
  if (const char* env = std::getenv("TMW_MAX_COMPLEXITY")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw tmw::ValidationError("TMW_MAX_COMPLEXITY must be an integer");
    }
  }
  return 8;
}

void check_guard(int genus, int legs, bool force) {
  if (force) return;
  const int limit = guard_limit();
  if (genus + legs > limit)
    throw tmw::ValidationError("genus+legs = " + std::to_string(genus + legs) +
                               " exceeds the complexity guard " + std::to_string(limit) +
                               " (pass --force or set TMW_MAX_COMPLEXITY)");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tmw::ValidationError("cannot open output file " + path);
  out << content;
}

std::string dump(const tmw::Json& j) { return j.dump(2) + "\n"; }

tmw::Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tmw::ValidationError("cannot open input file " + path);
  return tmw::Json::parse(in);
}

// Edge ids may be given bare ("1") or with an e prefix ("e1").
std::vector<int> parse_edge_tokens(const std::vector<std::string>& tokens) {
  std::vector<int> ids;
  for (const std::string& token : tokens) {
    std::string body = token;
    if (!body.empty() && (body.front() == 'e' || body.front() == 'E')) body = body.substr(1);
    try {
      std::size_t used = 0;
      const int id = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
      ids.push_back(id);
    } catch (...) {
      throw tmw::ValidationError("malformed edge id '" + token + "'");
    }
  }
  return ids;
}

struct Options {
  int genus = 0;
  int legs = 0;
  bool force = false;
  std::string format = "json";
  std::string input;
  std::string output;
  std::vector<std::string> edges;
  std::string a;
  std::string b;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable weighted graphs, contraction posets and tropical moduli cones"};
  app.require_subcommand(1);

  Options opt;

  auto add_census_flags = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("-g,--genus", opt.genus, "genus")->required();
    cmd->add_option("-n,--legs", opt.legs, "number of labeled legs")->default_val(0);
    cmd->add_flag("--force", opt.force, "bypass the complexity guard");
    cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
    if (with_format)
      cmd->add_option("-f,--format", opt.format, "output format")
          ->check(CLI::IsMember({"json", "dot"}))
          ->default_val("json");
  };

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list all stable graph classes of genus g with n legs");
  add_census_flags(cmd_enumerate, true);

  auto* cmd_poset =
      app.add_subcommand("poset", "stratification poset of the genus-g census under contraction");
  add_census_flags(cmd_poset, true);

  auto* cmd_complex = app.add_subcommand("complex", "tropical moduli cone complex");
  add_census_flags(cmd_complex, false);

  auto* cmd_reversal =
      app.add_subcommand("check-reversal", "verify the order reversal between the stratifications");
  add_census_flags(cmd_reversal, false);

  auto* cmd_contract = app.add_subcommand("contract", "contract edges of a graph");
  cmd_contract->add_option("-i,--input", opt.input, "graph JSON file")->required();
  cmd_contract->add_option("-e,--edges", opt.edges, "edge ids to contract (e.g. e1,e2)")
      ->delimiter(',');
  cmd_contract->add_option("-o,--output", opt.output, "output file (default stdout)");
  cmd_contract->add_option("-f,--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->default_val("json");

  auto* cmd_trop = app.add_subcommand("tropicalize", "tropical curve of a nodal model");
  cmd_trop->add_option("-i,--input", opt.input, "model JSON file")->required();
  cmd_trop->add_option("-o,--output", opt.output, "output file (default stdout)");

  auto* cmd_jinv = app.add_subcommand("jinv", "discriminant and j-invariant of y^2=x^3+ax+b");
  cmd_jinv->add_option("-a,--a", opt.a, "coefficient a (rational)")->required();
  cmd_jinv->add_option("-b,--b", opt.b, "coefficient b (rational)")->required();
  cmd_jinv->add_option("-o,--output", opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_enumerate->parsed()) {
      check_guard(opt.genus, opt.legs, opt.force);
      const auto census = tmw::enumerate_stable_graphs(opt.genus, opt.legs);
      write_output(opt.output, opt.format == "dot" ? tmw::enumeration_to_dot(census)
                                                   : dump(tmw::enumeration_to_json(census)));
    } else if (cmd_poset->parsed()) {
      check_guard(opt.genus, opt.legs, opt.force);
      const auto census = tmw::enumerate_stable_graphs(opt.genus, opt.legs);
      if (census.classes.empty()) {
        tmw::Json out{{"genus", opt.genus},
                      {"elements", tmw::Json::array()},
                      {"covers", tmw::Json::array()}};
        write_output(opt.output, opt.format == "dot" ? "digraph strata {\n}\n" : dump(out));
      } else {
        std::vector<tmw::WeightedGraph> reps;
        for (const auto& cls : census.classes) reps.push_back(cls.representative);
        const auto poset = tmw::build_strata_poset(reps);
        write_output(opt.output, opt.format == "dot" ? tmw::poset_to_dot(poset)
                                                     : dump(tmw::poset_to_json(poset)));
      }
    } else if (cmd_complex->parsed()) {
      check_guard(opt.genus, opt.legs, opt.force);
      const auto cx = tmw::build_complex(opt.genus, opt.legs);
      write_output(opt.output, dump(tmw::complex_to_json(cx)));
    } else if (cmd_reversal->parsed()) {
      check_guard(opt.genus, opt.legs, opt.force);
      const auto report = tmw::check_order_reversal(opt.genus, opt.legs);
      write_output(opt.output, dump(tmw::reversal_report_to_json(report)));
      if (!report.pass) {
        std::cerr << "internal error: order reversal check failed\n";
        return 2;
      }
    } else if (cmd_contract->parsed()) {
      const auto graph = tmw::graph_from_json(load_json_file(opt.input));
      tmw::require_connected(graph);
      const auto contracted = tmw::contract_set(graph, parse_edge_tokens(opt.edges));
      write_output(opt.output, opt.format == "dot" ? tmw::graph_to_dot(contracted)
                                                   : dump(tmw::graph_to_json(contracted)));
    } else if (cmd_trop->parsed()) {
      const auto model = tmw::model_from_json(load_json_file(opt.input));
      const auto curve = tmw::trop_of_model(model);
      write_output(opt.output, dump(tmw::tropical_curve_to_json(curve)));
    } else if (cmd_jinv->parsed()) {
      const tmw::WeierstrassCurve curve{tmw::parse_rational(opt.a), tmw::parse_rational(opt.b)};
      const tmw::Rational delta = tmw::discriminant(curve);
      std::string text = "Delta = " + tmw::to_string(delta) + "\n";
      text += delta == 0 ? "singular\n" : "j = " + tmw::to_string(tmw::j_invariant(curve)) + "\n";
      write_output(opt.output, text);
    }
  } catch (const tmw::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tmw::Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";  // carries the byte position
    return 1;
  } catch (const tmw::Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const tmw::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
