// Copyright 2026 The Ranktest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ranktest: command-line front end. Each subcommand parses its inputs,
// calls into the library and prints a JSON report.
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 tractability guard.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "ranktest/error.hpp"
#include "ranktest/io.hpp"
#include "ranktest/lattice.hpp"
#include "ranktest/stats.hpp"

namespace {

using nlohmann::json;
using namespace ranktest;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGuard = 4;
constexpr std::size_t kMaxListedTrees = 1'000'000;

struct Options {
  std::string test;
  std::string data;
  std::string data_file;
  std::string tie_break = "reject";
  std::string format = "json";
  std::string output;
  std::string kind;
  std::string argument;
  bool close = false;
  bool deterministic = false;
  bool structural = false;
  bool list = false;
};

struct Report {
  json body;
  int exit_code = 0;
};

TiePolicy tie_policy(const Options& o) {
  if (o.tie_break == "reject") return TiePolicy::kReject;
  if (o.tie_break == "index") return TiePolicy::kIndexOrder;
  throw ParseError("--tie-break must be 'reject' or 'index'");
}

RankTest load_test(const Options& o) {
  return io::resolve_test(io::parse_test_spec(o.test),
                          o.close ? io::ClosurePolicy::kClose : io::ClosurePolicy::kReject);
}

Permutation load_observation(const Options& o, int n) {
  if (o.data.empty() == o.data_file.empty()) {
    throw ParseError("give exactly one of --data and --data-file");
  }
  const std::string text = o.data.empty() ? io::read_text(o.data_file) : o.data;
  Permutation p = io::parse_observation(text, tie_policy(o));
  if (p.size() != n) {
    throw ValidationError("observation has " + std::to_string(p.size()) +
                          " entries, the test has " + std::to_string(n));
  }
  return p;
}

json describe(const Options& o, const RankTest& test) {
  return {{"spec", o.test}, {"type", std::string(test_kind(test))}, {"n", test_size(test)}};
}

Report cmd_signature(const Options& o) {
  const RankTest test = load_test(o);
  const Permutation p = load_observation(o, test_size(test));
  const Signature sig = signature(test, p);
  return {{{"test", describe(o, test)},
           {"permutation", p.to_string()},
           {"signature", {{"kind", sig.kind}, {"value", sig.value}}}}};
}

Report cmd_count(const Options& o) {
  const RankTest test = load_test(o);
  const Permutation p = load_observation(o, test_size(test));
  return {{{"test", describe(o, test)},
           {"permutation", p.to_string()},
           {"class_size", to_string(class_size(test, p))},
           {"n_factorial", to_string(factorial(test_size(test)))}}};
}

Report cmd_pvalue(const Options& o) {
  const RankTest test = load_test(o);
  const Permutation p = load_observation(o, test_size(test));
  const Signature sig = signature(test, p);
  const BigInt size = class_size(test, p);
  const ClassTable table = class_sizes(test);
  const Rational pv = p_value(table, size);
  return {{{"test", describe(o, test)},
           {"permutation", p.to_string()},
           {"signature", {{"kind", sig.kind}, {"value", sig.value}}},
           {"class_size", to_string(size)},
           {"classes", table.sizes.size()},
           {"p_value", to_string(pv)},
           {"p_value_decimal", pv.get_d()},
           {"n_factorial", to_string(factorial(table.n))}}};
}

Report validate_statements(const Options& o, const io::StatementList& list) {
  Report r;
  r.body["n"] = list.n;
  if (!is_semigraphoid(list.n, list.statements)) {
    json missing = json::array();
    const std::vector<CIStatement> closure = sg_closure(list.n, list.statements);
    for (const CIStatement& s : closure) {
      if (std::find(list.statements.begin(), list.statements.end(), s) == list.statements.end()) {
        missing.push_back(s.to_string());
      }
    }
    r.body["missing_from_closure"] = missing;
    if (!o.close) {
      r.body["semigraphoid"] = "no";
      r.body["summary"] = "semigraphoid: no";
      r.exit_code = kExitValidation;
      return r;
    }
  }
  const Semigraphoid model = Semigraphoid::closure_of(list.n, list.statements);
  const bool closed = !r.body.contains("missing_from_closure");
  r.body["semigraphoid"] = closed ? "yes" : "closed";
  r.body["statements"] = model.count();
  std::string summary = closed ? "semigraphoid: yes" : "semigraphoid: closed";
  if (o.structural) {
    if (const auto witness = is_structural(model)) {
      r.body["structural"] = "yes";
      r.body["witness"] = io::to_json(witness->weight);
      r.body["slack"] = to_string(witness->slack);
      summary += "; structural: yes";
    } else {
      r.body["structural"] = "no";
      summary += "; structural: no";
    }
  }
  r.body["summary"] = summary;
  return r;
}

Report validate_set_function(const Options& o, const SetFunction& w) {
  Report r;
  r.body["n"] = w.size();
  if (const auto bad = find_submodularity_violation(w)) {
    r.body["submodular"] = "no";
    r.body["violation"] = {{"I", elements_of(bad->first)}, {"J", elements_of(bad->second)}};
    r.body["summary"] = "submodular: no; violated by I=" + format_set(bad->first) +
                        ", J=" + format_set(bad->second);
    r.exit_code = kExitValidation;
    return r;
  }
  const Semigraphoid model = induced_model(w);
  r.body["submodular"] = "yes";
  r.body["induced_model"] = io::to_json(model);
  std::string summary = "submodular: yes";
  if (o.structural) summary += "; structural: yes";
  r.body["summary"] = summary;
  return r;
}

Report cmd_validate(const Options& o) {
  const io::TestSpec spec = io::parse_test_spec(o.test);
  Report r;
  if (const auto* list = std::get_if<io::StatementList>(&spec)) {
    r = validate_statements(o, *list);
  } else if (const auto* w = std::get_if<SetFunction>(&spec)) {
    r = validate_set_function(o, *w);
  } else if (const auto* posets = std::get_if<PosetList>(&spec)) {
    r.body["n"] = posets->n;
    if (const auto problem = poset_list_problem(*posets)) {
      r.body["preconvex"] = "no";
      r.body["problem"] = *problem;
      r.body["summary"] = "preconvex: no";
      r.exit_code = kExitValidation;
    } else {
      r.body["preconvex"] = "yes";
      r.body["classes"] = posets->posets.size();
      r.body["summary"] = "preconvex: yes";
    }
  } else if (const auto* family = std::get_if<SetFamily>(&spec)) {
    const Semigraphoid model = mss_model(*family);
    r.body["n"] = family->size();
    r.body["set_family"] = "yes";
    r.body["model"] = io::to_json(model);
    r.body["summary"] = "set family: yes";
  } else {
    const Graph& g = std::get<Graph>(spec);
    r.body["n"] = g.size();
    r.body["graph"] = "yes";
    r.body["graphical_model"] = io::to_json(graphical_model(g));
    r.body["tubing_model"] = io::to_json(tubing_model(g));
    r.body["summary"] = "graph: yes";
  }
  r.body["spec"] = o.test;
  return r;
}

int parse_count_argument(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError("expected an integer, got '" + text + "'");
  return value;
}

Report cmd_enumerate(const Options& o) {
  Report r;
  r.body["kind"] = o.kind;
  if (o.kind == "semigraphoids") {
    const int n = parse_count_argument(o.argument);
    const std::vector<Semigraphoid> models = enumerate_semigraphoids(n);
    r.body["n"] = n;
    r.body["count"] = models.size();
    r.body["orbits_under_relabeling"] = count_orbits(models, false);
    r.body["orbits_under_relabeling_and_duality"] = count_orbits(models, true);
    if (o.list) {
      json all = json::array();
      for (const Semigraphoid& m : models) all.push_back(io::to_json(m));
      r.body["models"] = all;
    }
  } else if (o.kind == "preconvex") {
    const int n = parse_count_argument(o.argument);
    const PreconvexCount c = count_preconvex(n);
    r.body["n"] = n;
    r.body["count"] = c.preconvex;
    r.body["partitions"] = c.total;
  } else if (o.kind == "mss") {
    const int n = parse_count_argument(o.argument);
    r.body["n"] = n;
    r.body["count"] = count_distinct_mss(n);
  } else if (o.kind == "gtrees") {
    const io::TestSpec spec = io::parse_test_spec(o.argument);
    const Graph* g = std::get_if<Graph>(&spec);
    if (g == nullptr) throw ValidationError("gtrees needs a graph (path:n, cycle:n or a file)");
    const std::vector<GTree> trees = enumerate_gtrees(*g, kMaxListedTrees);
    BigInt total = 0;
    json listed = json::array();
    for (const GTree& t : trees) {
      const BigInt size = t.class_size();
      total += size;
      if (o.list) {
        listed.push_back({{"tree", t.to_string()},
                          {"class_size", to_string(size)},
                          {"representative", t.representative().to_string()}});
      }
    }
    r.body["graph"] = o.argument;
    r.body["n"] = g->size();
    r.body["count"] = trees.size();
    r.body["total_class_size"] = to_string(total);
    if (o.list) r.body["trees"] = listed;
  } else {
    throw ParseError("unknown kind '" + o.kind + "' (semigraphoids, preconvex, mss, gtrees)");
  }
  return r;
}

// Prints the lattice itself unless --output is given.
Report cmd_export_lattice(const Options& o) {
  const LatticeFormat format = parse_lattice_format(o.format);
  const RankTest test = load_test(o);
  const Permutation p = load_observation(o, test_size(test));
  const std::optional<Semigraphoid> model = test_model(test);
  const DistributiveLattice lattice =
      model ? build_lattice(p, *model)
            : lattice_of_poset(*std::find_if(
                  std::get<PosetList>(test).posets.begin(), std::get<PosetList>(test).posets.end(),
                  [&](const Poset& poset) { return poset.is_linear_extension(p); }));
  const std::string text = export_lattice(lattice, format);
  Report r;
  if (o.output.empty()) {
    std::fputs(text.c_str(), stdout);
    r.body = nullptr;
    return r;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out || !(out << text)) throw ParseError("cannot write '" + o.output + "'");
  r.body = {{"test", describe(o, test)},
            {"permutation", p.to_string()},
            {"output", o.output},
            {"format", o.format},
            {"nodes", lattice.nodes().size()},
            {"edges", lattice.edges().size()},
            {"chains", to_string(count_chains(lattice))}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank tests on permutations: signatures, class sizes and p-values."};
  app.require_subcommand(1);
  Options o;

  auto add_test = [&](CLI::App* sub) {
    sub->add_option("--test", o.test,
                     "Test spec: JSON file or updown:n, path:n, cycle:n, complete:n, "
                     "edgeless:n, signtest:m")
        ->required();
    sub->add_flag("--close", o.close, "Replace a statement list by its closure");
    sub->add_flag("--deterministic", o.deterministic, "Omit timing from the report");
  };
  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", o.data, "Data vector \"11,7,13\" or descent vector \"3|1|2\"");
    sub->add_option("--data-file", o.data_file, "File holding the data vector ('-' for stdin)");
    sub->add_option("--tie-break", o.tie_break, "reject (default) or index");
  };

  std::map<CLI::App*, Report (*)(const Options&)> handlers;
  for (auto [name, help, fn] : {std::tuple{"signature", "Signature of the observation", cmd_signature},
                                std::tuple{"count", "Size of the observation's class", cmd_count},
                                std::tuple{"pvalue", "Exact p-value of the observation", cmd_pvalue}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_test(sub);
    add_data(sub);
    handlers[sub] = fn;
  }
  CLI::App* validate = app.add_subcommand("validate", "Check a test representation");
  add_test(validate);
  validate->add_flag("--structural", o.structural, "Also search for a submodular witness");
  handlers[validate] = cmd_validate;

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count (and list) combinatorial objects");
  enumerate->add_option("kind", o.kind, "semigraphoids, preconvex, mss or gtrees")->required();
  enumerate->add_option("argument", o.argument, "n, or a graph spec for gtrees")->required();
  enumerate->add_flag("--list", o.list, "List the objects, not just count them");
  enumerate->add_flag("--deterministic", o.deterministic, "Omit timing from the report");
  handlers[enumerate] = cmd_enumerate;

  CLI::App* export_cmd = app.add_subcommand("export-lattice", "Lattice of the observation's class");
  add_test(export_cmd);
  add_data(export_cmd);
  export_cmd->add_option("--format", o.format, "json (default) or dot");
  export_cmd->add_option("--output", o.output, "Write the lattice here instead of stdout");
  handlers[export_cmd] = cmd_export_lattice;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    Report r = handlers.at(chosen)(o);
    if (!r.body.is_null()) {
      r.body["command"] = chosen->get_name();
      if (!o.deterministic) {
        r.body["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
      }
      std::cout << r.body.dump(2) << "\n";
    }
    return r.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "ranktest: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "ranktest: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GuardError& e) {
    std::cerr << "ranktest: too large: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "ranktest: internal error: " << e.what() << "\n";
    return 1;
  }
}
