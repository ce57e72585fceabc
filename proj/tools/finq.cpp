// finq: permutation groups, characters, decompositions and Born observables
// as JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finq/born.hpp"
#include "finq/character_table.hpp"
#include "finq/class_algebra.hpp"
#include "finq/decomposition.hpp"
#include "finq/errors.hpp"
#include "finq/group.hpp"
#include "finq/json_io.hpp"
#include "finq/mixing.hpp"
#include "finq/representation.hpp"

namespace {

using finq::io::json;

enum Exit : int { kOk = 0, kInput = 2, kCap = 3, kInvariant = 4 };

struct GroupArgs {
  std::size_t degree = 0;
  std::vector<std::string> generators;
};

void add_group_args(CLI::App* cmd, GroupArgs& args, bool required = true) {
  auto* d = cmd->add_option("--degree", args.degree, "Number of points");
  auto* g = cmd->add_option("generators", args.generators, "Generators in cycle notation, e.g. \"(1,2,3)\"");
  if (required) {
    d->required();
    g->required();
  }
}

std::size_t group_cap() {
  const char* env = std::getenv("FINQ_CAP");
  if (env == nullptr || *env == '\0') return finq::kDefaultGroupCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(env, &used);
    if (used != std::string(env).size() || cap == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    throw finq::InputError(std::string("FINQ_CAP must be a positive integer, got \"") + env + "\"");
  }
}

std::vector<finq::Permutation> parse_all(const std::vector<std::string>& texts, std::size_t degree) {
  if (degree == 0) throw finq::InputError("--degree must be positive");
  std::vector<finq::Permutation> out;
  for (const auto& t : texts) out.push_back(finq::parse_cycles(t, degree));
  return out;
}

std::shared_ptr<const finq::FiniteGroup> build_group(const GroupArgs& args) {
  const auto gens = parse_all(args.generators, args.degree);
  return std::make_shared<const finq::FiniteGroup>(finq::generate(gens, group_cap()));
}

json rational_field(const finq::Rational& q, bool with_float) {
  json out{{"exact", finq::io::to_json(q)}};
  if (with_float) out["float"] = q.get_d();
  return out;
}

void emit(const json& report, const std::string& output) {
  const auto text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw finq::InputError("cannot write " + output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-group representation and Born-rule toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  bool with_float = false;
  app.add_option("-o,--output", output, "Write JSON here instead of standard output");
  app.add_flag("--float", with_float, "Add approximate decimal renderings");

  GroupArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "Order, exponent, classes and class coefficients");
  add_group_args(group_cmd, group_args);

  GroupArgs table_args;
  auto* table_cmd = app.add_subcommand("chartab", "Character table");
  add_group_args(table_cmd, table_args);

  GroupArgs dec_args;
  std::vector<std::string> subgroup;
  bool regular = false;
  auto* dec_cmd = app.add_subcommand("decompose", "Split a permutation representation into irreducibles");
  add_group_args(dec_cmd, dec_args);
  auto* sub_opt = dec_cmd->add_option("--subgroup", subgroup, "Act on the cosets of the subgroup with these generators")
                      ->expected(1)
                      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  dec_cmd->add_flag("--regular", regular, "Use the regular representation")->excludes(sub_opt);

  GroupArgs born_args;
  std::vector<std::uint64_t> m_state;
  std::vector<std::uint64_t> n_state;
  std::string subspace = "full";
  auto* born_cmd = app.add_subcommand("born", "Born probability of two natural-number states");
  add_group_args(born_cmd, born_args, false);
  born_cmd->add_option("--m", m_state, "Apparatus state, comma separated")->required()->delimiter(',');
  born_cmd->add_option("--n", n_state, "System state, comma separated")->required()->delimiter(',');
  born_cmd->add_option("--subspace", subspace, "full, complement or c3")
      ->check(CLI::IsMember({"full", "complement", "c3"}));

  std::size_t inter_degree = 0;
  std::uint64_t bound = 0;
  unsigned jobs = 1;
  auto* inter_cmd = app.add_subcommand("interfere", "Destructive-interference pairs with bounded components");
  inter_cmd->add_option("--degree", inter_degree, "Vector length N")->required();
  inter_cmd->add_option("--bound", bound, "Largest component")->required();
  inter_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string matrix_file;
  std::string table_file;
  std::string compare_file;
  bool use_tb = false;
  bool pattern = false;
  double tolerance = 0.0;
  auto* mix_cmd = app.add_subcommand("mixing", "Moduli-squared tables, pattern checks and comparisons");
  auto* matrix_opt = mix_cmd->add_option("--matrix", matrix_file, "Exact 3x3 matrix JSON");
  auto* table_opt = mix_cmd->add_option("--table", table_file, "Measured or exact table JSON");
  auto* tb_opt = mix_cmd->add_flag("--tribimaximal", use_tb, "Use the tribimaximal matrix");
  matrix_opt->excludes(table_opt)->excludes(tb_opt);
  table_opt->excludes(tb_opt);
  mix_cmd->add_flag("--pattern", pattern, "Check the three mixing relations");
  mix_cmd->add_option("--tolerance", tolerance, "Pattern tolerance")->check(CLI::NonNegativeNumber);
  mix_cmd->add_option("--compare", compare_file, "Table JSON to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    json report;
    if (group_cmd->parsed()) {
      const auto g = build_group(group_args);
      const auto classes = finq::conjugacy_classes(*g);
      report = finq::io::group_report(*g, classes, finq::class_coefficients(*g, classes));
    } else if (table_cmd->parsed()) {
      const auto g = build_group(table_args);
      report = finq::io::to_json(finq::character_table(*g), *g, with_float);
    } else if (dec_cmd->parsed()) {
      const auto g = build_group(dec_args);
      finq::Representation rep;
      std::string action = "natural";
      if (regular) {
        if (g->order() > 512) throw finq::CapExceeded("regular representation limited to groups of order 512");
        rep = finq::regular_representation(g);
        action = "regular";
      } else if (!subgroup.empty()) {
        const auto h = parse_all(subgroup, dec_args.degree);
        rep = finq::permutation_representation(finq::coset_action_generated(g, h));
        action = "cosets";
      } else {
        rep = finq::permutation_representation(g);
      }
      report = finq::io::to_json(finq::decompose_permutation(rep), *g, with_float);
      report["action"] = action;
    } else if (born_cmd->parsed()) {
      if (!born_args.generators.empty()) {
        const auto g = build_group(born_args);
        if (m_state.size() != g->degree() || n_state.size() != g->degree()) {
          throw finq::InputError("state length must equal the degree");
        }
      }
      finq::Rational p;
      if (subspace == "full") {
        p = finq::born_full(m_state, n_state);
      } else if (subspace == "complement") {
        p = finq::born_complement(m_state, n_state);
        report["inner"] = finq::io::to_json(finq::complement_inner(m_state, n_state));
      } else {
        p = finq::c3_born_subspace(m_state, n_state);
        report["inner"] = finq::io::to_json(finq::c3_subspace_inner(m_state, n_state), with_float);
      }
      report["m"] = m_state;
      report["n"] = n_state;
      report["subspace"] = subspace;
      report["probability"] = rational_field(p, with_float);
    } else if (inter_cmd->parsed()) {
      const auto pairs = finq::interference_solutions(inter_degree, bound, jobs);
      report = {{"bound", bound}, {"count", pairs.size()}, {"degree", inter_degree},
                {"solutions", finq::io::to_json(pairs)}};
    } else if (mix_cmd->parsed()) {
      std::optional<finq::MixTable> table;
      if (use_tb) {
        const auto tb = finq::tribimaximal();
        report["matrix"] = finq::io::to_json(tb, with_float);
        table = finq::moduli_squared(tb);
      } else if (!matrix_file.empty()) {
        std::ifstream in(matrix_file);
        if (!in) throw finq::InputError("cannot open " + matrix_file);
        const auto m = finq::io::matrix_from_json(json::parse(in));
        report["matrix"] = finq::io::to_json(m, with_float);
        table = finq::moduli_squared(m);
      } else if (!table_file.empty()) {
        table = finq::io::mix_table_from_file(table_file);
      } else {
        throw finq::InputError("mixing needs --matrix, --table or --tribimaximal");
      }
      report["table"] = finq::io::to_json(*table);
      if (pattern) {
        report["pattern"] = finq::io::to_json(finq::pattern_check(*table, tolerance));
        report["tolerance"] = tolerance;
      }
      if (!compare_file.empty()) {
        report["deviation"] = finq::io::to_json(finq::deviation(*table, finq::io::mix_table_from_file(compare_file)));
      }
    }
    emit(report, output);
    return kOk;
  } catch (const finq::CapExceeded& e) {
    std::cerr << "finq: " << e.what() << "\n";
    return kCap;
  } catch (const finq::InvariantViolation& e) {
    std::cerr << "finq: invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const finq::InputError& e) {
    std::cerr << "finq: " << e.what() << "\n";
    return kInput;
  } catch (const finq::DomainError& e) {
    std::cerr << "finq: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "finq: bad JSON: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "finq: internal error: " << e.what() << "\n";
    return kInvariant;
  }
}
