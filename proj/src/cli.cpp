#include "ifss/cli.hpp"

#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "ifss/error.hpp"
#include "ifss/io.hpp"
#include "ifss/laws.hpp"
#include "ifss/score.hpp"

namespace ifss {

namespace {

/// Bad flag combinations that CLI11 cannot express declaratively.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kNormNames{"minmax", "prodsum", "lukasiewicz"};

struct Options {
  std::string kind;
  std::string left;
  std::string right;
  std::string relation;
  std::string softset;
  std::string norms;
  std::string output;
  std::string law;
  unsigned power = 2;
  bool list_laws = false;
  SearchConfig search;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_text_file(o.output, text);
  }
}

NormPair norms_or_usage(const Options& o, const std::string& what) {
  if (o.norms.empty()) throw UsageError(what + " requires --norms");
  return NormPair::from_name(o.norms);
}

std::string require_path(const std::string& value, const std::string& flag,
                         const std::string& what) {
  if (value.empty()) throw UsageError(what + " requires " + flag);
  return value;
}

void run_op(const Options& o, std::ostream& out) {
  const NormPair pair = NormPair::from_name(o.norms);
  const IFSoftSet left = parse_soft_set(read_text_file(o.left));
  const IFSoftSet right = parse_soft_set(read_text_file(o.right));
  const IFSoftSet result = o.kind == "intersect" ? soft_intersect(pair, left, right)
                                                 : soft_union(pair, left, right);
  emit(o, serialize_soft_set(result), out);
}

void run_product(const Options& o, std::ostream& out) {
  const NormPair pair = NormPair::from_name(o.norms);
  const IFSoftSet left = parse_soft_set(read_text_file(o.left));
  const IFSoftSet right = parse_soft_set(read_text_file(o.right));
  emit(o, serialize_relation(cartesian_product(pair, left, right)), out);
}

void run_relate(const Options& o, std::ostream& out) {
  if (o.kind == "inverse") {
    const auto path = require_path(o.relation, "--relation", "relate inverse");
    emit(o, serialize_relation(inverse(parse_relation(read_text_file(path)))), out);
  } else if (o.kind == "compose") {
    const auto left = require_path(o.left, "--left", "relate compose");
    const auto right = require_path(o.right, "--right", "relate compose");
    const NormPair pair = norms_or_usage(o, "relate compose");
    emit(o,
         serialize_relation(compose(pair, parse_relation(read_text_file(left)),
                                    parse_relation(read_text_file(right)))),
         out);
  } else {
    const auto path = require_path(o.relation, "--relation", "relate power");
    const NormPair pair = norms_or_usage(o, "relate power");
    emit(o, serialize_relation(power(pair, parse_relation(read_text_file(path)), o.power)), out);
  }
}

void run_check(const Options& o, std::ostream& out) {
  const IFSoftRelation r = parse_relation(read_text_file(o.relation));
  PredicateResult result;
  if (o.kind == "symmetric") {
    result = is_symmetric(r);
  } else if (o.kind == "reflexive") {
    result = is_reflexive(r);
  } else if (o.kind == "transitive") {
    result = is_transitive(norms_or_usage(o, "check transitive"), r);
  } else {
    result = is_equivalence(norms_or_usage(o, "check equivalence"), r);
  }
  out << (result.holds ? "true" : "false") << "\n";
  if (result.witness) out << "witness: " << *result.witness << "\n";
}

void run_laws(const Options& o, std::ostream& out) {
  if (o.list_laws) {
    for (LawId law : all_laws()) {
      out << law_name(law) << (requires_idempotence(law) ? "  (idempotent norms only)" : "")
          << "\n";
    }
    return;
  }
  if (o.law.empty()) throw UsageError("laws requires --law (or --list)");
  const LawId law = parse_law(o.law);
  const NormPair pair = norms_or_usage(o, "laws");
  out << serialize_verdict(check_law(law, pair, o.search));
}

void run_score(const Options& o, std::ostream& out) {
  for (const auto& entry : rank_by_score(parse_soft_set(read_text_file(o.softset)))) {
    out << entry.element << "\t" << format_degree(entry.score) << "\n";
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Algebra of intuitionistic fuzzy soft sets", "ifss"};
  app.require_subcommand(1);

  auto norms_option = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--norms", o.norms, "Dual norm pair")
                    ->check(CLI::IsMember(kNormNames));
    if (required) opt->required();
  };

  auto* op = app.add_subcommand("op", "Intersection or union of two soft sets");
  op->add_option("kind", o.kind)->required()->check(CLI::IsMember({"intersect", "union"}));
  op->add_option("--left", o.left, "Soft set file")->required();
  op->add_option("--right", o.right, "Soft set file")->required();
  norms_option(op, true);
  op->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* product = app.add_subcommand("product", "Cartesian product of two soft sets");
  product->add_option("--left", o.left, "Soft set file")->required();
  product->add_option("--right", o.right, "Soft set file")->required();
  norms_option(product, true);
  product->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* relate = app.add_subcommand("relate", "Inverse, composition or power of relations");
  relate->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"inverse", "compose", "power"}));
  relate->add_option("--relation", o.relation, "Relation file (inverse, power)");
  relate->add_option("--left", o.left, "First relation file (compose)");
  relate->add_option("--right", o.right, "Second relation file (compose)");
  relate->add_option("-n,--power", o.power, "Exponent for power")->check(CLI::PositiveNumber);
  norms_option(relate, false);
  relate->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* check = app.add_subcommand("check", "Test a relation property");
  check->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"symmetric", "transitive", "reflexive", "equivalence"}));
  check->add_option("--relation", o.relation, "Relation file")->required();
  norms_option(check, false);

  auto* laws = app.add_subcommand("laws", "Verify an algebraic law and print the verdict as JSON");
  laws->add_option("--law", o.law, "Law identifier (see --list)");
  laws->add_flag("--list", o.list_laws, "List law identifiers");
  norms_option(laws, false);
  laws->add_option("--grid-step", o.search.grid_step, "Grid spacing for soft-set laws");
  laws->add_option("--trials", o.search.trials, "Random instances to evaluate");
  laws->add_option("--seed", o.search.seed, "Random seed");

  auto* score = app.add_subcommand("score", "Rank universe elements by total (mu - nu)");
  score->add_option("--softset", o.softset, "Soft set file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (op->parsed()) run_op(o, out);
    else if (product->parsed()) run_product(o, out);
    else if (relate->parsed()) run_relate(o, out);
    else if (check->parsed()) run_check(o, out);
    else if (laws->parsed()) run_laws(o, out);
    else run_score(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ifss
