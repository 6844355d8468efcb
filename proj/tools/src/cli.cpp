#include "weylgray_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "weylgray/cayley.hpp"
#include "weylgray/counting.hpp"
#include "weylgray/hamilton_search.hpp"
#include "weylgray/optimal_codes.hpp"
#include "weylgray/recursive_codes.hpp"
#include "weylgray/text_io.hpp"

namespace weylgray::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string type;
  int n = 0;
  std::string format = "text";
};

struct GenerateArgs {
  std::string algorithm;
  std::string output;
};

struct VerifyArgs {
  std::string check;
  std::string input = "-";
  std::string reading = "literal";
  bool strict_b = false;
  bool open = false;
};

struct SearchArgs {
  std::string object;
  int distance = 2;
  double timeout_seconds = 60.0;
  int threads = 1;
  std::uint64_t node_budget = SearchOptions{}.node_budget;
};

void add_type_and_rank(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--type", common.type, "Group type")
      ->required()
      ->check(CLI::IsMember({"A", "B", "D"}, CLI::ignore_case));
  sub->add_option("--n", common.n, "Rank")->required()->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

json words_json(const CodeList& list) {
  json arr = json::array();
  for (const SignedPerm& w : list) arr.push_back(std::vector<int>(w.word().begin(), w.word().end()));
  return arr;
}

void write_list(std::ostream& out, const CodeList& list, const std::string& format,
                const std::string& algorithm) {
  if (format == "json") {
    json doc = {{"type", std::string(1, to_char(list.type))},
                {"n", list.rank},
                {"algorithm", algorithm},
                {"size", list.size()},
                {"entries", words_json(list)}};
    out << doc.dump() << '\n';
  } else {
    write_code_list(out, list, algorithm);
  }
}

int do_count(const CommonArgs& common, std::ostream& out) {
  out << count(parse_group_type(common.type), common.n) << '\n';
  return kOk;
}

int do_enumerate(const CommonArgs& common, std::ostream& out) {
  write_list(out, enumerate(parse_group_type(common.type), common.n), common.format, "enumerate");
  return kOk;
}

CodeList generate_list(GroupType type, int n, const std::string& algorithm) {
  if (algorithm == "recursive") {
    switch (type) {
      case GroupType::A: return gca(n);
      case GroupType::B: return gcb(n);
      case GroupType::D: return gcd_code(n);
    }
  }
  switch (type) {
    case GroupType::A:
      throw UsageError("no optimal algorithm for type A (distance 3 is already minimal)");
    case GroupType::B: return ogcb(n);
    case GroupType::D: return build_d_distance2(n);
  }
  throw UsageError("unknown algorithm");
}

int do_generate(const CommonArgs& common, const GenerateArgs& args, std::ostream& out) {
  const CodeList list = generate_list(parse_group_type(common.type), common.n, args.algorithm);
  if (args.output.empty() || args.output == "-") {
    write_list(out, list, common.format, args.algorithm);
    return kOk;
  }
  std::ofstream file(args.output);
  if (!file) throw UsageError("cannot open output file: " + args.output);
  write_list(file, list, common.format, args.algorithm);
  return file ? kOk : kUsage;
}

CodeFile read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_code_file(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file: " + path);
  return read_code_file(file);
}

int do_verify(const CommonArgs& common, const VerifyArgs& args, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const GroupType type = parse_group_type(common.type);
  if (args.strict_b && (args.check != "gray" || type != GroupType::B)) {
    throw UsageError("--strict-b requires --type B --check gray");
  }
  if (args.open && args.check != "distance2") {
    throw UsageError("--open only applies to --check distance2");
  }

  CodeList list;
  try {
    list = to_code_list(read_input(args.input, in), type, common.n);
  } catch (const std::invalid_argument& e) {
    err << "verify: " << e.what() << '\n';
    return kVerifyFailed;
  }

  ValidationReport report;
  std::optional<MoveTally> tally;
  if (args.check == "coverage") {
    check_coverage(list, report);
    report.max_distance = max_hamming(list, true);
  } else if (args.check == "gray") {
    report = validate_properties(list, args.strict_b);
  } else if (args.check == "cayley") {
    const RangeReading reading =
        args.reading == "amended" ? RangeReading::Amended : RangeReading::Literal;
    report = verify_hamilton_cycle(list, generating_set(type, common.n, reading));
  } else {
    const Distance2Report d2 = verify_distance2(list, !args.open);
    report = d2.report;
    tally = d2.tally;
  }

  const bool ok = report.passed();
  if (common.format == "json") {
    json doc = {{"check", args.check},
                {"passed", ok},
                {"entries", list.size()},
                {"max_distance", report.max_distance}};
    json viol = json::array();
    for (const Violation& v : report.violations) viol.push_back(v.to_string());
    doc["violations"] = viol;
    if (tally) {
      doc["moves"] = {{"single_sign", tally->single_sign},
                      {"paired_sign", tally->paired_sign},
                      {"unpaired_double", tally->unpaired_double},
                      {"plain_transposition", tally->plain_transposition},
                      {"other", tally->other}};
    }
    out << doc.dump() << '\n';
  } else {
    out << (ok ? "PASS" : "FAIL") << " check=" << args.check << " entries=" << list.size()
        << " max_distance=" << report.max_distance
        << " violations=" << report.violations.size() << '\n';
    for (const Violation& v : report.violations) out << v.to_string() << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

int do_search(const CommonArgs& common, const SearchArgs& args, std::ostream& out) {
  if (args.distance != 2) throw UsageError("only --distance 2 is supported");
  if (args.threads < 1) throw UsageError("--threads must be positive");
  const GroupType type = parse_group_type(common.type);
  const HamiltonObject object =
      args.object == "cycle" ? HamiltonObject::Cycle : HamiltonObject::Path;

  SearchOptions options;
  options.timeout_seconds = args.timeout_seconds;
  options.threads = args.threads;
  options.node_budget = args.node_budget;
  const SearchResult r = find_hamilton(distance2_graph(type, common.n), object, options);

  if (common.format == "json") {
    json doc = {{"outcome", std::string(to_string(r.outcome))},
                {"nodes_expanded", r.nodes_expanded},
                {"elapsed_ms", r.elapsed_ms}};
    if (r.witness) doc["witness"] = words_json(*r.witness);
    out << doc.dump() << '\n';
  } else {
    out << "# outcome=" << to_string(r.outcome) << " nodes_expanded=" << r.nodes_expanded
        << '\n';
    if (r.witness) {
      for (const SignedPerm& w : *r.witness) {
        write_word(out, w);
        out << '\n';
      }
    }
  }
  return r.outcome == SearchOutcome::Found ? kOk : kSearchUnresolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gray codes and Hamilton cycles for involutions of Weyl groups A, B, D",
               "weylgray"};
  app.require_subcommand(1);

  CommonArgs common;
  GenerateArgs gen;
  VerifyArgs ver;
  SearchArgs srch;

  CLI::App* count_cmd = app.add_subcommand("count", "Number of involutions");
  add_type_and_rank(count_cmd, common);

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "List all involutions");
  add_type_and_rank(enum_cmd, common);
  add_format(enum_cmd, common);

  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a cyclic Gray code");
  add_type_and_rank(gen_cmd, common);
  add_format(gen_cmd, common);
  gen_cmd->add_option("--algorithm", gen.algorithm)
      ->required()
      ->check(CLI::IsMember({"recursive", "optimal"}));
  gen_cmd->add_option("--output", gen.output, "Output path ('-' for stdout)");

  CLI::App* ver_cmd = app.add_subcommand("verify", "Verify a code file");
  add_type_and_rank(ver_cmd, common);
  add_format(ver_cmd, common);
  ver_cmd->add_option("--check", ver.check)
      ->required()
      ->check(CLI::IsMember({"coverage", "gray", "cayley", "distance2"}));
  ver_cmd->add_option("--input", ver.input, "Input path ('-' for stdin)");
  ver_cmd->add_flag("--strict-b", ver.strict_b,
                    "Type B: no sign change on rotations, at most one on transpositions");
  ver_cmd->add_option("--reading", ver.reading, "Index ranges of the connecting set")
      ->check(CLI::IsMember({"literal", "amended"}));
  ver_cmd->add_flag("--open", ver.open, "distance2: check a path instead of a cycle");

  CLI::App* search_cmd = app.add_subcommand("search", "Search for a distance-2 Hamilton cycle or path");
  add_type_and_rank(search_cmd, common);
  add_format(search_cmd, common);
  search_cmd->add_option("--object", srch.object)
      ->required()
      ->check(CLI::IsMember({"cycle", "path"}));
  search_cmd->add_option("--distance", srch.distance)->required();
  search_cmd->add_option("--timeout-seconds", srch.timeout_seconds)->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", srch.threads);
  search_cmd->add_option("--node-budget", srch.node_budget);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "weylgray: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (count_cmd->parsed()) return do_count(common, out);
    if (enum_cmd->parsed()) return do_enumerate(common, out);
    if (gen_cmd->parsed()) return do_generate(common, gen, out);
    if (ver_cmd->parsed()) return do_verify(common, ver, in, out, err);
    return do_search(common, srch, out);
  } catch (const UsageError& e) {
    err << "weylgray: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionFailed& e) {
    err << "weylgray: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "weylgray: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "weylgray: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace weylgray::cli
