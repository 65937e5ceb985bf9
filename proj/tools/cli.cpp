#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stratakit/error.hpp"
#include "stratakit/expression.hpp"
#include "stratakit/json.hpp"
#include "stratakit/kgroup.hpp"
#include "stratakit/multisegments.hpp"
#include "stratakit/strata.hpp"

namespace stratakit::cli {

namespace {

using nlohmann::json;

// Malformed input: reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& arg, const std::string& what) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw UsageError("cannot read " + what + " file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw UsageError("malformed JSON in " + what + " at byte " + std::to_string(ex.byte) + ": " + ex.what());
  }
}

template <class T>
T decode(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception& ex) {
    throw UsageError("malformed " + what + ": " + ex.what());
  }
}

std::optional<std::size_t> env_budget() {
  const char* raw = std::getenv("STRATAKIT_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw UsageError("STRATAKIT_BUDGET must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

LineTable parse_dims(const std::vector<std::string>& specs) {
  LineTable table;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--dim expects <line>=<dim>, got '" + spec + "'");
    CuspidalLine line{spec.substr(0, eq), 0, std::nullopt};
    try {
      line.dim = std::stoi(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--dim expects an integer dimension, got '" + spec + "'");
    }
    if (line.dim < 1) throw UsageError("--dim expects a positive dimension");
    table[line.id] = line;
  }
  return table;
}

struct Options {
  std::string format;
  std::string out_path;
  std::optional<std::size_t> budget;

  std::string mseg;
  bool dot = false;
  std::string block;
  std::string lambda;
  std::string cls;
  std::optional<int> ext_r;
  std::string ext_mseg;
  std::string identity;
  std::vector<std::string> dims;
  std::string support;
};

std::size_t budget_or(const Options& o, std::size_t fallback) {
  if (o.budget) return *o.budget;
  if (auto env = env_budget()) return *env;
  return fallback;
}

std::string resolved_format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' not supported by this command");
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string cmd_lambda(const Options& o) {
  const auto m = decode<Multisegment>(load_json(o.mseg, "multisegment"), "multisegment");
  const auto lambda = lambda_of(m);
  if (resolved_format(o, "json", {"json", "table"}) == "table") return lambda.to_string() + "\n";
  return dump(lambda);
}

std::string cmd_dual(const Options& o) {
  const auto m = decode<Multisegment>(load_json(o.mseg, "multisegment"), "multisegment");
  const auto dual = mw_dual(m);
  if (resolved_format(o, "json", {"json", "table"}) == "table") return dual.to_string() + "\n";
  return dump(dual);
}

std::string cmd_poset(const Options& o) {
  const auto m = decode<Multisegment>(load_json(o.mseg, "multisegment"), "multisegment");
  const auto poset = downset(m, budget_or(o, kDefaultDownsetBound));
  const auto format = o.dot ? std::string("dot") : resolved_format(o, "json", {"json", "table", "dot"});
  if (format == "dot") return poset.to_dot();
  if (format == "table") {
    std::string out;
    for (const auto& node : poset.nodes) out += node.to_string() + "\t" + lambda_of(node).to_string() + "\n";
    return out;
  }
  return dump(poset);
}

std::string table_of(const StratumReport& report) {
  std::ostringstream os;
  for (const auto& c : report.components) {
    os << report.lambda.to_string() << '\t' << c.cls.representative.to_string() << "\tdim=" << c.ring.dimension
       << "\t|W|=" << c.cls.weyl_order() << '\n';
  }
  return os.str();
}

std::string cmd_strata(const Options& o) {
  const auto block = decode<BlockSpec>(load_json(o.block, "block"), "block");
  const auto format = resolved_format(o, "json", {"json", "table"});
  const auto budget = budget_or(o, kDefaultComponentBudget);
  if (!o.lambda.empty()) {
    const auto lambda = decode<Partition>(load_json(o.lambda, "lambda"), "lambda");
    const auto report = components(block, lambda, budget);
    return format == "table" ? table_of(report) : dump(report);
  }
  json all = json::array();
  std::string table;
  for (const auto& lambda : enumerate_partitions(block.n, static_cast<int>(budget_or(o, kDefaultPartitionBound)))) {
    const auto report = components(block, lambda, budget);
    all.push_back(report);
    table += table_of(report);
  }
  return format == "table" ? table : dump(all);
}

std::string cmd_ring(const Options& o) {
  const auto cls = decode<InertialClass>(load_json(o.cls, "class"), "class");
  const auto ring = ring_presentation(cls);
  if (resolved_format(o, "json", {"json", "table"}) == "table") {
    std::string out;
    for (const auto& g : ring.generators)
      out += "e" + std::to_string(g.degree) + "[orbit " + std::to_string(g.orbit) + "] = " + g.to_string() + "\n";
    return out;
  }
  return dump(ring);
}

std::string cmd_ext(const Options& o) {
  if (o.ext_r.has_value() == !o.ext_mseg.empty()) throw UsageError("ext expects exactly one of --r or --mseg");
  const auto dims = o.ext_r ? ext_dimensions(*o.ext_r)
                            : ext_dimensions(decode<Multisegment>(load_json(o.ext_mseg, "multisegment"),
                                                                  "multisegment"));
  if (resolved_format(o, "json", {"json", "table"}) == "table") {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) out += std::to_string(i) + "\t" + std::to_string(dims[i]) + "\n";
    return out;
  }
  return dump(json(dims));
}

std::string cmd_kgroup_check(const Options& o) {
  Identity identity;
  try {
    identity = parse_identity(o.identity, parse_dims(o.dims));
  } catch (const ParseError& ex) {
    throw UsageError(ex.what());
  }
  const auto verdict = check_identity(identity.lhs, identity.rhs);
  if (resolved_format(o, "table", {"json", "table"}) == "json") {
    json j{{"verdict", verdict.to_string()}, {"lhs", identity.lhs.to_string()}, {"rhs", identity.rhs.to_string()}};
    return dump(j);
  }
  return verdict.to_string() + "\n";
}

std::string cmd_enumerate(const Options& o) {
  const json raw = load_json(o.support, "support");
  std::vector<SupportEntry> support;
  try {
    support = support_from_json(raw);
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed support: ") + ex.what());
  }
  const auto all = enumerate_with_support(support, budget_or(o, kDefaultSupportBound));
  if (resolved_format(o, "json", {"json", "table"}) == "table") {
    std::string out;
    for (const auto& m : all) out += m.to_string() + "\n";
    return out;
  }
  return dump(json(all));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of Zelevinsky multisegments and derivative strata", "strata-kit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format: json, table or dot")
      ->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_option("--out", o.out_path, "Write output to this path instead of stdout");
  app.add_option("--budget", o.budget, "Enumeration bound (overrides STRATAKIT_BUDGET)");

  auto* lambda = app.add_subcommand("lambda", "Highest derivative partition of a multisegment");
  lambda->add_option("multisegment", o.mseg, "Inline JSON or file")->required();

  auto* dual = app.add_subcommand("dual", "Zelevinsky (Moeglin-Waldspurger) dual multisegment");
  dual->add_option("multisegment", o.mseg, "Inline JSON or file")->required();

  auto* poset = app.add_subcommand("poset", "Downset of a multisegment under elementary operations");
  poset->add_option("multisegment", o.mseg, "Inline JSON or file")->required();
  poset->add_flag("--dot", o.dot, "Emit Graphviz DOT");

  auto* strata = app.add_subcommand("strata", "Inertial components of a stratum");
  strata->add_option("--block", o.block, "Block spec: inline JSON or file")->required();
  strata->add_option("--lambda", o.lambda, "Partition as JSON array; all partitions of n when omitted");

  auto* ring = app.add_subcommand("ring", "Invariant ring presentation of an inertial class");
  ring->add_option("--class", o.cls, "Inertial class or multisegment: inline JSON or file")->required();

  auto* ext = app.add_subcommand("ext", "Ext dimensions C(r,i)");
  ext->add_option("--r", o.ext_r, "Number of segments");
  ext->add_option("--mseg", o.ext_mseg, "Multisegment: inline JSON or file");

  auto* kcheck = app.add_subcommand("kgroup-check", "Check a Grothendieck-group identity 'lhs = rhs'");
  kcheck->add_option("identity", o.identity, "Identity in the expression grammar")->required();
  kcheck->add_option("--dim", o.dims, "Cuspidal dimension of a named line, <line>=<dim>");

  auto* enumerate = app.add_subcommand("enumerate", "All multisegments with a given support");
  enumerate->add_option("--support", o.support, "Support multiset: inline JSON or file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string output;
    if (lambda->parsed()) output = cmd_lambda(o);
    else if (dual->parsed()) output = cmd_dual(o);
    else if (poset->parsed()) output = cmd_poset(o);
    else if (strata->parsed()) output = cmd_strata(o);
    else if (ring->parsed()) output = cmd_ring(o);
    else if (ext->parsed()) output = cmd_ext(o);
    else if (kcheck->parsed()) output = cmd_kgroup_check(o);
    else if (enumerate->parsed()) output = cmd_enumerate(o);

    if (o.out_path.empty()) {
      out << output;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + o.out_path + "'");
      file << output;
    }
    return kExitOk;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace stratakit::cli
