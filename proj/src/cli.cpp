#include "schubert/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/chow_ring.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/json_io.hpp"
#include "schubert/mdpair_search.hpp"
#include "schubert/morphism_oracle.hpp"

namespace schubert::cli {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty integer list");
  return values;
}

namespace {

struct Config {
  int k = -1;
  int n = -1;
  int l = -1;
  std::string format = "text";
  std::string output;
  bool cross_validate = false;
  int max_n = -1;
  bool table = false;
  std::string claim;
  std::string partition;
  std::string overlay;
  std::string convention = "dim";
  std::vector<std::string> symbols;
  std::string a;
  std::string b;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

GrassmannContext context_of(const Config& cfg) {
  if (cfg.k < 0 || cfg.n < 0) throw UsageError("--k and --n are required");
  return GrassmannContext(cfg.k, cfg.n);
}

Partition parse_partition(const GrassmannContext& ctx, const std::string& text) {
  return ctx.normalize(Partition(parse_int_list(text)));
}

// Prints `text` or `payload` per --format and writes `payload` to --output.
void emit(const Config& cfg, std::ostream& out, const std::string& text, const json& payload) {
  const std::string dumped = payload.dump(2) + "\n";
  if (cfg.format == "json") {
    out << dumped;
  } else {
    out << text;
  }
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output);
    if (!file) throw std::runtime_error("cannot write " + cfg.output);
    file << dumped;
  }
}

int cmd_convert(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  SchubertSymbol symbol;
  if (!cfg.symbols.empty()) {
    if (cfg.symbols.size() != 1 || !cfg.partition.empty()) {
      throw UsageError("convert takes exactly one --symbol or one --partition");
    }
    symbol = SchubertSymbol(parse_int_list(cfg.symbols.front()));
  } else if (!cfg.partition.empty()) {
    const Partition p = parse_partition(ctx, cfg.partition);
    symbol = dim_partition_to_symbol(ctx, cfg.convention == "codim" ? dual_partition(ctx, p) : p);
  } else {
    throw UsageError("convert needs --symbol or --partition");
  }
  const Partition dim = symbol_to_dim_partition(ctx, symbol);
  const Partition codim = dual_partition(ctx, dim);
  const SchubertSymbol dual = dual_symbol(ctx, symbol);

  std::ostringstream text;
  text << "G(" << ctx.k() << "," << ctx.n() << ")\n"
       << "symbol:                " << to_string(symbol) << "\n"
       << "dimension partition:   " << to_string(dim) << "  dim " << dim.weight() << "\n"
       << "codimension partition: " << to_string(codim) << "  codim " << codim.weight() << "\n"
       << "dual symbol:           " << to_string(dual) << "\n";
  const json payload = {{"k", ctx.k()},
                        {"n", ctx.n()},
                        {"symbol", symbol_json(symbol)},
                        {"dim_partition", partition_json(dim)},
                        {"codim_partition", partition_json(codim)},
                        {"dim", dim.weight()},
                        {"codim", codim.weight()},
                        {"dual_symbol", symbol_json(dual)}};
  emit(cfg, out, text.str(), payload);
  return kSuccess;
}

int cmd_render(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  if (cfg.partition.empty()) throw UsageError("render needs --partition");
  const Partition p = parse_partition(ctx, cfg.partition);
  std::optional<Partition> overlay;
  if (!cfg.overlay.empty()) overlay = Partition(parse_int_list(cfg.overlay));
  const std::string diagram = render_diagram(ctx, p, overlay);
  json payload = {{"k", ctx.k()},
                  {"n", ctx.n()},
                  {"partition", partition_json(p)},
                  {"overlay", overlay ? partition_json(ctx.normalize(*overlay)) : json(nullptr)},
                  {"diagram", diagram}};
  emit(cfg, out, diagram, payload);
  return kSuccess;
}

int cmd_product(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  if (cfg.a.empty() || cfg.b.empty()) throw UsageError("product needs --a and --b");
  const CycleClass result =
      multiply_basis(ctx, parse_partition(ctx, cfg.a), parse_partition(ctx, cfg.b));
  emit(cfg, out, to_string(result) + "\n", to_json(result));
  return kSuccess;
}

int cmd_vanishes(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  if (cfg.symbols.size() != 2) throw UsageError("vanishes needs exactly two --symbol options");
  const SchubertSymbol i(parse_int_list(cfg.symbols[0]));
  const SchubertSymbol j(parse_int_list(cfg.symbols[1]));
  const bool fast = product_vanishes_fast(ctx, i, j);

  std::ostringstream text;
  text << "[X_" << to_string(i) << "]·[X_" << to_string(j) << "] "
       << (fast ? "vanishes" : "is nonzero") << "\n";
  json payload = {{"k", ctx.k()},
                  {"n", ctx.n()},
                  {"i", symbol_json(i)},
                  {"j", symbol_json(j)},
                  {"vanishes", fast}};
  int code = kSuccess;
  if (cfg.cross_validate) {
    const CycleClass product = multiply(symbol_class(ctx, i), symbol_class(ctx, j));
    const bool agree = product.is_zero() == fast;
    text << "LR product: " << to_string(product) << "\n"
         << "cross-validation: " << (agree ? "agree" : "DISAGREE") << "\n";
    payload["cross_validation"] = {{"product", to_json(product)}, {"agree", agree}};
    if (!agree) code = kVerificationFailed;
  }
  emit(cfg, out, text.str(), payload);
  return code;
}

int cmd_mdpairs(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  const SearchReport report = search_md_pairs(ctx, cfg.cross_validate);
  std::ostringstream text;
  text << "G(" << ctx.k() << "," << ctx.n() << "): egd " << report.egd << ", scanned "
       << report.scanned << " pairs\n";
  text << "md-pairs (" << report.md_pairs.size() << "):\n";
  for (const MdPair& p : report.md_pairs) {
    const auto [ti, tj] = p.type();
    text << "  {σ" << to_string(p.a) << ", σ" << to_string(p.b) << "}  type {" << ti << ","
         << tj << "}\n";
  }
  if (report.cross_validated) {
    text << "cross-validation: "
         << (report.disagreements.empty() ? "agree"
                                          : std::to_string(report.disagreements.size()) +
                                                " disagreements")
         << "\n";
  }
  emit(cfg, out, text.str(), to_json(report));
  return report.disagreements.empty() ? kSuccess : kVerificationFailed;
}

int cmd_egd(const Config& cfg, std::ostream& out) {
  const GrassmannContext ctx = context_of(cfg);
  const EgdResult result = compute_egd_scan(ctx);
  std::ostringstream text;
  text << "egd G(" << ctx.k() << "," << ctx.n() << ") = " << result.egd << " (scanned "
       << result.scanned << " pairs)\n";
  emit(cfg, out, text.str(),
       {{"k", ctx.k()}, {"n", ctx.n()}, {"egd", result.egd}, {"scanned", result.scanned}});
  return kSuccess;
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.claim << " G(" << r.k << "," << r.n << "): " << (r.passed ? "pass" : "fail")
     << " (hypothesis_count " << r.hypothesis_count << ", counterexamples "
     << r.counterexamples.size() << ")\n";
  for (const Counterexample& c : r.counterexamples) {
    os << "  counterexample " << to_string(c.a) << " " << to_string(c.b) << ": " << c.reason
       << "\n";
  }
  return os.str();
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  VerificationReport (*check)(const GrassmannContext&) = nullptr;
  bool interior_only = true;
  int default_max_n = 10;
  if (cfg.claim == "thm-md") {
    check = verify_thm_md;
    default_max_n = 8;
  } else if (cfg.claim == "prop-comp") {
    check = verify_prop_comp;
  } else if (cfg.claim == "egd-sweep") {
    check = verify_egd;
    interior_only = false;
  } else {
    throw UsageError("unknown claim '" + cfg.claim + "' (thm-md, prop-comp, egd-sweep)");
  }

  std::vector<VerificationReport> reports;
  if (cfg.k >= 0 || cfg.n >= 0) {
    reports.push_back(check(context_of(cfg)));
  } else {
    const int max_n = cfg.max_n >= 0 ? cfg.max_n : default_max_n;
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 0; k <= n - 1; ++k) {
        if (interior_only && (k < 1 || k > n - 2)) continue;
        reports.push_back(check(GrassmannContext(k, n)));
      }
    }
  }

  std::string text;
  bool all_pass = true;
  std::size_t total = 0;
  json payload = json::array();
  for (const VerificationReport& r : reports) {
    text += report_line(r);
    all_pass = all_pass && r.passed;
    total += r.hypothesis_count;
    payload.push_back(to_json(r));
  }
  if (reports.size() == 1) {
    payload = payload.front();
  } else {
    text += cfg.claim + ": " + (all_pass ? "pass" : "fail") + " over " +
            std::to_string(reports.size()) + " Grassmannians, " + std::to_string(total) +
            " cases scanned\n";
  }
  emit(cfg, out, text, payload);
  return all_pass ? kSuccess : kVerificationFailed;
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  if (cfg.table) {
    if (cfg.n < 0) throw UsageError("classify --table needs --n");
    const auto table = classify_table(cfg.n);
    emit(cfg, out, render_table(table), table_json(cfg.n, table));
    return kSuccess;
  }
  if (cfg.l < 0 || cfg.k < 0 || cfg.n < 0) throw UsageError("classify needs --l, --k and --n");
  const ClassificationOutcome outcome = classify({cfg.l, cfg.k, cfg.n});
  std::ostringstream text;
  text << "G(" << cfg.l << "," << cfg.n << ") -> G(" << cfg.k << "," << cfg.n
       << "): " << to_string(outcome.verdict) << "\n"
       << "  branch: " << to_string(outcome.branch) << "\n"
       << "  " << outcome.details << "\n";
  emit(cfg, out, text.str(), to_json(outcome));
  return kSuccess;
}

void add_format(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", cfg.output, "Also write the JSON report to this file");
}

void add_context(CLI::App* cmd, Config& cfg, bool required) {
  auto* k = cmd->add_option("--k", cfg.k, "Dimension of the linear subspaces");
  auto* n = cmd->add_option("--n", cfg.n, "Dimension of the ambient projective space");
  if (required) {
    k->required();
    n->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Schubert calculus on Grassmannians G(k,n)", "schubert"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Schubert symbol <-> partition, both conventions");
  add_context(convert, cfg, true);
  convert->add_option("--symbol", cfg.symbols, "Schubert symbol, e.g. 4,5,6");
  convert->add_option("--partition", cfg.partition, "Partition, e.g. 3,3,3");
  convert->add_option("--convention", cfg.convention, "Convention of --partition")
      ->check(CLI::IsMember({"dim", "codim"}));
  add_format(convert, cfg);

  auto* render = app.add_subcommand("render", "ASCII Young diagram");
  add_context(render, cfg, true);
  render->add_option("--partition", cfg.partition, "Filled cells")->required();
  render->add_option("--overlay", cfg.overlay, "Cells drawn with '*'");
  add_format(render, cfg);

  auto* product = app.add_subcommand("product", "LR product of two codimension partitions");
  add_context(product, cfg, true);
  product->add_option("--a", cfg.a, "First partition")->required();
  product->add_option("--b", cfg.b, "Second partition")->required();
  add_format(product, cfg);

  auto* vanishes = app.add_subcommand("vanishes", "Does [X_I]*[X_J] vanish?");
  add_context(vanishes, cfg, true);
  vanishes->add_option("--symbol", cfg.symbols, "Schubert symbol (give twice)")->required();
  vanishes->add_flag("--cross-validate", cfg.cross_validate, "Also run full LR multiplication");
  add_format(vanishes, cfg);

  auto* mdpairs = app.add_subcommand("mdpairs", "Maximal disjoint pairs of G(k,n)");
  add_context(mdpairs, cfg, true);
  mdpairs->add_flag("--cross-validate", cfg.cross_validate, "Also run full LR multiplication");
  add_format(mdpairs, cfg);

  auto* egd = app.add_subcommand("egd", "Effective good divisibility of G(k,n)");
  add_context(egd, cfg, true);
  add_format(egd, cfg);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification of a claim");
  verify->add_option("claim", cfg.claim, "thm-md, prop-comp or egd-sweep")->required();
  add_context(verify, cfg, false);
  verify->add_option("--max-n", cfg.max_n, "Sweep every G(k,n) with n <= max-n");
  add_format(verify, cfg);

  auto* classify_cmd = app.add_subcommand("classify", "Morphisms G(l,n) -> G(k,n)");
  classify_cmd->add_option("--l", cfg.l, "Source subspace dimension");
  add_context(classify_cmd, cfg, false);
  classify_cmd->add_flag("--table", cfg.table, "Full (l,k) table for --n");
  add_format(classify_cmd, cfg);

  std::vector<const char*> argv{"schubert"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (cfg.k >= 0 && cfg.n < 0) throw UsageError("--k needs --n");
    if (cfg.n >= 0 && cfg.k < 0 && !cfg.table && cfg.l < 0) throw UsageError("--n needs --k");
    if (cfg.max_n >= 0 && (cfg.k >= 0 || cfg.n >= 0)) {
      throw UsageError("--max-n sweeps all contexts; drop --k/--n");
    }
    if (*convert) return cmd_convert(cfg, out);
    if (*render) return cmd_render(cfg, out);
    if (*product) return cmd_product(cfg, out);
    if (*vanishes) return cmd_vanishes(cfg, out);
    if (*mdpairs) return cmd_mdpairs(cfg, out);
    if (*egd) return cmd_egd(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*classify_cmd) return cmd_classify(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace schubert::cli
