#include "cli.hpp"

#include <cstdint>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumfree/construction.hpp"
#include "sumfree/error.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/result_log.hpp"
#include "sumfree/search.hpp"
#include "sumfree/verification.hpp"
#include "sumfree/version.hpp"

namespace sumfree::cli {
namespace {

constexpr const char* kDefaultLog = "results/psi_log.jsonl";

struct CommonFlags {
  int ell = 0;
  std::int64_t n = 0;
  std::string format = "human";
};

struct SearchFlags {
  std::optional<int> max_size;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
  bool canonical = false;
  bool no_prune = false;
  bool no_timing = false;

  SearchOptions options() const {
    SearchOptions o;
    o.max_size = max_size;
    o.threads = threads == 0 ? 1 : threads;
    o.node_budget = budget;
    o.canonical = canonical;
    o.prune = !no_prune;
    return o;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--max-size", f.max_size, "largest set size to try");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", f.budget, "node budget (exit 3 when exhausted)");
  cmd->add_flag("--canonical", f.canonical, "keep one representative per unit orbit");
  cmd->add_flag("--no-prune", f.no_prune, "disable cardinality and sum-free pruning");
  cmd->add_flag("--no-timing", f.no_timing, "report millis as 0 for byte-stable output");
}

void require_even_ell(int ell) {
  if (ell < 2 || ell % 2 != 0) {
    throw Error(ErrorCode::parity, "ell must be an even integer >= 2, got " + std::to_string(ell));
  }
}

ResidueSet parse_set(std::int64_t n, const std::string& text) {
  if (n < 1) throw Error(ErrorCode::invalid_modulus, "n must be positive");
  const auto members = parse_residues(text);
  return ResidueSet::from_members(Modulus(n), members);
}

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  os << c.kind;
  for (std::size_t i = 0; i < c.values.size(); ++i) os << (i == 0 ? " " : ",") << c.values[i];
  return os.str();
}

void print_report(std::ostream& out, const std::string& title, const VerificationReport& report) {
  out << title << ": " << (report.overall() ? "pass" : "fail") << '\n';
  for (const auto& c : report.checks) {
    out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.counterexample) out << "  [" << describe(*c.counterexample) << ']';
    if (!c.passed && !c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
}

void emit_report(std::ostream& out, const std::string& format, const std::string& title,
                 const VerificationReport& report) {
  if (format == "structured") {
    out << to_record(report, title) << '\n';
  } else {
    print_report(out, title, report);
  }
}

int report_exit(bool passed) { return passed ? kPass : kFailure; }

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::found: return kPass;
    case Outcome::none_exists: return kFailure;
    case Outcome::inconclusive: return kBudget;
  }
  return kFailure;
}

void print_search_human(std::ostream& out, const SearchResult& r) {
  out << "n=" << r.n << " ell=" << r.ell << " outcome=" << to_string(r.outcome);
  if (r.psi) out << " psi=" << *r.psi << " witness=" << join_residues(r.witness);
  out << " up_to=" << r.up_to;
  if (r.psi_without_half && r.psi_without_half != r.psi) {
    out << " psi_without_half=" << *r.psi_without_half
        << " witness_without_half=" << join_residues(r.witness_without_half);
  }
  out << " nodes=" << r.stats.nodes << " millis=" << r.stats.millis << '\n';
}

int run_construct(const CommonFlags& f, bool force, std::ostream& out, std::ostream& err) {
  require_even_ell(f.ell);
  if (f.n % 2 == 0) {
    err << "notice: n=" << f.n << " is even; using K_{n/2,n/2} = Cay(Z_n, odd residues)\n";
    const CayleyGraph g = balanced_bipartite_graph(f.n, f.ell);
    VerificationReport report = certify_symmetric_complete_sumfree(g.connection(), f.ell);
    report.append(certify_proposition(g.connection(), f.ell));
    if (f.format == "structured") {
      out << to_record(g.connection()) << '\n';
      out << to_record(report, "bipartite") << '\n';
    } else {
      out << "bipartite: K_{" << f.n / 2 << ',' << f.n / 2 << "} degree=" << g.degree()
          << " edges=" << g.edge_count() << '\n';
      print_report(out, "certificate", report);
    }
    return report_exit(report.overall());
  }

  const ConstructionParams p = derive_params(f.ell, f.n, force);
  const ResidueSet s = build_full_set(p);
  const VerificationReport set_report = certify_symmetric_complete_sumfree(s, f.ell);
  const VerificationReport prop_report = certify_proposition(s, f.ell);
  VerificationReport decomposition;
  decomposition.checks.push_back(check_construction_decomposition(p));

  if (f.format == "structured") {
    out << to_record(p) << '\n' << to_record(s) << '\n';
    out << to_record(set_report, "symmetric-complete-sum-free") << '\n';
    out << to_record(prop_report, "proposition") << '\n';
    out << to_record(decomposition, "decomposition") << '\n';
  } else {
    out << "params: ell=" << p.ell << " n=" << p.n << " r=" << p.r << " t=" << p.t
        << " gamma=" << p.gamma << " j=" << p.j << " k=" << p.k << " alpha=" << p.alpha
        << " M=" << p.M << '\n';
    const CayleyGraph g(s);
    out << "size=" << s.size() << " edges=" << g.edge_count() << '\n';
    out << "S=" << join_residues(s.members()) << '\n';
    print_report(out, "symmetric-complete-sum-free", set_report);
    print_report(out, "proposition", prop_report);
    print_report(out, "decomposition", decomposition);
  }
  return report_exit(set_report.overall() && prop_report.overall() && decomposition.overall());
}

int run_verify(const CommonFlags& f, const std::string& set_text, bool graph, std::ostream& out) {
  require_even_ell(f.ell);
  const ResidueSet s = parse_set(f.n, set_text);
  const VerificationReport set_report = certify_symmetric_complete_sumfree(s, f.ell);
  const VerificationReport prop_report = certify_proposition(s, f.ell);
  emit_report(out, f.format, "symmetric-complete-sum-free", set_report);
  emit_report(out, f.format, "proposition", prop_report);
  bool passed = set_report.overall() && prop_report.overall();
  if (graph) {
    VerificationReport graph_report;
    if (!is_symmetric(s) || s.contains(0)) {
      graph_report.checks.push_back(
          Check{"cayley-graph", false, std::nullopt, "needs a symmetric set without 0"});
    } else {
      graph_report = certify_cayley_graph(CayleyGraph(s), f.ell);
    }
    emit_report(out, f.format, "graph", graph_report);
    passed = passed && graph_report.overall();
  }
  return report_exit(passed);
}

int run_search(const CommonFlags& f, const SearchFlags& sf, const std::string& log_path,
               std::ostream& out) {
  require_even_ell(f.ell);
  SearchResult r = psi_search(f.n, f.ell, sf.options());
  if (sf.no_timing) r.stats.millis = 0;
  if (!log_path.empty()) ResultLog(log_path).append(r);
  if (f.format == "structured") {
    out << to_record(r) << '\n';
  } else {
    print_search_human(out, r);
  }
  return outcome_exit(r.outcome);
}

int run_table(const CommonFlags& f, std::int64_t from, std::int64_t to, const SearchFlags& sf,
              const std::string& log_path, bool resume, std::ostream& out) {
  require_even_ell(f.ell);
  std::unique_ptr<ResultLog> log;
  if (!log_path.empty()) log = std::make_unique<ResultLog>(log_path);
  if (f.format == "csv") out << "n,psi,witness,psi_without_half\n";
  int status = kPass;
  const ResultSink sink = [&](const SearchResult& in, bool) {
    SearchResult r = in;
    if (sf.no_timing) r.stats.millis = 0;
    if (r.outcome == Outcome::found) {
      const ResidueSet w = ResidueSet::from_members(Modulus(r.n), r.witness);
      if (!certify_symmetric_complete_sumfree(w, f.ell).overall()) {
        throw Error(ErrorCode::internal, "witness for n=" + std::to_string(r.n) +
                                             " failed its certificate");
      }
    }
    if (f.format == "structured") {
      out << to_record(r) << '\n';
    } else if (f.format == "csv") {
      out << r.n << ',' << (r.psi ? std::to_string(*r.psi) : std::string{}) << ",\""
          << join_residues(r.witness) << "\","
          << (r.psi_without_half ? std::to_string(*r.psi_without_half) : std::string{}) << '\n';
    } else {
      print_search_human(out, r);
    }
    out.flush();
    const int code = outcome_exit(r.outcome);
    if (code == kBudget || (code == kFailure && status == kPass)) status = code;
  };
  psi_table(f.ell, from, to, sf.options(), log.get(), resume, sink);
  return status;
}

int run_graph_check(const CommonFlags& f, const std::string& set_text, std::ostream& out) {
  require_even_ell(f.ell);
  const ResidueSet s = parse_set(f.n, set_text);
  const CayleyGraph g(s);
  const VerificationReport graph_report = certify_cayley_graph(g, f.ell);
  const VerificationReport prop_report = certify_proposition(s, f.ell);
  const bool agree = graph_report.overall() == prop_report.overall();
  if (f.format == "structured") {
    out << to_record(graph_report, "graph") << '\n';
    out << to_record(prop_report, "proposition") << '\n';
  } else {
    out << "graph: n=" << g.order() << " degree=" << g.degree() << " edges=" << g.edge_count()
        << '\n';
    print_report(out, "graph", graph_report);
    print_report(out, "proposition", prop_report);
    out << "agreement: " << (agree ? "yes" : "no") << '\n';
  }
  return report_exit(graph_report.overall());
}

int run_rsat(const CommonFlags& f, const std::string& set_text, bool force, std::ostream& out,
             std::ostream& err) {
  require_even_ell(f.ell);
  ResidueSet s(Modulus(f.n > 0 ? f.n : 1));
  std::optional<int> psi;
  std::string source;
  if (!set_text.empty()) {
    s = parse_set(f.n, set_text);
    source = "set";
  } else if (f.n % 2 != 0 && f.ell >= 4 && (force || f.n > construction_threshold(f.ell))) {
    s = build_full_set(derive_params(f.ell, f.n, force));
    source = "construction";
  } else {
    const SearchResult r = psi_search(f.n, f.ell);
    if (r.outcome != Outcome::found) {
      err << "no symmetric complete sum-free set found for n=" << f.n << '\n';
      return outcome_exit(r.outcome);
    }
    s = ResidueSet::from_members(Modulus(f.n), r.witness);
    psi = r.psi;
    source = "search";
  }
  const RsatReport r = rsat_report(s, f.ell, psi);
  if (f.format == "structured") {
    out << to_record(r) << '\n';
  } else {
    out << "source=" << source << " n=" << r.n << " ell=" << r.ell << " degree=" << r.degree
        << " edges=" << r.edges << '\n';
    out << std::fixed << std::setprecision(2);
    out << "n^2/(2(ell+1)) + n = " << r.bound_plus << "  "
        << (r.bound_satisfied ? "satisfied" : "violated") << '\n';
    out << "n^2/(2(ell+1)) - n = " << r.bound_minus << "  "
        << (r.bound_minus_satisfied ? "satisfied" : "violated") << '\n';
    if (r.product_bound) {
      out << "n * psi = " << *r.product_bound << "  "
          << (*r.product_satisfied ? "satisfied" : "violated") << '\n';
    }
  }
  return report_exit(r.bound_satisfied);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::certificate_required:
    case ErrorCode::internal:
      return kFailure;
    default:
      return kUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric complete (ell,1)-sum-free sets and saturated Cayley graphs", "sumfree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCodeVersion);

  CommonFlags common;
  SearchFlags search_flags;
  bool force = false;
  bool graph = false;
  bool resume = false;
  bool no_log = false;
  std::string set_text;
  std::string log_path;
  std::int64_t from = 0;
  std::int64_t to = 0;

  auto add_ell_n = [&](CLI::App* cmd) {
    cmd->add_option("--ell", common.ell, "even fold ell")->required();
    cmd->add_option("--n", common.n, "modulus n")->required()->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember(std::move(choices)));
  };

  auto* construct = app.add_subcommand("construct", "explicit construction for odd n");
  add_ell_n(construct);
  construct->add_flag("--force", force, "allow n at or below the threshold");
  add_format(construct, {"human", "structured"});

  auto* verify = app.add_subcommand("verify", "certify a candidate set");
  add_ell_n(verify);
  verify->add_option("--set", set_text, "comma-separated residues")->required();
  verify->add_flag("--graph", graph, "add the direct graph-level check");
  add_format(verify, {"human", "structured"});

  auto* search = app.add_subcommand("search", "exhaustive psi search");
  add_ell_n(search);
  add_search_flags(search, search_flags);
  search->add_option("--log", log_path, "append the result to this log");
  add_format(search, {"human", "structured"});

  auto* table = app.add_subcommand("table", "psi for a range of n");
  table->add_option("--ell", common.ell, "even fold ell")->required();
  table->add_option("--from", from, "first n")->required()->check(CLI::PositiveNumber);
  table->add_option("--to", to, "last n")->required()->check(CLI::PositiveNumber);
  add_search_flags(table, search_flags);
  table->add_option("--log", log_path, std::string("result log (default ") + kDefaultLog + ")");
  table->add_flag("--no-log", no_log, "do not read or write a result log");
  table->add_flag("--resume", resume, "reuse finished rows from the log");
  add_format(table, {"human", "csv", "structured"});

  auto* graph_check = app.add_subcommand("graph-check", "direct graph-level certificate");
  add_ell_n(graph_check);
  graph_check->add_option("--set", set_text, "comma-separated residues")->required();
  add_format(graph_check, {"human", "structured"});

  auto* rsat = app.add_subcommand("rsat", "edge count against the saturation bounds");
  add_ell_n(rsat);
  rsat->add_option("--set", set_text, "comma-separated residues");
  rsat->add_flag("--force", force, "allow construction at or below the threshold");
  add_format(rsat, {"human", "structured"});

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return run_construct(common, force, out, err);
    if (*verify) return run_verify(common, set_text, graph, out);
    if (*search) return run_search(common, search_flags, log_path, out);
    if (*table) {
      if (from > to) throw Error(ErrorCode::usage, "--from must not exceed --to");
      const std::string path = no_log ? std::string{} : (log_path.empty() ? kDefaultLog : log_path);
      return run_table(common, from, to, search_flags, path, resume && !no_log, out);
    }
    if (*graph_check) return run_graph_check(common, set_text, out);
    if (*rsat) return run_rsat(common, set_text, force, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sumfree::cli
