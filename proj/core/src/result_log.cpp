#include "sumfree/result_log.hpp"

#include <charconv>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sumfree/error.hpp"

namespace sumfree {

using nlohmann::json;

namespace {

json parse_line(const std::string& line) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::usage, std::string("malformed record: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::usage, std::string("record field '") + key + "': " + e.what());
  }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<int>(j, key);
}

json check_to_json(const Check& c) {
  json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
  if (c.counterexample) {
    j["counterexample"] = {{"kind", c.counterexample->kind}, {"values", c.counterexample->values}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Check check_from_json(const json& j) {
  Check c;
  c.name = field<std::string>(j, "name");
  c.passed = field<bool>(j, "passed");
  c.detail = j.value("detail", std::string{});
  if (j.contains("counterexample") && !j.at("counterexample").is_null()) {
    const json& ce = j.at("counterexample");
    c.counterexample =
        Counterexample{field<std::string>(ce, "kind"), field<std::vector<std::int64_t>>(ce, "values")};
  }
  return c;
}

}  // namespace

std::string join_residues(const std::vector<Residue>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Residue> parse_residues(const std::string& text) {
  std::vector<Residue> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::size_t a = pos, b = end;
    while (a < b && text[a] == ' ') ++a;
    while (b > a && text[b - 1] == ' ') --b;
    Residue value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + a, text.data() + b, value);
    if (a == b || ec != std::errc{} || ptr != text.data() + b) {
      throw Error(ErrorCode::usage, "cannot parse residue list '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_record(const SearchResult& r) {
  const json j{
      {"record", "search_result"},
      {"ell", r.ell},
      {"n", r.n},
      {"outcome", to_string(r.outcome)},
      {"psi", optional_int(r.psi)},
      {"witness", join_residues(r.witness)},
      {"up_to", r.up_to},
      {"psi_without_half", optional_int(r.psi_without_half)},
      {"witness_without_half", join_residues(r.witness_without_half)},
      {"nodes", r.stats.nodes},
      {"candidates", r.stats.candidates},
      {"millis", r.stats.millis},
      {"version", r.version},
  };
  return j.dump();
}

SearchResult search_result_from_record(const std::string& line) {
  const json j = parse_line(line);
  SearchResult r;
  r.ell = field<int>(j, "ell");
  r.n = field<std::int64_t>(j, "n");
  r.outcome = outcome_from_string(field<std::string>(j, "outcome"));
  r.psi = read_optional_int(j, "psi");
  r.witness = parse_residues(field<std::string>(j, "witness"));
  r.up_to = field<int>(j, "up_to");
  r.psi_without_half = read_optional_int(j, "psi_without_half");
  r.witness_without_half = parse_residues(j.value("witness_without_half", std::string{}));
  r.stats.nodes = field<std::uint64_t>(j, "nodes");
  r.stats.candidates = j.value("candidates", std::uint64_t{0});
  r.stats.millis = field<std::uint64_t>(j, "millis");
  r.version = field<std::string>(j, "version");
  return r;
}

std::string to_record(const ConstructionParams& p) {
  const json j{{"record", "params"}, {"ell", p.ell}, {"n", p.n},
               {"r", p.r},           {"t", p.t},     {"gamma", p.gamma},
               {"j", p.j},           {"k", p.k},     {"alpha", p.alpha},
               {"M", p.M}};
  return j.dump();
}

ConstructionParams params_from_record(const std::string& line) {
  const json j = parse_line(line);
  ConstructionParams p;
  p.ell = field<std::int64_t>(j, "ell");
  p.n = field<std::int64_t>(j, "n");
  p.r = field<std::int64_t>(j, "r");
  p.t = field<std::int64_t>(j, "t");
  p.gamma = field<std::int64_t>(j, "gamma");
  p.j = field<std::int64_t>(j, "j");
  p.k = field<std::int64_t>(j, "k");
  p.alpha = field<std::int64_t>(j, "alpha");
  p.M = field<std::int64_t>(j, "M");
  return p;
}

std::string to_record(const VerificationReport& report, const std::string& certificate) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_to_json(c));
  json j{{"record", "report"}, {"overall", report.overall()}, {"checks", checks}};
  if (!certificate.empty()) j["certificate"] = certificate;
  return j.dump();
}

VerificationReport report_from_record(const std::string& line) {
  const json j = parse_line(line);
  VerificationReport report;
  for (const auto& c : j.at("checks")) report.checks.push_back(check_from_json(c));
  return report;
}

std::string to_record(const RsatReport& r) {
  json j{{"record", "rsat"},
         {"n", r.n},
         {"ell", r.ell},
         {"degree", r.degree},
         {"edges", r.edges},
         {"bound_plus", r.bound_plus},
         {"bound_satisfied", r.bound_satisfied},
         {"bound_minus", r.bound_minus},
         {"bound_minus_satisfied", r.bound_minus_satisfied}};
  j["product_bound"] = r.product_bound ? json(*r.product_bound) : json(nullptr);
  j["product_satisfied"] = r.product_satisfied ? json(*r.product_satisfied) : json(nullptr);
  return j.dump();
}

RsatReport rsat_from_record(const std::string& line) {
  const json j = parse_line(line);
  RsatReport r;
  r.n = field<std::int64_t>(j, "n");
  r.ell = field<int>(j, "ell");
  r.degree = field<std::uint64_t>(j, "degree");
  r.edges = field<std::uint64_t>(j, "edges");
  r.bound_plus = field<double>(j, "bound_plus");
  r.bound_satisfied = field<bool>(j, "bound_satisfied");
  r.bound_minus = field<double>(j, "bound_minus");
  r.bound_minus_satisfied = field<bool>(j, "bound_minus_satisfied");
  if (j.contains("product_bound") && !j.at("product_bound").is_null()) {
    r.product_bound = field<std::uint64_t>(j, "product_bound");
  }
  if (j.contains("product_satisfied") && !j.at("product_satisfied").is_null()) {
    r.product_satisfied = field<bool>(j, "product_satisfied");
  }
  return r;
}

std::string to_record(const ResidueSet& s) {
  const json j{{"record", "set"}, {"n", s.n()}, {"size", s.size()},
               {"members", join_residues(s.members())}};
  return j.dump();
}

ResidueSet set_from_record(const std::string& line) {
  const json j = parse_line(line);
  const Modulus m(field<std::int64_t>(j, "n"));
  return ResidueSet::from_members(m, parse_residues(field<std::string>(j, "members")));
}

ResultLog::ResultLog(std::filesystem::path path) : path_(std::move(path)) {}

void ResultLog::append(const SearchResult& r) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::io, "cannot open result log " + path_.string());
  out << to_record(r) << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed on " + path_.string());
}

std::vector<SearchResult> ResultLog::load() const {
  std::vector<SearchResult> rows;
  std::ifstream in(path_);
  if (!in) return rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      rows.push_back(search_result_from_record(line));
    } catch (const Error&) {
      // A torn final line from an interrupted run is expected; skip it.
    }
  }
  return rows;
}

std::optional<SearchResult> ResultLog::lookup(int ell, std::int64_t n,
                                              const std::string& version) const {
  std::optional<SearchResult> hit;
  for (auto& r : load()) {
    if (r.ell == ell && r.n == n && r.version == version) hit = std::move(r);
  }
  return hit;
}

}  // namespace sumfree
