#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/construction.hpp"
#include "sumfree/search.hpp"
#include "sumfree/verification.hpp"

namespace sumfree {

// Line-structured records: each is a single-line JSON object. Field names
// are documented in docs/formats.md and are part of the stable interface.

std::string to_record(const SearchResult& r);
SearchResult search_result_from_record(const std::string& line);

std::string to_record(const ConstructionParams& p);
ConstructionParams params_from_record(const std::string& line);

/// `certificate` names the report ("certificate" field) when non-empty.
std::string to_record(const VerificationReport& report, const std::string& certificate = {});
VerificationReport report_from_record(const std::string& line);

std::string to_record(const RsatReport& r);
RsatReport rsat_from_record(const std::string& line);

/// {"record":"set","n":..,"size":..,"members":"a,b,c"}
std::string to_record(const ResidueSet& s);
ResidueSet set_from_record(const std::string& line);

/// "1,5,11" <-> {1, 5, 11}. Parsing throws ErrorCode::usage on malformed text.
std::string join_residues(const std::vector<Residue>& xs);
std::vector<Residue> parse_residues(const std::string& text);

/// Append-only file of search results keyed by (ell, n, version).
class ResultLog {
 public:
  explicit ResultLog(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

  void append(const SearchResult& r);

  /// Every well-formed record in file order; malformed lines are skipped.
  std::vector<SearchResult> load() const;

  /// Latest record for the key, if any.
  std::optional<SearchResult> lookup(int ell, std::int64_t n, const std::string& version) const;

 private:
  std::filesystem::path path_;
};

}  // namespace sumfree
