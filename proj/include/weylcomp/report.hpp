#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylcomp/fingroup.hpp"

namespace weylcomp {

/// Memoizes closures in memory and, when a directory is given, on disk as
/// one JSON file per generator digest.
class CachingStore final : public GroupStore {
 public:
  explicit CachingStore(std::optional<std::filesystem::path> dir = std::nullopt);

  FinGroup close(std::string_view name, std::vector<ExactMatrix> generators,
                 std::size_t cap) const override;

  /// Hex SHA-256 of the canonical generator JSON.
  static std::string digest(const std::vector<ExactMatrix>& generators);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

 private:
  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, FinGroup> memo_;
};

/// Cache directory: explicit flag, then $WEYLCACHE_DIR, then ./.weylcache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Named groups for the CLI: catalog names, "W(<type>)" or a bare type,
/// "Z3-cyclic" (cyclic coordinate permutation on Q^3) and "W(D4)xZ3" (the
/// triality extension inside W(F4)).
FinGroup builtin_group(std::string_view name, const GroupStore* store = nullptr);

struct ReportSection {
  std::string title;
  std::string anchor;
  /// Array of flat objects.
  nlohmann::json rows = nlohmann::json::array();
};

struct ReportBundle {
  std::vector<ReportSection> sections;

  nlohmann::json to_json() const;
  /// Aligned ASCII tables, one per section.
  std::string to_table() const;
};

/// Recomputes every classification table.
ReportBundle reproduce(const GroupStore* store = nullptr);

/// Aligned ASCII table over the union of row keys (sorted).
std::string render_table(const nlohmann::json& rows);

}  // namespace weylcomp
