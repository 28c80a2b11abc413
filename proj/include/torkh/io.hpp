#pragma once

// JSON encodings, the on-disk result cache and text renderers.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "torkh/complex.hpp"
#include "torkh/lee.hpp"

namespace torkh {

using Json = nlohmann::ordered_json;

/// {"ring":"Q","degraded":false,"groups":[{"h":0,"q":1,"rank":1,"torsion":[2]},...]}
Json table_to_json(const BigradedTable& t);
BigradedTable table_from_json(const Json& j);

/// {"field":"Q","tables":[{"h":2,"levels":[{"q":4,"dim_F":2},...]},...]}
Json filtration_to_json(const FiltrationTable& ft);
FiltrationTable filtration_from_json(const Json& j);

/// Cell text such as "2", "Z2", "1+Z2^2"; empty for the zero group.
std::string group_text(const HomologyGroup& g);

/// Text grid with one column per h and one row per q (highest q on top).
/// Cells read like "2", "Z2", "1+Z2^2" or "." when empty.
std::string render_table(const BigradedTable& t);
/// One line per group: h,q,rank,torsion.
std::string render_csv(const BigradedTable& t);

/// Directory-backed cache of JSON documents. Writes go to a temporary file
/// that is renamed into place, so concurrent readers never see partial data.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Uses `explicit_dir` if given, else $TORKH_CACHE, else no cache.
  static std::optional<ResultCache> from_env(const std::optional<std::string>& explicit_dir);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace torkh
