#include "torkh/io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "torkh/errors.hpp"

namespace torkh {

namespace {

namespace fs = std::filesystem;

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

}  // namespace

std::string group_text(const HomologyGroup& g) {
  std::ostringstream os;
  if (g.free) os << g.free;
  std::map<BigInt, int> tors;
  for (const auto& t : g.torsion) ++tors[t];
  for (const auto& [t, k] : tors) {
    if (os.tellp() > 0) os << '+';
    os << 'Z' << t;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Json table_to_json(const BigradedTable& t) {
  Json j;
  j["ring"] = t.ring.name();
  j["degraded"] = t.degraded;
  Json groups = Json::array();
  for (const auto& [k, g] : t.groups) {
    Json e;
    e["h"] = k.first;
    e["q"] = k.second;
    e["rank"] = g.free;
    Json tors = Json::array();
    for (const auto& v : g.torsion) tors.push_back(big_to_json(v));
    e["torsion"] = tors;
    groups.push_back(e);
  }
  j["groups"] = groups;
  if (t.degraded) {
    Json fd;
    for (const auto& [name, dims] : t.field_dims) {
      Json cells = Json::array();
      for (const auto& [k, v] : dims) cells.push_back({{"h", k.first}, {"q", k.second}, {"dim", v}});
      fd[name] = cells;
    }
    j["field_dims"] = fd;
  }
  return j;
}

BigradedTable table_from_json(const Json& j) {
  try {
    BigradedTable t;
    t.ring = CoefficientRing::parse(j.at("ring").get<std::string>());
    t.degraded = j.value("degraded", false);
    for (const auto& e : j.at("groups")) {
      HomologyGroup g;
      g.free = e.at("rank").get<std::int64_t>();
      for (const auto& v : e.value("torsion", Json::array())) g.torsion.push_back(big_from_json(v));
      t.set(e.at("h").get<int>(), e.at("q").get<int>(), g);
    }
    if (j.contains("field_dims"))
      for (const auto& [name, cells] : j.at("field_dims").items())
        for (const auto& c : cells) t.field_dims[name][{c.at("h").get<int>(), c.at("q").get<int>()}] = c.at("dim");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed table JSON: ") + e.what());
  }
}

Json filtration_to_json(const FiltrationTable& ft) {
  Json j;
  j["field"] = ft.field.name();
  Json tables = Json::array();
  for (const auto& [h, lv] : ft.levels) {
    Json levels = Json::array();
    for (const auto& [q, v] : lv) levels.push_back({{"q", q}, {"dim_F", v}});
    tables.push_back({{"h", h}, {"levels", levels}});
  }
  j["tables"] = tables;
  return j;
}

FiltrationTable filtration_from_json(const Json& j) {
  try {
    FiltrationTable ft;
    ft.field = CoefficientRing::parse(j.at("field").get<std::string>());
    for (const auto& t : j.at("tables"))
      for (const auto& l : t.at("levels")) ft.levels[t.at("h").get<int>()][l.at("q").get<int>()] = l.at("dim_F");
    return ft;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed filtration JSON: ") + e.what());
  }
}

std::string render_table(const BigradedTable& t) {
  if (t.groups.empty()) return "(zero)\n";
  std::set<int> hs, qs;
  for (const auto& [k, g] : t.groups) {
    hs.insert(k.first);
    qs.insert(k.second);
  }
  const int h0 = *hs.begin(), h1 = *hs.rbegin();
  const int q0 = *qs.begin(), q1 = *qs.rbegin();
  const int step = (q1 - q0) % 2 == 0 ? 2 : 1;
  std::size_t width = 3;
  for (const auto& [k, g] : t.groups) width = std::max(width, group_text(g).size() + 1);
  std::ostringstream os;
  auto pad = [&](const std::string& s) { os << std::string(width - std::min(width, s.size()), ' ') << s; };
  os << "  q\\h";
  for (int h = h0; h <= h1; ++h) pad(std::to_string(h));
  os << '\n';
  for (int q = q1; q >= q0; q -= step) {
    std::string lab = std::to_string(q);
    os << std::string(5 - std::min<std::size_t>(5, lab.size()), ' ') << lab;
    for (int h = h0; h <= h1; ++h) {
      auto it = t.groups.find({h, q});
      pad(it == t.groups.end() ? "." : group_text(it->second));
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const BigradedTable& t) {
  std::ostringstream os;
  os << "h,q,rank,torsion\n";
  for (const auto& [k, g] : t.groups) {
    os << k.first << ',' << k.second << ',' << g.free << ',';
    for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? ";" : "") << g.torsion[i];
    os << '\n';
  }
  return os.str();
}

std::optional<ResultCache> ResultCache::from_env(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return ResultCache(*explicit_dir);
  if (const char* env = std::getenv("TORKH_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

fs::path ResultCache::path_for(const std::string& key) const {
  std::string safe;
  for (char c : key) safe.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_');
  return dir_ / (safe + ".json");
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void ResultCache::store(const std::string& key, const Json& value) const {
  fs::create_directories(dir_);
  const fs::path target = path_for(key);
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidInput("cannot write cache file " + tmp.string());
    out << value.dump(1) << '\n';
  }
  fs::rename(tmp, target);
}

}  // namespace torkh
