#include "torkh/corpus.hpp"

#include <random>
#include <set>

namespace torkh {

std::vector<CorpusLink> link_corpus(int max_crossings, int random_count, int random_length, std::uint32_t seed) {
  std::vector<CorpusLink> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& spec) {
    auto d = parse_link_spec(spec).diagram;
    if (d.crossing_count() > max_crossings) return;
    if (seen.insert(canonical_hash(d)).second) out.push_back({spec, std::move(d)});
  };
  auto num = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  add("braid:1:");
  for (int n = 2; n <= max_crossings + 1; ++n)
    for (int m = 1; (n - 1) * m <= max_crossings; ++m) {
      add("torus:" + num(n, m));
      add("torus:" + num(n, -m));
    }
  for (int n = 2; n <= max_crossings + 1; ++n)
    for (int m = 0; (n - 1) * m <= max_crossings; ++m)
      for (int i = 0; i < n && (n - 1) * m + i <= max_crossings; ++i) add("dlink:" + num(n, m) + "," + std::to_string(i));
  for (int n = 2; n <= max_crossings + 1; ++n)
    for (int m : {n - 1, n})
      for (int i = 0; i <= n - 2 && (n - 1) * m + i <= max_crossings; ++i)
        add("elink:" + num(n, m) + "," + std::to_string(i));

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> strands(3, 4), sign(0, 1);
  for (int k = 0; k < random_count; ++k) {
    const int n = strands(rng);
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::string spec = "braid:" + std::to_string(n) + ":";
    for (int j = 0; j < random_length; ++j) {
      const int g = letter(rng);
      spec += (j ? "," : "") + std::to_string(sign(rng) ? g : -g);
    }
    // random words are kept even if they repeat an earlier diagram
    out.push_back({spec, parse_link_spec(spec).diagram});
  }
  return out;
}

}  // namespace torkh
