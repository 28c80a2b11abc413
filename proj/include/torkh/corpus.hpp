#pragma once

// Fixed link corpus used by the oracle and property checks.

#include <cstdint>
#include <string>
#include <vector>

#include "torkh/links.hpp"

namespace torkh {

struct CorpusLink {
  std::string spec;
  LinkDiagram diagram;
};

/// Torus links T(n,±m), the braid families D^i_{n,m} and E^i_{n,m} up to
/// `max_crossings` crossings (duplicates removed by canonical hash), then
/// `random_count` closures of random `random_length`-letter braids on 3 or 4
/// strands drawn from a generator seeded with `seed`.
std::vector<CorpusLink> link_corpus(int max_crossings = 10, int random_count = 50, int random_length = 8,
                                    std::uint32_t seed = 20240601);

}  // namespace torkh
