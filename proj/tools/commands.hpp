#pragma once

#include <cstdint>
#include <string>

#include "vbraid/io.hpp"

namespace vbraid::cli {

struct Options {
  std::string structure;
  std::string object;
  std::string word;
  std::string w1;
  std::string w2;
  std::string tuple;
  std::string cut = "ones";
  std::string diff = "ed-de";
  int strands = 0;
  int max_len = 3;
  int max_degree = 3;
  bool positive = false;
  bool all_words = false;
  bool normalized = false;
  int depth = 8;
  std::size_t max_visited = 100000;
  std::uint64_t seed = 0;
};

struct Output {
  Json json;
  std::string table;  // plain-text rendering
};

Output validate_rack(const Options& o);
Output classify(const Options& o);
Output act(const Options& o);
Output invariants(const Options& o);
Output distinguish(const Options& o);
Output scan(const Options& o);
Output rho(const Options& o);
Output yb_check(const Options& o);
Output twist(const Options& o);
Output gsd_validate(const Options& o);
Output homology(const Options& o);
Output enumerate(const Options& o);

// "ones", "counit", or comma-separated integers.
RingMatrix parse_cut(const std::string& spec, const GsdStructure& g);
// Integer combination of "ed" and "de", e.g. "ed-de" or "2*ed+de".
std::pair<Integer, Integer> parse_diff(const std::string& spec);

}  // namespace vbraid::cli
