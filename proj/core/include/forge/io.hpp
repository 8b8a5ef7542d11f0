#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "forge/digraph.hpp"
#include "forge/prefix.hpp"
#include "forge/tournament.hpp"
#include "forge/walks.hpp"

namespace forge::io {

// Text formats, 1-based vertices on disk, 0-based in memory. Serialization
// is byte-deterministic: parse(serialize(x)) == x and
// serialize(parse(s)) == s for canonical s.

AcyclicDigraph parse_digraph(std::istream& in);
std::string serialize(const AcyclicDigraph& h);

Tournament parse_tournament(std::istream& in);
std::string serialize(const Tournament& t);

ColoredTournament parse_colored_tournament(std::istream& in);
std::string serialize(const ColoredTournament& ct);

OrderedGraph parse_ordered_graph(std::istream& in);
std::string serialize(const OrderedGraph& g);

// "labeling <n>" then "<vertex> <codeword>"; '-' stands for the empty word.
PrefixLabeling parse_labeling(std::istream& in);
std::string serialize(const PrefixLabeling& rho, int n);

Walk parse_walk(std::istream& in);
std::string serialize(const Walk& w);

AcyclicDigraph load_digraph(const std::string& path);
Tournament load_tournament(const std::string& path);
ColoredTournament load_colored_tournament(const std::string& path);
OrderedGraph load_ordered_graph(const std::string& path);
PrefixLabeling load_labeling(const std::string& path);
Walk load_walk(const std::string& path);
void save(const std::string& path, const std::string& content);
std::string slurp(const std::string& path);

std::uint64_t fnv1a(std::string_view data);

// Fixed-order key/value certificate ("cert v1 <kind>" header).
struct Certificate {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  void add(const std::string& key, long long value) {
    fields.emplace_back(key, std::to_string(value));
  }
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return &v;
    return nullptr;
  }
};

std::string serialize(const Certificate& cert);
Certificate parse_certificate(std::istream& in);

}  // namespace forge::io
