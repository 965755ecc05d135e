#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "medianvote/graph.hpp"
#include "medianvote/preference.hpp"

namespace medianvote {

// Profile plus the alternative names it was read with (id -> name).
struct NamedProfile {
  Profile profile;
  std::vector<std::string> names;
};

// Graph text format: a line `n`, then one `u v` line per edge (0-based).
// `#` starts a comment; blank lines are ignored.
Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g);

// Profile text format: a line `n m`, then n voter lines, each an optional
// multiplicity token `k×` (also `kx` / `k*`) followed by m names best first.
NamedProfile parse_profile(std::istream& in);
std::string format_profile(const Profile& p, std::span<const std::string> names);
std::string format_order(const LinearOrder& r, std::span<const std::string> names);

/// a, b, ..., z for m <= 26, otherwise a0, a1, ...
std::vector<std::string> default_names(int m);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const Profile& p, std::span<const std::string> names);
NamedProfile profile_from_json(const nlohmann::json& j);

// File readers accepting either the text format or JSON (first non-blank
// character `{`). A recognition report is accepted for both.
Graph read_graph_file(const std::string& path);
NamedProfile read_profile_file(const std::string& path);

}  // namespace medianvote
