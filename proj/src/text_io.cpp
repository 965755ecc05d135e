#include "medianvote/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace medianvote {

namespace {

using nlohmann::json;

const std::string kTimes = "\xC3\x97";  // U+00D7 MULTIPLICATION SIGN

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  }
  return value;
}

// "3×", "3x", "3*" -> 3; otherwise -1.
long long multiplicity_prefix(const std::string& tok) {
  std::size_t digits = 0;
  while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
  if (digits == 0) return -1;
  const std::string rest = tok.substr(digits);
  if (rest != kTimes && rest != "x" && rest != "*") return -1;
  return std::stoll(tok.substr(0, digits));
}

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
  }
}

bool looks_like_json(std::istream& in) {
  in >> std::ws;
  return in.peek() == '{';
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty graph file", 0);
  const Line& head = lines.front();
  if (head.tokens.size() != 1) throw ParseError("first line must hold the vertex count", head.number);
  const long long n = parse_int(head.tokens[0], head.number, "vertex count");
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range", head.number);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError("edge line must hold two vertex ids", line.number);
    const long long u = parse_int(line.tokens[0], line.number, "vertex id");
    const long long v = parse_int(line.tokens[1], line.number, "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range", line.number);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

NamedProfile parse_profile(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty profile file", 0);
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError("first line must be 'n m'", head.number);
  const long long n = parse_int(head.tokens[0], head.number, "voter count");
  const long long m = parse_int(head.tokens[1], head.number, "alternative count");
  if (n < 1 || m < 1 || m > 4096) throw ParseError("voter or alternative count out of range", head.number);
  if (static_cast<long long>(lines.size()) - 1 != n) {
    throw ParseError("expected " + std::to_string(n) + " voter lines, found " + std::to_string(lines.size() - 1),
                     lines.size() > static_cast<std::size_t>(n) ? lines[n + 1].number : 0);
  }
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  std::vector<LinearOrder> orders;
  std::vector<std::int64_t> mult;
  for (long long i = 1; i <= n; ++i) {
    const Line& line = lines[i];
    std::size_t first = 0;
    std::int64_t k = 1;
    if (static_cast<long long>(line.tokens.size()) == m + 1) {
      k = multiplicity_prefix(line.tokens[0]);
      if (k < 1) throw ParseError("bad multiplicity prefix '" + line.tokens[0] + "'", line.number);
      first = 1;
    } else if (static_cast<long long>(line.tokens.size()) != m) {
      throw ParseError("voter line must rank exactly " + std::to_string(m) + " alternatives", line.number);
    }
    std::vector<Alternative> ranking;
    for (std::size_t t = first; t < line.tokens.size(); ++t) {
      auto [it, inserted] = ids.try_emplace(line.tokens[t], static_cast<int>(names.size()));
      if (inserted) {
        if (static_cast<long long>(names.size()) == m) {
          throw ParseError("more than " + std::to_string(m) + " distinct alternatives", line.number);
        }
        names.push_back(line.tokens[t]);
      }
      ranking.push_back(it->second);
    }
    try {
      orders.emplace_back(std::move(ranking));
    } catch (const ProfileError&) {
      throw ParseError("voter line repeats an alternative", line.number);
    }
    mult.push_back(k);
  }
  return {Profile(static_cast<int>(m), std::move(orders), std::move(mult)), std::move(names)};
}

std::string format_order(const LinearOrder& r, std::span<const std::string> names) {
  std::string out;
  for (Alternative a : r.ranking()) {
    if (!out.empty()) out += ' ';
    out += names[a];
  }
  return out;
}

std::string format_profile(const Profile& p, std::span<const std::string> names) {
  std::ostringstream out;
  out << p.voters() << ' ' << p.alternatives() << '\n';
  for (int i = 0; i < p.voters(); ++i) {
    if (p.multiplicity(i) != 1) out << p.multiplicity(i) << kTimes << ' ';
    out << format_order(p.order(i), names) << '\n';
  }
  return out.str();
}

std::vector<std::string> default_names(int m) {
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  return names;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"kind", "graph"}, {"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  try {
    if (j.value("kind", "") == "recognition") return graph_from_json(j.at("graph"));
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return Graph(j.at("n").get<int>(), std::move(edges));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what(), 0);
  } catch (const GraphError& e) {
    throw ParseError(e.what(), 0);
  }
}

json profile_to_json(const Profile& p, std::span<const std::string> names) {
  json voters = json::array();
  for (int i = 0; i < p.voters(); ++i) {
    json order = json::array();
    for (Alternative a : p.order(i).ranking()) order.push_back(names[a]);
    voters.push_back({{"order", std::move(order)}, {"multiplicity", p.multiplicity(i)}});
  }
  return {{"kind", "profile"},
          {"alternatives", std::vector<std::string>(names.begin(), names.end())},
          {"voters", std::move(voters)}};
}

NamedProfile profile_from_json(const json& j) {
  try {
    if (j.value("kind", "") == "recognition") return profile_from_json(j.at("profile"));
    auto names = j.at("alternatives").get<std::vector<std::string>>();
    std::map<std::string, int> ids;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!ids.emplace(names[i], static_cast<int>(i)).second) throw ParseError("duplicate alternative " + names[i], 0);
    }
    std::vector<LinearOrder> orders;
    std::vector<std::int64_t> mult;
    for (const auto& voter : j.at("voters")) {
      std::vector<Alternative> ranking;
      for (const auto& name : voter.at("order")) {
        auto it = ids.find(name.get<std::string>());
        if (it == ids.end()) throw ParseError("unknown alternative " + name.get<std::string>(), 0);
        ranking.push_back(it->second);
      }
      orders.emplace_back(std::move(ranking));
      mult.push_back(voter.value("multiplicity", std::int64_t{1}));
    }
    return {Profile(static_cast<int>(names.size()), std::move(orders), std::move(mult)), std::move(names)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad profile JSON: ") + e.what(), 0);
  } catch (const ProfileError& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  if (looks_like_json(in)) return graph_from_json(read_json(in));
  return parse_graph(in);
}

NamedProfile read_profile_file(const std::string& path) {
  auto in = open(path);
  if (looks_like_json(in)) return profile_from_json(read_json(in));
  try {
    return parse_profile(in);
  } catch (const ProfileError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace medianvote
