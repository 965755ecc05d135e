#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "medianvote/chamberlin_courant.hpp"
#include "medianvote/intermediate.hpp"
#include "medianvote/synthesis.hpp"
#include "medianvote/text_io.hpp"

namespace medianvote::cli {

namespace {

using nlohmann::json;

// A verdict plus the report that explains it.
struct Report {
  int code = kOk;
  std::string text;
  json data;
};

std::vector<std::string> names_of(const std::vector<std::string>& names, std::span<const Alternative> ids) {
  std::vector<std::string> out;
  for (Alternative a : ids) out.push_back(names.at(a));
  return out;
}

Report recognize_report(const NamedProfile& input) {
  const RecognitionResult result = recognize(input.profile);
  Report report;
  report.data = {{"kind", "recognition"},
                 {"accepted", result.accepted},
                 {"profile", profile_to_json(result.reduced, input.names)},
                 {"voter_class", result.voter_class},
                 {"trace", result.trace}};
  std::ostringstream text;
  if (!result.accepted) {
    report.code = kNegative;
    text << "REJECTED " << result.rejection->condition << ' ' << result.rejection->witness << '\n';
    report.data["graph"] = nullptr;
    report.data["placement"] = nullptr;
    report.data["rejection"] = {{"condition", result.rejection->condition}, {"witness", result.rejection->witness}};
  } else {
    text << "ACCEPTED\n" << format_graph(*result.graph);
    for (int i = 0; i < result.reduced.voters(); ++i) {
      text << result.placement[i] << ' ' << format_order(result.reduced.order(i), input.names) << '\n';
    }
    report.data["graph"] = graph_to_json(*result.graph);
    report.data["placement"] = result.placement;
    report.data["rejection"] = nullptr;
  }
  report.text = text.str();
  return report;
}

Report check_intermediate_report(const NamedProfile& input, const Graph& g) {
  const Profile& p = input.profile;
  if (p.voters() != g.order()) {
    throw ProfileError("profile has " + std::to_string(p.voters()) + " voters but the graph has " +
                       std::to_string(g.order()) + " vertices");
  }
  std::optional<OrderedPair> violation;
  if (!is_intermediate(p, g)) {
    const DistanceMatrix dm = all_pairs_distances(g);
    for (Alternative a = 0; a < p.alternatives() && !violation; ++a) {
      for (Alternative b = 0; b < p.alternatives() && !violation; ++b) {
        if (a != b && !is_convex(g, dm, v_ab(p, a, b))) violation = OrderedPair{a, b};
      }
    }
  }
  Report report;
  report.data = {{"kind", "check-intermediate"}, {"intermediate", !violation}, {"nonconvex", nullptr}};
  if (violation) {
    const std::string a = input.names[violation->first];
    const std::string b = input.names[violation->second];
    report.code = kNegative;
    report.text = "NOT INTERMEDIATE " + a + " " + b + "\n";
    report.data["nonconvex"] = {a, b};
  } else {
    report.text = "INTERMEDIATE\n";
  }
  return report;
}

Report synthesize_report(const Graph& g) {
  const Profile p = synthesize_profile(g);
  const std::vector<std::string> names = default_names(p.alternatives());
  return {kOk, format_profile(p, names), profile_to_json(p, names)};
}

Report check_domain_report(const NamedProfile& input) {
  const std::vector<LinearOrder> domain = domain_of(input.profile);
  const auto triple = find_cyclic_triple(domain);
  Report report;
  report.data = {{"kind", "check-domain"}, {"condorcet_domain", !triple}, {"cyclic_triple", nullptr}};
  if (triple) {
    const std::vector<std::string> names = names_of(input.names, *triple);
    report.code = kNegative;
    report.text = "NOT CONDORCET DOMAIN " + names[0] + " " + names[1] + " " + names[2] + "\n";
    report.data["cyclic_triple"] = names;
  } else {
    report.text = "CONDORCET DOMAIN\n";
  }
  return report;
}

Report majority_report(const NamedProfile& input) {
  const Profile& p = input.profile;
  const int m = p.alternatives();
  const MajorityRelation mr = majority_relation(p);
  const bool transitive = is_strict_transitive(mr);
  const std::optional<int> representative = representative_voter(p);

  json weak = json::array();
  json strict = json::array();
  std::ostringstream text;
  auto matrix = [&](const char* title, auto holds, json& rows) {
    text << title << '\n';
    for (Alternative a = 0; a < m; ++a) {
      json row = json::array();
      text << input.names[a];
      for (Alternative b = 0; b < m; ++b) {
        const int bit = holds(a, b) ? 1 : 0;
        row.push_back(bit);
        text << ' ' << bit;
      }
      text << '\n';
      rows.push_back(std::move(row));
    }
  };
  matrix("weak", [&](Alternative a, Alternative b) { return mr.weakly_prefers(a, b); }, weak);
  matrix("strict", [&](Alternative a, Alternative b) { return mr.strictly_prefers(a, b); }, strict);
  text << "transitive " << (transitive ? "yes" : "no") << '\n';
  if (representative) {
    text << "representative " << *representative << ' ' << format_order(p.order(*representative), input.names) << '\n';
  } else {
    text << "representative none\n";
  }
  json data = {{"kind", "majority"},
               {"alternatives", input.names},
               {"weak", std::move(weak)},
               {"strict", std::move(strict)},
               {"strictly_transitive", transitive},
               {"representative_voter", representative ? json(*representative) : json(nullptr)}};
  return {transitive ? kOk : kNegative, text.str(), std::move(data)};
}

Rational parse_rational(const std::string& tok, int line) {
  const auto slash = tok.find('/');
  auto number = [&](std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("expected a rational p or p/q, got '" + tok + "'", line);
    }
    return value;
  };
  const std::string_view view(tok);
  if (slash == std::string::npos) return number(view);
  const std::int64_t den = number(view.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + tok + "'", line);
  return Rational(number(view.substr(0, slash)), den);
}

// Header line of alternative names, then one row of values per voter.
Misrepresentation read_table(const std::string& path, const NamedProfile& input) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const int m = input.profile.alternatives();
  std::map<std::string, Alternative> id;
  for (Alternative a = 0; a < m; ++a) id[input.names[a]] = a;
  std::vector<Alternative> column;
  std::vector<std::vector<Rational>> rows;
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (static_cast<int>(tokens.size()) != m) {
      throw ParseError("expected " + std::to_string(m) + " entries, got " + std::to_string(tokens.size()), number);
    }
    if (column.empty()) {
      for (const std::string& name : tokens) {
        const auto it = id.find(name);
        if (it == id.end()) throw ParseError("unknown alternative '" + name + "'", number);
        column.push_back(it->second);
      }
      if (std::set<Alternative>(column.begin(), column.end()).size() != column.size()) {
        throw ParseError("alternative listed twice in header", number);
      }
      continue;
    }
    std::vector<Rational> row(m);
    for (int i = 0; i < m; ++i) row[column[i]] = parse_rational(tokens[i], number);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != input.profile.voters()) {
    throw ParseError("table has " + std::to_string(rows.size()) + " rows for " +
                         std::to_string(input.profile.voters()) + " voters",
                     0);
  }
  return Misrepresentation::table(std::move(rows));
}

Misrepresentation read_misrepresentation(const std::string& choice, int approve_top, const NamedProfile& input) {
  const Profile& p = input.profile;
  if (choice == "borda") return borda(p.alternatives());
  if (choice == "approval") {
    if (approve_top < 1 || approve_top > p.alternatives()) throw Error("--approve-top must lie in 1..m");
    std::vector<std::vector<Alternative>> approved;
    for (const LinearOrder& r : p.orders()) {
      const auto ranking = r.ranking();
      approved.emplace_back(ranking.begin(), ranking.begin() + approve_top);
    }
    return Misrepresentation::approval(approved, p.alternatives());
  }
  if (choice.starts_with("table:")) return read_table(choice.substr(6), input);
  throw Error("unknown --misrep '" + choice + "'; use borda, approval or table:<file>");
}

// Recognition works on the reduced domain; every further voter with the same
// order hangs off its class representative as a pendant vertex, which keeps
// the profile intermediate and gives voter i vertex i.
std::optional<Graph> recognized_voter_tree(const Profile& p, std::string& failure) {
  const RecognitionResult result = recognize(p);
  if (!result.accepted) {
    failure = "profile is not intermediate on any median graph";
    return std::nullopt;
  }
  if (!result.graph->is_tree()) {
    failure = "median graph is not a tree; CC on median graphs is open";
    return std::nullopt;
  }
  std::vector<int> first(result.reduced.voters(), -1);
  for (int v = 0; v < p.voters(); ++v) {
    if (first[result.voter_class[v]] < 0) first[result.voter_class[v]] = v;
  }
  std::vector<Vertex> voter_at(result.reduced.voters());
  for (int c = 0; c < result.reduced.voters(); ++c) voter_at[result.placement[c]] = first[c];
  std::vector<Edge> edges;
  for (const Edge& e : result.graph->edges()) edges.push_back(Edge::make(voter_at[e.u], voter_at[e.v]));
  for (int v = 0; v < p.voters(); ++v) {
    if (first[result.voter_class[v]] != v) edges.push_back(Edge::make(v, first[result.voter_class[v]]));
  }
  return Graph(p.voters(), std::move(edges));
}

struct CcOptions {
  int k = 1;
  std::string objective = "sum";
  std::string misrep = "borda";
  int approve_top = 1;
  std::string tree;
};

Report cc_report(const NamedProfile& input, const CcOptions& options, std::ostream& err) {
  const Profile& p = input.profile;
  const Objective objective = options.objective == "max" ? Objective::egalitarian : Objective::utilitarian;
  const Misrepresentation r = read_misrepresentation(options.misrep, options.approve_top, input);
  std::optional<Graph> tree;
  if (!options.tree.empty()) {
    tree = read_graph_file(options.tree);
  } else {
    std::string failure;
    tree = recognized_voter_tree(p, failure);
    if (!tree) {
      err << failure << '\n';
      return {kNegative, "", json()};
    }
  }
  const CcSolution solution = cc_tree_dp(p, *tree, options.k, r, objective);
  const std::vector<std::string> committee = names_of(input.names, solution.assignment.committee);
  const std::vector<std::string> assignment = names_of(input.names, solution.assignment.representative);
  std::ostringstream text;
  text << "committee";
  for (const std::string& c : committee) text << ' ' << c;
  text << "\nassignment\n";
  for (std::size_t v = 0; v < assignment.size(); ++v) text << v << ' ' << assignment[v] << '\n';
  text << "phi " << to_string(solution.phi) << '\n';
  json data = {{"kind", "cc"},
               {"k", options.k},
               {"objective", options.objective},
               {"misrep", options.misrep},
               {"committee", committee},
               {"assignment", assignment},
               {"phi", to_string(solution.phi)}};
  return {kOk, text.str(), std::move(data)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preference profiles on median graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit reports as JSON")->configurable(false);
  app.fallthrough();

  std::string profile_path;
  std::string graph_path;
  auto* recognize_cmd = app.add_subcommand("recognize", "Find a median graph the profile is intermediate on");
  recognize_cmd->add_option("profile", profile_path)->required();

  auto* intermediate_cmd = app.add_subcommand("check-intermediate", "Check a profile against a median graph");
  intermediate_cmd->add_option("profile", profile_path)->required();
  intermediate_cmd->add_option("graph", graph_path)->required();

  auto* synthesize_cmd = app.add_subcommand("synthesize", "Build a reduced intermediate profile for a median graph");
  synthesize_cmd->add_option("graph", graph_path)->required();

  auto* domain_cmd = app.add_subcommand("check-domain", "Check the Condorcet-domain property");
  domain_cmd->add_option("profile", profile_path)->required();

  auto* majority_cmd = app.add_subcommand("majority", "Majority relation and representative voter");
  majority_cmd->add_option("profile", profile_path)->required();

  CcOptions cc;
  auto* cc_cmd = app.add_subcommand("cc", "Chamberlin-Courant committee on a single-crossing tree");
  cc_cmd->add_option("profile", profile_path)->required();
  cc_cmd->add_option("--k", cc.k, "Committee size")->required();
  cc_cmd->add_option("--objective", cc.objective)->check(CLI::IsMember({"sum", "max"}));
  cc_cmd->add_option("--misrep", cc.misrep, "borda | approval | table:<file>");
  cc_cmd->add_option("--approve-top", cc.approve_top, "Approval: each voter approves their top t");
  cc_cmd->add_option("--tree", cc.tree, "Tree with voter i on vertex i (recognized if absent)");

  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen-median", "Random median graph");
  gen_cmd->add_option("--n", gen_n)->required();
  gen_cmd->add_option("--seed", gen_seed)->required();

  std::vector<std::string> argv_storage{"medianvote"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Report report;
    if (recognize_cmd->parsed()) {
      report = recognize_report(read_profile_file(profile_path));
    } else if (intermediate_cmd->parsed()) {
      report = check_intermediate_report(read_profile_file(profile_path), read_graph_file(graph_path));
    } else if (synthesize_cmd->parsed()) {
      report = synthesize_report(read_graph_file(graph_path));
    } else if (domain_cmd->parsed()) {
      report = check_domain_report(read_profile_file(profile_path));
    } else if (majority_cmd->parsed()) {
      report = majority_report(read_profile_file(profile_path));
    } else if (cc_cmd->parsed()) {
      report = cc_report(read_profile_file(profile_path), cc, err);
      if (report.data.is_null()) return report.code;
    } else {
      const Graph g = random_median_graph(gen_n, gen_seed);
      report = {kOk, format_graph(g), graph_to_json(g)};
    }
    if (as_json) {
      out << report.data.dump(2) << '\n';
    } else {
      out << report.text;
    }
    return report.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace medianvote::cli
