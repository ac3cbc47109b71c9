#pragma once

// Command-line front end.  Exit codes: 0 success, 1 domain error, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "assoc/census.hpp"
#include "assoc/conflicts.hpp"
#include "assoc/constructions.hpp"
#include "assoc/core.hpp"
#include "assoc/flip_graph.hpp"
#include "assoc/render.hpp"

namespace assoc {

namespace detail {

using json = nlohmann::ordered_json;

inline json chord_json(chord c) { return to_string(c); }

inline json chords_json(const std::vector<chord>& cs) {
  json arr = json::array();
  for (auto c : cs) arr.push_back(chord_json(c));
  return arr;
}

inline json path_json(const flip_path& p) {
  json states = json::array();
  for (const auto& s : p.states) states.push_back(s.word().str());
  json moves = json::array();
  for (const auto& m : p.moves) moves.push_back({{"removed", to_string(m.removed)}, {"inserted", to_string(m.inserted)}});
  return {{"length", p.length()}, {"states", states}, {"moves", moves}};
}

// Positional triangulations, or whitespace-separated ones from stdin when
// none were given (so `construct ... | distance` works).
inline std::vector<triangulation> read_inputs(const std::vector<std::string>& args, std::size_t want, std::istream& in) {
  std::vector<std::string> tokens = args;
  if (tokens.empty())
    for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() != want)
    throw CLI::ValidationError("inputs", "expected " + std::to_string(want) + " triangulation(s), got " +
                                             std::to_string(tokens.size()));
  std::vector<triangulation> out;
  for (const auto& t : tokens) out.push_back(parse_triangulation(t));
  return out;
}

inline tie_rule parse_tie_rule(const std::string& s) {
  if (s == "preorder") return tie_rule::preorder_first;
  if (s == "word") return tie_rule::least_word;
  return tie_rule::first_found;
}

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Flip distance, edge conflicts and greedy heuristics on the associahedron", "assoc"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::vector<std::string> inputs;
  auto add_inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("triangulations", inputs, what);
  };

  auto* encode = app.add_subcommand("encode", "Print the tree word of a triangulation");
  add_inputs(encode, "Chord list a-b,c-d,... ('r' = root vertex) or tree word");
  auto* decode = app.add_subcommand("decode", "Print the chord list of a triangulation");
  add_inputs(decode, "Tree word or chord list");
  auto* distance_cmd = app.add_subcommand("distance", "Exact flip distance between S and T");
  add_inputs(distance_cmd, "S and T (read from stdin when omitted)");
  auto* conflicts_cmd = app.add_subcommand("conflicts", "Number of crossing chord pairs between S and T");
  add_inputs(conflicts_cmd, "S and T");
  auto* neighbors_cmd = app.add_subcommand("neighbors", "Flip neighbours of a triangulation");
  add_inputs(neighbors_cmd, "Triangulation");
  std::string against;
  neighbors_cmd->add_option("--target", against, "Also report conflicts of each neighbour with this triangulation");
  auto* greedy_cmd = app.add_subcommand("greedy", "Greedy conflict-reduction path from S to T");
  add_inputs(greedy_cmd, "S and T");
  std::string tie = "preorder";
  greedy_cmd->add_option("--tie", tie, "Tie rule among minimal-conflict neighbours")
      ->check(CLI::IsMember({"preorder", "word", "first"}));
  auto* geodesics_cmd = app.add_subcommand("geodesics", "All shortest flip paths from S to T");
  add_inputs(geodesics_cmd, "S and T");
  std::size_t limit = default_geodesic_limit;
  geodesics_cmd->add_option("--limit", limit, "Stop after this many paths");
  auto* check_cmd = app.add_subcommand("check-pair", "Full report on a pair problem");
  add_inputs(check_cmd, "S and T");

  auto* construct = app.add_subcommand("construct", "Generate a pair from a known family");
  std::string family;
  int param = 1;
  int pad = 0;
  bool doubled = false;
  std::uint64_t seed = 1;
  construct->add_option("family", family, "theorem1 | bidirectional9 | rising | theorem4 | random")
      ->required()
      ->check(CLI::IsMember({"theorem1", "bidirectional9", "rising", "theorem4", "random"}));
  construct->add_option("k", param, "k for rising/theorem4, size n for random");
  construct->add_option("--pad", pad, "Add this many common fan triangles")->check(CLI::NonNegativeNumber);
  construct->add_flag("--double", doubled, "Glue the pair to its reversed mirror image");
  construct->add_option("--seed", seed, "Seed for the random family");

  auto* census_cmd = app.add_subcommand("census", "Exhaustive census of all pair classes of one size");
  int census_n = 8;
  census_options copt;
  std::string csv_path, summary_path, summary_json_path, checkpoint_path;
  census_cmd->add_option("-n,--size", census_n, "Size n")->required();
  census_cmd->add_option("--threads", copt.threads, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--force", copt.force, "Allow n = 10 (hours of work)");
  census_cmd->add_option("--block-size", copt.block_size, "First-component words per block")->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", csv_path, "Write per-class records as CSV");
  census_cmd->add_option("--summary", summary_path, "Write the key-value summary here");
  census_cmd->add_option("--summary-json", summary_json_path, "Write the JSON summary here");
  census_cmd->add_option("--checkpoint", checkpoint_path, "Checkpoint file for resumable runs");

  auto* render_cmd = app.add_subcommand("render", "SVG of S, or of S and T superimposed");
  add_inputs(render_cmd, "S [T]");
  std::string svg_path;
  bool no_labels = false;
  render_style style;
  render_cmd->add_option("--out", svg_path, "Write the SVG here instead of stdout");
  render_cmd->add_flag("--no-labels", no_labels, "Omit vertex labels");
  render_cmd->add_option("--radius", style.radius, "Disk radius")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (encode->parsed()) {
      const auto t = detail::read_inputs(inputs, 1, in)[0];
      if (as_json)
        out << json{{"n", t.size()}, {"word", t.word().str()}}.dump(2) << '\n';
      else
        out << t.word().str() << '\n';
    } else if (decode->parsed()) {
      const auto t = detail::read_inputs(inputs, 1, in)[0];
      if (as_json)
        out << json{{"n", t.size()}, {"chords", detail::chords_json(t.chords())}}.dump(2) << '\n';
      else
        out << format_chords(t) << '\n';
    } else if (distance_cmd->parsed()) {
      const auto p = detail::read_inputs(inputs, 2, in);
      const int d = distance(p[0], p[1]);
      if (as_json)
        out << json{{"n", p[0].size()}, {"distance", d}}.dump(2) << '\n';
      else
        out << d << '\n';
    } else if (conflicts_cmd->parsed()) {
      const auto p = detail::read_inputs(inputs, 2, in);
      const auto r = conflicts(p[0], p[1]);
      if (as_json) {
        json per = json::object();
        for (auto [c, k] : r.per_chord) per[to_string(c)] = k;
        out << json{{"n", p[0].size()}, {"total", r.total}, {"per_chord", per}}.dump(2) << '\n';
      } else {
        out << r.total << '\n';
      }
    } else if (neighbors_cmd->parsed()) {
      const auto t = detail::read_inputs(inputs, 1, in)[0];
      std::optional<triangulation> target;
      if (!against.empty()) target = parse_triangulation(against);
      if (target) require_same_size(t, *target);
      json arr = json::array();
      for (const auto& [c, nb] : neighbors(t)) {
        json row{{"flipped", to_string(c)}, {"word", nb.word().str()}};
        if (target) row["conflicts"] = conflict_count(nb, *target);
        if (as_json) {
          arr.push_back(row);
        } else {
          out << to_string(c) << ' ' << nb.word().str();
          if (target) out << ' ' << row["conflicts"].get<int>();
          out << '\n';
        }
      }
      if (as_json) out << json{{"n", t.size()}, {"neighbors", arr}}.dump(2) << '\n';
    } else if (greedy_cmd->parsed()) {
      const auto p = detail::read_inputs(inputs, 2, in);
      const auto g = greedy_path(p[0], p[1], detail::parse_tie_rule(tie));
      const auto profile = conflict_profile_along(g.path, p[1]);
      if (as_json) {
        out << json{{"n", p[0].size()},
                    {"tie_rule", tie},
                    {"length", g.length},
                    {"distance", g.length - g.overestimate},
                    {"overestimate", g.overestimate},
                    {"path", detail::path_json(g.path)},
                    {"conflicts", profile}}
                   .dump(2)
            << '\n';
      } else {
        out << "length " << g.length << "\noverestimate " << g.overestimate << '\n';
        for (std::size_t i = 0; i < g.path.states.size(); ++i)
          out << g.path.states[i].word().str() << ' ' << profile[i] << '\n';
      }
    } else if (geodesics_cmd->parsed()) {
      const auto p = detail::read_inputs(inputs, 2, in);
      const auto g = all_geodesics(p[0], p[1], limit);
      if (as_json) {
        json paths = json::array();
        for (const auto& path : g.paths)
          paths.push_back({{"states", detail::path_json(path)["states"]}, {"conflicts", conflict_profile_along(path, p[1])}});
        out << json{{"n", p[0].size()},
                    {"distance", g.paths.empty() ? -1 : g.paths.front().length()},
                    {"count", g.paths.size()},
                    {"limit_exceeded", g.limit_exceeded},
                    {"paths", paths}}
                   .dump(2)
            << '\n';
      } else {
        out << "geodesics " << g.paths.size() << (g.limit_exceeded ? " (limit reached)" : "") << '\n';
        for (const auto& path : g.paths) {
          for (std::size_t i = 0; i < path.states.size(); ++i) out << (i ? " " : "") << path.states[i].word().str();
          out << '\n';
        }
      }
      if (g.limit_exceeded) {
        err << to_string(errc::limit_exceeded) << ": more than " << limit << " geodesics\n";
        return 1;
      }
    } else if (check_cmd->parsed()) {
      const auto p = detail::read_inputs(inputs, 2, in);
      const auto &s = p[0], &t = p[1];
      const int d = distance(s, t);
      const auto cls = classify_edges(s, t);
      const auto greedy = greedy_path(s, t);
      json report{{"n", s.size()},
                  {"source", s.word().str()},
                  {"target", t.word().str()},
                  {"distance", d},
                  {"conflicts", conflict_count(s, t)},
                  {"lower_bound", distance_lower_bound(s, t)},
                  {"upper_bound", greedy.length},
                  {"greedy_overestimate", greedy.overestimate}};
      json profile = json::array();
      for (auto [c, k] : neighbor_conflict_profile(s, t)) profile.push_back({{"flipped", to_string(c)}, {"conflicts", k}});
      report["neighbor_conflicts"] = profile;
      report["common"] = detail::chords_json(cls.common);
      report["one_off"] = detail::chords_json(cls.one_off);
      report["other"] = detail::chords_json(cls.other);
      if (!(s == t)) {
        const auto fwd = first_step_conflict_behavior(s, t);
        const auto bwd = first_step_conflict_behavior(t, s);
        report["geodesic_first_moves"] = detail::chords_json(geodesic_first_moves(s, t));
        report["first_step_min_rise"] = fwd.min_rise;
        report["every_first_step_increases"] = fwd.all_first_moves_increase;
        report["reverse_first_step_min_rise"] = bwd.min_rise;
        report["reverse_every_first_step_increases"] = bwd.all_first_moves_increase;
      }
      report["monotone_geodesic_exists"] = exists_conflict_monotone_geodesic(s, t);
      report["reverse_monotone_geodesic_exists"] = exists_conflict_monotone_geodesic(t, s);
      if (as_json) {
        out << report.dump(2) << '\n';
      } else {
        for (auto it = report.begin(); it != report.end(); ++it) {
          out << it.key() << ' ';
          if (it->is_string())
            out << it->get<std::string>();
          else
            out << it->dump();
          out << '\n';
        }
      }
    } else if (construct->parsed()) {
      std::optional<pair_problem> p;
      if (family == "theorem1") p = theorem1_pair();
      else if (family == "bidirectional9") p = bidirectional9_pair();
      else if (family == "rising") p = rising_pair(param);
      else if (family == "theorem4") p = theorem4_pair(param);
      else {
        std::mt19937_64 rng(seed);
        p = random_pair(param, rng);
      }
      if (pad) p = pad_with_common_triangles(*p, pad);
      if (doubled) p = double_pair(*p);
      if (as_json)
        out << json{{"family", family}, {"n", p->size()}, {"source", p->source().word().str()}, {"target", p->target().word().str()}}.dump(2)
            << '\n';
      else
        out << p->source().word().str() << '\n' << p->target().word().str() << '\n';
    } else if (census_cmd->parsed()) {
      check_census_size(census_n, copt.force);
      if (!checkpoint_path.empty()) copt.checkpoint = checkpoint_path;
      const flip_table table(census_n, copt.threads);
      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path, std::ios::trunc);
        if (!csv) throw error(errc::invalid_argument, "cannot write " + csv_path);
        csv << census_csv_header << '\n';
      }
      census_summary summary;
      run_census(table, copt, [&](const census_record& r) {
        summary.add(r);
        if (csv.is_open()) csv << to_csv(r) << '\n';
      });
      const auto expected = expected_class_count(census_n);
      if (summary.class_count != expected)
        throw error(errc::incomplete_stream, "expected " + std::to_string(expected) + " classes, got " +
                                                 std::to_string(summary.class_count));
      if (!summary_path.empty()) std::ofstream(summary_path, std::ios::trunc) << summary_text(summary);
      if (!summary_json_path.empty()) std::ofstream(summary_json_path, std::ios::trunc) << summary_json(summary).dump(2) << '\n';
      if (as_json)
        out << summary_json(summary).dump(2) << '\n';
      else
        out << summary_text(summary);
    } else if (render_cmd->parsed()) {
      if (inputs.empty() || inputs.size() > 2) throw CLI::ValidationError("render", "expected S or S T");
      const auto ts = detail::read_inputs(inputs, inputs.size(), in);
      style.labels = !no_labels;
      const auto svg = render_svg(ts[0], ts.size() == 2 ? std::optional{ts[1]} : std::nullopt, style);
      if (!svg_path.empty()) {
        std::ofstream(svg_path, std::ios::trunc) << svg;
        if (as_json) out << json{{"n", ts[0].size()}, {"path", svg_path}, {"bytes", svg.size()}}.dump(2) << '\n';
      } else if (as_json) {
        out << json{{"n", ts[0].size()}, {"svg", svg}}.dump(2) << '\n';
      } else {
        out << svg;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace assoc
