// Writes the size-8 pair superimposed as SVG and prints a short report.
//   superimpose [out.svg]

#include <fstream>
#include <iostream>

#include "assoc/assoc.hpp"

int main(int argc, char** argv) {
  using namespace assoc;
  const auto p = theorem1_pair();
  const auto& s = p.source();
  const auto& t = p.target();

  std::cout << "S " << s.word().str() << "  " << format_chords(s) << '\n';
  std::cout << "T " << t.word().str() << "  " << format_chords(t) << '\n';
  std::cout << "distance " << distance(s, t) << ", conflicts " << conflict_count(s, t) << '\n';
  for (auto [c, k] : neighbor_conflict_profile(s, t)) std::cout << "  flip " << to_string(c) << " -> " << k << '\n';

  const auto g = all_geodesics(s, t);
  for (const auto& path : g.paths) {
    const auto prof = conflict_profile_along(path, t);
    for (std::size_t i = 0; i < path.states.size(); ++i)
      std::cout << "  S" << i << ' ' << path.states[i].word().str() << ' ' << prof[i] << '\n';
  }
  const auto greedy = greedy_path(s, t);
  std::cout << "greedy length " << greedy.length << " (overestimate " << greedy.overestimate << ")\n";

  const std::string out = argc > 1 ? argv[1] : "pair.svg";
  std::ofstream(out) << render_svg(s, t);
  std::cout << "wrote " << out << '\n';
}
