#pragma once

#include <random>
#include <string>
#include <vector>

#include "fcadi/context.hpp"
#include "fcadi/io.hpp"
#include "fcadi/lattice.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(FCADI_FIXTURE_DIR) + "/" + name;
}

inline fcadi::FormalContext load(const std::string& name) {
  return fcadi::read_context_file(path(name));
}

// 11-element lattice given by its Hasse diagram; nodes keep their diagram ids
// as labels 1..11 (index = id - 1).
inline fcadi::Lattice lattice11() {
  std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 6}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 9},
      {4, 9}, {5, 9}, {5, 7}, {6, 7}, {6, 8}, {7, 10}, {8, 10}, {9, 10}};
  return fcadi::Lattice::from_covers(11, edges);
}

// 12-element lattice with six atoms and four coatoms and no dismantling
// interval; nodes 1..12 (index = id - 1).
inline fcadi::Lattice lattice12() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= 6; ++a) edges.push_back({0, a});
  std::vector<std::pair<int, int>> mid = {{1, 7}, {1, 8},  {2, 7}, {2, 9},
                                          {3, 7}, {3, 10}, {4, 8}, {4, 9},
                                          {5, 8}, {5, 10}, {6, 9}, {6, 10}};
  edges.insert(edges.end(), mid.begin(), mid.end());
  for (int c = 7; c <= 10; ++c) edges.push_back({c, 11});
  return fcadi::Lattice::from_covers(12, edges);
}

// Every context shape up to max_g × max_m, every incidence pattern.
inline std::vector<fcadi::FormalContext> all_small_contexts(std::size_t max_g,
                                                            std::size_t max_m) {
  static const std::vector<std::string> onames = {"1", "2", "3", "4"};
  static const std::vector<std::string> anames = {"a", "b", "c", "d"};
  std::vector<fcadi::FormalContext> out;
  for (std::size_t ng = 0; ng <= max_g; ++ng) {
    for (std::size_t nm = 0; nm <= max_m; ++nm) {
      const std::size_t cells = ng * nm;
      for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t c = 0; c < cells; ++c) {
          if (mask & (1ull << c)) pairs.emplace_back(c / nm, c % nm);
        }
        out.emplace_back(std::vector<std::string>(onames.begin(), onames.begin() + ng),
                         std::vector<std::string>(anames.begin(), anames.begin() + nm), pairs);
      }
    }
  }
  return out;
}

inline fcadi::FormalContext random_context(std::mt19937_64& rng, std::size_t ng, std::size_t nm,
                                           double density) {
  static const std::vector<std::string> onames = {"1", "2", "3", "4", "5", "6"};
  static const std::vector<std::string> anames = {"a", "b", "c", "d", "e", "f"};
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t m = 0; m < nm; ++m) {
      if (coin(rng) < density) pairs.emplace_back(g, m);
    }
  }
  return fcadi::FormalContext(std::vector<std::string>(onames.begin(), onames.begin() + ng),
                              std::vector<std::string>(anames.begin(), anames.begin() + nm),
                              pairs);
}

}  // namespace fixtures
