#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qha/presentation.hpp"

namespace qha {

// The combinatorial apparatus of the monomial HH^1 formula: parallel-path
// sets and the substitution map R_g.
struct ParallelData {
  std::vector<Path> nonzero_paths;                              // N
  std::vector<std::pair<std::string, Path>> q0N;                // (vertex, cycle)
  std::vector<std::pair<std::string, Path>> q1N;                // (arrow, parallel path)
  std::vector<std::pair<std::string, Path>> q1N_g;
  std::vector<std::pair<std::string, Path>> q1N_a;
  std::vector<std::pair<std::string, Path>> q1N_e;
  std::vector<std::pair<Path, Path>> RN;                        // (relation path, parallel path)
  RationalMatrix rg_matrix;                                     // rows q1N_g, cols RN
};

struct EpsilonReport {
  long epsilon = 0;
  std::size_t epsilon_prime = 0;
  std::size_t relation_count = 0;
  long hh1_dim = 0;
  bool bounds_ok = false;  // 0 <= epsilon <= epsilon_prime <= 2
};

// Throws std::runtime_error("not monomial") unless the presentation is monomial.
ParallelData parallel_data(const AlgebraBasis& b);

// dim Z - |q0N| + |q1N| - |q1N_e| - rank(R_g).
long hh1_monomial(const AlgebraBasis& b);

// epsilon = hh1 - 1 - |R|; epsilon' from the quiver shape (2 for a double
// arrow, 1 for a bypass, 0 otherwise).
EpsilonReport epsilon_report(const AlgebraBasis& b, std::size_t relation_count);

}  // namespace qha
