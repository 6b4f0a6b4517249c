#include "qha/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qha {

namespace {

void require_monomial(const AlgebraBasis& b) {
  for (const auto& rel : b.presentation().relations)
    if (!rel.monomial()) throw std::runtime_error("not monomial");
}

Path substitute(const Quiver& q, const Path& rho, std::size_t pos, const Path& gamma) {
  const Arrow* repl = q.find_arrow(rho.arrows[pos]);
  Path prefix{rho.source, {rho.arrows.begin(), rho.arrows.begin() + pos}};
  Path suffix{repl->target, {rho.arrows.begin() + pos + 1, rho.arrows.end()}};
  return compose(q, compose(q, prefix, gamma), suffix);
}

}  // namespace

ParallelData parallel_data(const AlgebraBasis& b) {
  require_monomial(b);
  const Presentation& p = b.presentation();
  const Quiver& q = p.quiver;

  ParallelData d;
  d.nonzero_paths = b.basis_paths();

  std::map<std::string, std::string> target;
  for (const auto& path : d.nonzero_paths) target[path.key()] = path_target(q, path);

  for (const auto& path : d.nonzero_paths)
    if (path.source == target.at(path.key())) d.q0N.emplace_back(path.source, path);

  std::vector<Path> relation_paths;
  for (const auto& rel : p.relations) relation_paths.push_back(rel.terms.front().path);

  for (const auto& alpha : q.arrows) {
    for (const auto& gamma : d.nonzero_paths) {
      if (gamma.source != alpha.source || target.at(gamma.key()) != alpha.target) continue;
      d.q1N.emplace_back(alpha.name, gamma);
      bool in_g = gamma.trivial() || gamma.arrows.front() == alpha.name ||
                  gamma.arrows.back() == alpha.name;
      if (in_g) d.q1N_g.emplace_back(alpha.name, gamma);
      bool in_a = true;
      for (const auto& rho : relation_paths) {
        for (std::size_t j = 0; j < rho.arrows.size() && in_a; ++j) {
          if (rho.arrows[j] != alpha.name) continue;
          if (!b.is_zero(substitute(q, rho, j, gamma))) in_a = false;
        }
        if (!in_a) break;
      }
      if (in_a) d.q1N_a.emplace_back(alpha.name, gamma);
    }
  }

  std::set<std::string> ga_keys;
  for (const auto& [a, g] : d.q1N_g) ga_keys.insert(a + "#" + g.key());
  for (const auto& [a, g] : d.q1N_a) ga_keys.insert(a + "#" + g.key());
  for (const auto& [a, g] : d.q1N)
    if (!ga_keys.count(a + "#" + g.key())) d.q1N_e.emplace_back(a, g);

  std::map<std::string, std::size_t> rn_col;
  for (std::size_t i = 0; i < relation_paths.size(); ++i) {
    const Path& rho = relation_paths[i];
    for (const auto& w : d.nonzero_paths) {
      if (w.source != rho.source || target.at(w.key()) != path_target(q, rho)) continue;
      rn_col[std::to_string(i) + "#" + w.key()] = d.RN.size();
      d.RN.emplace_back(rho, w);
    }
  }

  d.rg_matrix = RationalMatrix(d.q1N_g.size(), d.RN.size());
  for (std::size_t row = 0; row < d.q1N_g.size(); ++row) {
    const auto& [alpha, gamma] = d.q1N_g[row];
    for (std::size_t i = 0; i < relation_paths.size(); ++i) {
      const Path& rho = relation_paths[i];
      for (std::size_t j = 0; j < rho.arrows.size(); ++j) {
        if (rho.arrows[j] != alpha) continue;
        Path sigma = substitute(q, rho, j, gamma);
        if (b.is_zero(sigma)) continue;
        d.rg_matrix.at(row, rn_col.at(std::to_string(i) + "#" + sigma.key())) += 1;
      }
    }
  }
  return d;
}

long hh1_monomial(const AlgebraBasis& b) {
  ParallelData d = parallel_data(b);
  long z = static_cast<long>(center_dim(b));
  return z - static_cast<long>(d.q0N.size()) + static_cast<long>(d.q1N.size()) -
         static_cast<long>(d.q1N_e.size()) - static_cast<long>(rank(d.rg_matrix));
}

EpsilonReport epsilon_report(const AlgebraBasis& b, std::size_t relation_count) {
  require_monomial(b);
  EpsilonReport rep;
  rep.relation_count = relation_count;
  rep.hh1_dim = hh1_monomial(b);
  ShapeReport shape = shape_report(b.presentation().quiver);
  if (!shape.double_arrow_pairs.empty())
    rep.epsilon_prime = 2;
  else if (!shape.bypass_arrows.empty())
    rep.epsilon_prime = 1;
  else
    rep.epsilon_prime = 0;
  rep.epsilon = rep.hh1_dim - 1 - static_cast<long>(relation_count);
  rep.bounds_ok = rep.epsilon >= 0 && rep.epsilon <= static_cast<long>(rep.epsilon_prime);
  return rep;
}

}  // namespace qha
