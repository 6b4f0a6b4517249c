#include "qha/arrow_equiv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qha {

namespace {

std::vector<std::string> term_new_arrows(const ExtensionPair& pair, const Path& p) {
  std::vector<std::string> out;
  for (const auto& a : p.arrows)
    if (pair.new_arrows.count(a)) out.push_back(a);
  return out;
}

bool reduces_to_zero(const AlgebraBasis& c_basis, const Relation& rel) {
  RationalVector red = c_basis.reduce_combination(rel.terms);
  return std::all_of(red.begin(), red.end(), [](const Rational& x) { return x == 0; });
}

struct UnionFind {
  std::map<std::string, std::string> parent;
  void add(const std::string& x) { parent.emplace(x, x); }
  std::string find(const std::string& x) {
    std::string r = x;
    while (parent.at(r) != r) r = parent.at(r);
    return r;
  }
  bool unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    return true;
  }
};

}  // namespace

BinomialClassification classify_binomials(const ExtensionPair& pair,
                                          const AlgebraBasis& c_basis) {
  BinomialClassification cls;
  const auto& rels = pair.b_presentation.relations;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Relation& rel = rels[i];
    std::vector<std::vector<std::string>> per_term;
    for (const auto& term : rel.terms) per_term.push_back(term_new_arrows(pair, term.path));
    bool all_old = std::all_of(per_term.begin(), per_term.end(),
                               [](const auto& v) { return v.empty(); });
    if (all_old) {
      if (!reduces_to_zero(c_basis, rel))
        throw std::runtime_error(
            "Lemma 2.1 violation: relation " + std::to_string(i) +
            " uses old arrows only but does not lie in the ideal of C");
      cls.inherited_relations.push_back(i);
      continue;
    }
    if (rel.monomial()) continue;  // defining relation of a new arrow
    if (rel.terms.size() == 2 && per_term[0].size() == 1 && per_term[1].size() == 1) {
      cls.merging_pairs.emplace_back(per_term[0].front(), per_term[1].front());
      continue;
    }
    throw std::runtime_error(
        "Lemma 2.1 violation: relation " + std::to_string(i) +
        " involves new arrows but is not a binomial with one new arrow per term");
  }
  return cls;
}

EquivalenceClasses equivalence_classes(const ExtensionPair& pair,
                                       const BinomialClassification& cls) {
  EquivalenceClasses out;
  out.n_prime = cls.merging_pairs.size();

  UnionFind uf;
  for (const auto& a : pair.new_arrows) uf.add(a);
  std::map<std::string, std::set<std::string>> partners;
  for (const auto& [a, b] : cls.merging_pairs) {
    uf.unite(a, b);
    if (a != b) {
      partners[a].insert(b);
      partners[b].insert(a);
    }
  }
  for (const auto& [arrow, ps] : partners)
    if (ps.size() >= 2) out.sim_already_transitive = false;

  std::map<std::string, std::vector<std::string>> by_root;
  for (const auto& a : pair.new_arrows) by_root[uf.find(a)].push_back(a);
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.classes.push_back(members);
  }
  out.n = out.classes.size();
  return out;
}

VerificationReport verify_theorem(const ExtensionPair& pair, bool assert_rep_finite,
                                  std::size_t max_len) {
  {
    auto diags = validate_pair(pair);
    if (!diags.empty()) throw std::runtime_error("invalid pair: " + diags.front());
  }
  AlgebraBasis c_basis = AlgebraBasis::compute(pair.c_presentation, max_len);
  AlgebraBasis b_basis = AlgebraBasis::compute(pair.b_presentation, max_len);
  ClassReport b_class = classify(b_basis);
  if (!b_class.schurian) throw std::runtime_error("B is not schurian");
  if (!b_class.connected) throw std::runtime_error("B is not connected");

  VerificationReport rep;
  rep.relation_count = pair.c_presentation.relations.size();
  rep.hh1_c = hh1_oracle(c_basis).hh1_dim;
  rep.hh1_b = hh1_oracle(b_basis).hh1_dim;

  BinomialClassification cls = classify_binomials(pair, c_basis);
  EquivalenceClasses eq = equivalence_classes(pair, cls);
  rep.n_bc = eq.n;
  rep.n_prime_bc = eq.n_prime;

  rep.identity_theorem31 = rep.hh1_b == rep.hh1_c + static_cast<long>(rep.n_bc);
  rep.cor32a_applicable = rep.hh1_c == 0;
  rep.cor32a_ok = !rep.cor32a_applicable || rep.hh1_b == static_cast<long>(rep.n_bc);

  rep.rep_finite_asserted = assert_rep_finite;
  if (assert_rep_finite) {
    rep.cor24_ok = rep.n_bc == rep.relation_count - rep.n_prime_bc;
    rep.transitivity_contradiction = !eq.sim_already_transitive;
    rep.free_rank = rep.n_bc;
    rep.homology_rank = rep.n_bc;
  }

  rep.b_monomial = b_class.monomial;
  if (rep.b_monomial)
    rep.cor43_ok = rep.hh1_b == rep.hh1_c + static_cast<long>(rep.relation_count);

  ShapeReport shape = shape_report(pair.b_presentation.quiver);
  bool tree_no_rel =
      pair.b_presentation.relations.empty() && shape.unoriented_cycle_count == 0;
  rep.cor33_ok = (rep.hh1_b == 0) == tree_no_rel;
  return rep;
}

}  // namespace qha
