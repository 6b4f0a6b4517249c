#include "qha/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace qha {

std::vector<std::string> validate(const Presentation& p) {
  std::vector<std::string> diags = p.quiver.validate();
  if (!diags.empty()) return diags;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& rel = p.relations[i];
    std::string where = "relation " + std::to_string(i);
    if (rel.terms.empty()) {
      diags.push_back(where + ": no terms");
      continue;
    }
    bool composable = true;
    for (const auto& t : rel.terms) {
      if (t.coeff == 0) diags.push_back(where + ": zero coefficient");
      if (!path_composable(p.quiver, t.path)) {
        diags.push_back(where + ": non-composable path " + t.path.key());
        composable = false;
      }
      if (t.path.length() < 2) diags.push_back(where + ": relation term of length < 2");
    }
    if (!composable) continue;
    const Path& first = rel.terms.front().path;
    for (const auto& t : rel.terms)
      if (t.path.source != first.source ||
          path_target(p.quiver, t.path) != path_target(p.quiver, first))
        diags.push_back(where + ": terms not parallel");
    std::set<std::string> keys;
    for (const auto& t : rel.terms)
      if (!keys.insert(t.path.key()).second)
        diags.push_back(where + ": duplicate term path " + t.path.key());
  }
  return diags;
}

bool contains_relation_subpath(const Presentation& p, const Path& path) {
  for (const auto& rel : p.relations) {
    if (!rel.monomial()) continue;
    const auto& r = rel.terms.front().path.arrows;
    if (r.size() > path.arrows.size()) continue;
    for (std::size_t i = 0; i + r.size() <= path.arrows.size(); ++i)
      if (std::equal(r.begin(), r.end(), path.arrows.begin() + i)) return true;
  }
  return false;
}

namespace {

bool all_monomial(const Presentation& p) {
  return std::all_of(p.relations.begin(), p.relations.end(),
                     [](const Relation& r) { return r.monomial(); });
}

std::string block_key(const std::string& x, const std::string& y) { return x + "->" + y; }

}  // namespace

AlgebraBasis AlgebraBasis::compute(const Presentation& p, std::size_t max_len) {
  {
    auto diags = validate(p);
    if (!diags.empty()) throw std::runtime_error("invalid presentation: " + diags.front());
  }
  AlgebraBasis b;
  b.pres_ = p;
  const Quiver& q = p.quiver;

  if (all_monomial(p)) {
    // Basis of a monomial algebra: the paths free of relation subpaths.
    std::vector<Path> frontier;
    for (const auto& v : q.vertices) frontier.push_back(trivial_path(v.name));
    std::vector<Path> free_paths = frontier;
    std::size_t len = 0;
    while (!frontier.empty()) {
      if (len >= max_len)
        throw std::runtime_error("not certified finite-dimensional within max_len");
      ++len;
      std::vector<Path> next;
      for (const auto& path : frontier) {
        std::string end = path_target(q, path);
        for (const auto& a : q.arrows) {
          if (a.source != end) continue;
          Path ext = path;
          ext.arrows.push_back(a.name);
          if (!contains_relation_subpath(p, ext)) next.push_back(std::move(ext));
        }
      }
      free_paths.insert(free_paths.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    b.nilpotency_degree_ = len;  // frontier emptied at this length
    std::sort(free_paths.begin(), free_paths.end(), path_less);
    b.basis_paths_ = std::move(free_paths);
    for (std::size_t i = 0; i < b.basis_paths_.size(); ++i) {
      const Path& path = b.basis_paths_[i];
      b.basis_index_[path.key()] = i;
      b.target_of_[path.key()] = path_target(q, path);
      RationalVector unit(b.basis_paths_.size(), Rational(0));
      unit[i] = 1;
      b.reduction_[path.key()] = std::move(unit);
    }
    return b;
  }

  // General route: row-reduce the truncated ideal span per (x,y) block.
  std::size_t d = 2;
  for (const auto& rel : p.relations)
    for (const auto& t : rel.terms) d = std::max(d, t.path.length());
  const std::size_t spread = d - 2;
  if (max_len < 2 * spread + 2)
    throw std::runtime_error("not certified finite-dimensional within max_len");

  for (std::size_t work_len = std::min<std::size_t>(max_len, std::max<std::size_t>(8, 2 * spread + 4));;
       work_len = std::min(max_len, work_len * 2)) {
    std::vector<Path> all_paths = enumerate_paths(q, work_len);
    std::map<std::string, std::vector<Path>> by_pair;  // ascending path_less
    for (const auto& path : all_paths)
      by_pair[block_key(path.source, path_target(q, path))].push_back(path);

    // zero_flags[key] = e_path lies in the truncated ideal span
    std::map<std::string, bool> zero_flag;
    std::map<std::string, std::vector<std::pair<std::string, Rational>>> pivot_tail;
    std::set<std::string> pivot_keys;

    for (auto& [bk, cols_asc] : by_pair) {
      std::vector<Path> cols = cols_asc;  // descending: longest / lex-greatest first
      std::reverse(cols.begin(), cols.end());
      std::map<std::string, std::size_t> col_of;
      for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i].key()] = i;

      std::vector<RationalVector> rows;
      const std::string& x = cols.front().source;
      std::string y = path_target(q, cols.front());
      for (const auto& rel : p.relations) {
        const Path& first = rel.terms.front().path;
        std::string s = first.source;
        std::string t = path_target(q, first);
        std::size_t rel_max = 0;
        for (const auto& term : rel.terms) rel_max = std::max(rel_max, term.path.length());
        auto us = by_pair.find(block_key(x, s));
        auto vs = by_pair.find(block_key(t, y));
        if (us == by_pair.end() || vs == by_pair.end()) continue;
        for (const auto& u : us->second) {
          if (u.length() + rel_max > work_len) break;
          for (const auto& v : vs->second) {
            if (u.length() + v.length() + rel_max > work_len) break;
            RationalVector row(cols.size(), Rational(0));
            for (const auto& term : rel.terms) {
              Path w = compose(q, compose(q, u, term.path), v);
              row[col_of.at(w.key())] += term.coeff;
            }
            rows.push_back(std::move(row));
          }
        }
      }

      RationalMatrix m(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = rows[r][c];
      RationalMatrix red = rref(m);
      std::vector<std::size_t> pivots = pivot_columns(m);
      std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::size_t pc = pivots[i];
        pivot_keys.insert(cols[pc].key());
        bool unit = true;
        std::vector<std::pair<std::string, Rational>> tail;
        for (std::size_t c = pc + 1; c < cols.size(); ++c) {
          if (red.at(i, c) == 0) continue;
          unit = false;
          if (!pivot_set.count(c)) tail.emplace_back(cols[c].key(), -red.at(i, c));
        }
        zero_flag[cols[pc].key()] = unit;
        pivot_tail[cols[pc].key()] = std::move(tail);
      }
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!pivot_set.count(c)) zero_flag[cols[c].key()] = false;
    }

    // Certify: smallest m with every path of length in [m, work_len - spread]
    // lying in the span, and work_len >= m + 2*spread.
    std::size_t top_nonzero = 0;  // longest path length <= work_len - spread not in span
    for (const auto& path : all_paths) {
      if (path.length() > work_len - spread) continue;
      if (!zero_flag.at(path.key())) top_nonzero = std::max(top_nonzero, path.length());
    }
    std::size_t m = top_nonzero + 1;
    bool certified = m + 2 * spread <= work_len;
    if (!certified) {
      if (work_len >= max_len)
        throw std::runtime_error("not certified finite-dimensional within max_len");
      continue;
    }

    b.nilpotency_degree_ = m;
    for (const auto& path : all_paths)
      if (path.length() < m && !pivot_keys.count(path.key()))
        b.basis_paths_.push_back(path);
    std::sort(b.basis_paths_.begin(), b.basis_paths_.end(), path_less);
    for (std::size_t i = 0; i < b.basis_paths_.size(); ++i) {
      b.basis_index_[b.basis_paths_[i].key()] = i;
      b.target_of_[b.basis_paths_[i].key()] = path_target(q, b.basis_paths_[i]);
    }
    for (const auto& path : all_paths) {
      if (path.length() >= m) continue;
      RationalVector coords(b.basis_paths_.size(), Rational(0));
      auto it = b.basis_index_.find(path.key());
      if (it != b.basis_index_.end()) {
        coords[it->second] = 1;
      } else {
        for (const auto& [key, coeff] : pivot_tail.at(path.key())) {
          auto bi = b.basis_index_.find(key);
          if (bi != b.basis_index_.end()) coords[bi->second] += coeff;
          // tail entries of length >= m are zero in the quotient
        }
      }
      b.reduction_[path.key()] = std::move(coords);
    }
    return b;
  }
}

RationalVector AlgebraBasis::reduce(const Path& p) const {
  if (!path_composable(pres_.quiver, p))
    throw std::invalid_argument("reduce: non-composable path " + p.key());
  if (p.length() >= nilpotency_degree_) return RationalVector(dimension(), Rational(0));
  auto it = reduction_.find(p.key());
  if (it == reduction_.end()) {
    // monomial fast path stores basis paths only; everything else is zero
    if (all_monomial(pres_) && contains_relation_subpath(pres_, p))
      return RationalVector(dimension(), Rational(0));
    throw std::logic_error("reduce: path missing from reduction table: " + p.key());
  }
  return it->second;
}

RationalVector AlgebraBasis::reduce_combination(const std::vector<RelationTerm>& terms) const {
  RationalVector out(dimension(), Rational(0));
  for (const auto& t : terms) {
    RationalVector r = reduce(t.path);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.coeff * r[i];
  }
  return out;
}

bool AlgebraBasis::is_zero(const Path& p) const {
  RationalVector r = reduce(p);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

RationalVector AlgebraBasis::product(std::size_t i, std::size_t j) const {
  const Path& u = basis_paths_[i];
  const Path& v = basis_paths_[j];
  if (target_of_.at(u.key()) != v.source) return RationalVector(dimension(), Rational(0));
  return reduce(compose(pres_.quiver, u, v));
}

std::vector<std::size_t> AlgebraBasis::block(const std::string& x, const std::string& y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_paths_.size(); ++i)
    if (basis_paths_[i].source == x && target_of_.at(basis_paths_[i].key()) == y)
      out.push_back(i);
  return out;
}

std::optional<std::size_t> AlgebraBasis::basis_index(const Path& p) const {
  auto it = basis_index_.find(p.key());
  if (it == basis_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool gentle_syntactic(const Presentation& p) {
  const Quiver& q = p.quiver;
  for (const auto& rel : p.relations)
    if (!rel.monomial() || rel.terms.front().path.length() != 2) return false;
  for (const auto& v : q.vertices) {
    std::size_t in = 0, out = 0;
    for (const auto& a : q.arrows) {
      in += a.target == v.name;
      out += a.source == v.name;
    }
    if (in > 2 || out > 2) return false;
  }
  std::set<std::pair<std::string, std::string>> zero_pairs;
  for (const auto& rel : p.relations)
    zero_pairs.insert({rel.terms.front().path.arrows[0], rel.terms.front().path.arrows[1]});
  for (const auto& alpha : q.arrows) {
    std::size_t succ_nonzero = 0, succ_zero = 0, pred_nonzero = 0, pred_zero = 0;
    for (const auto& beta : q.arrows) {
      if (beta.source == alpha.target)
        (zero_pairs.count({alpha.name, beta.name}) ? succ_zero : succ_nonzero)++;
      if (beta.target == alpha.source)
        (zero_pairs.count({beta.name, alpha.name}) ? pred_zero : pred_nonzero)++;
    }
    if (succ_nonzero > 1 || succ_zero > 1 || pred_nonzero > 1 || pred_zero > 1) return false;
  }
  return true;
}

}  // namespace

ClassReport classify(const AlgebraBasis& b) {
  const Presentation& p = b.presentation();
  ClassReport rep;
  rep.admissible = true;          // validated and I <= J^2 by construction
  rep.finite_dimensional = true;  // certified by compute()
  rep.dimension = b.dimension();
  rep.monomial = all_monomial(p);
  rep.triangular = is_acyclic(p.quiver);
  rep.connected = underlying_connected(p.quiver);
  rep.gentle = gentle_syntactic(p);

  rep.schurian = true;
  std::map<std::string, std::size_t> block_dims;
  for (const auto& path : b.basis_paths())
    if (++block_dims[block_key(path.source, path_target(p.quiver, path))] > 1)
      rep.schurian = false;
  return rep;
}

bool has_double_zero(const Presentation& p,
                     const std::function<bool(const std::string&)>& arrow_ok) {
  const Quiver& q = p.quiver;
  const std::size_t run_cap = 2 * q.arrows.size() + 2;
  std::vector<std::pair<std::string, std::string>> zero2;  // (first arrow, second arrow)
  for (const auto& rel : p.relations) {
    if (!rel.monomial() || rel.terms.front().path.length() != 2) continue;
    const auto& a = rel.terms.front().path.arrows;
    if (!arrow_ok || (arrow_ok(a[0]) && arrow_ok(a[1]))) zero2.emplace_back(a[0], a[1]);
  }
  for (const auto& [a1, b1] : zero2) {
    for (const auto& [g2, d2] : zero2) {
      const Arrow* beta = q.find_arrow(b1);
      const Arrow* gamma = q.find_arrow(g2);
      WalkQuery query;
      query.from = beta->target;
      query.to = gamma->source;
      query.arrow_ok = arrow_ok;
      // no step restriction at the junctions: the connecting walk may begin
      // or end by stepping backwards into a relation's own arrows, which is
      // how consecutive overlapping relations form a double zero
      query.allow_empty = true;
      query.run_ok = [&](const Path& run) {
        return run.length() <= run_cap && !contains_relation_subpath(p, run);
      };
      if (connecting_walk_exists(q, query)) return true;
    }
  }
  return false;
}

GentleTiltedType gentle_tilted_type(const Presentation& p) {
  if (!gentle_syntactic(p) || !underlying_connected(p.quiver))
    return GentleTiltedType::notApplicable;
  ShapeReport shape = shape_report(p.quiver);
  if (shape.unoriented_cycle_count == 0) {
    return has_double_zero(p, nullptr) ? GentleTiltedType::notApplicable
                                       : GentleTiltedType::typeA;
  }
  if (shape.unoriented_cycle_count != 1) return GentleTiltedType::notApplicable;

  std::vector<std::string> cycle = core_arrows(p.quiver);
  std::set<std::string> cycle_set(cycle.begin(), cycle.end());
  auto on_cycle = [&](const std::string& name) { return cycle_set.count(name) > 0; };
  if (has_double_zero(p, on_cycle)) return GentleTiltedType::notApplicable;

  std::set<std::string> cycle_vertices;
  for (const auto& name : cycle) {
    const Arrow* a = p.quiver.find_arrow(name);
    cycle_vertices.insert(a->source);
    cycle_vertices.insert(a->target);
  }
  bool any_enter = false, any_leave = false;
  for (const auto& a : p.quiver.arrows) {
    if (cycle_set.count(a.name)) continue;
    if (cycle_vertices.count(a.target)) any_enter = true;
    if (cycle_vertices.count(a.source)) any_leave = true;
  }
  if (any_enter && any_leave) return GentleTiltedType::notApplicable;
  return GentleTiltedType::typeAtilde;
}

std::size_t center_dim(const AlgebraBasis& b) {
  const Quiver& q = b.presentation().quiver;
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < b.basis_paths().size(); ++i) {
    const Path& path = b.basis_paths()[i];
    if (path.source == path_target(q, path)) diag.push_back(i);
  }
  // one equation row block per arrow: z*alpha - alpha*z = 0
  std::vector<RationalVector> rows(q.arrows.size() * b.dimension(),
                                   RationalVector(diag.size(), Rational(0)));
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& alpha = q.arrows[ai];
    Path ap{alpha.source, {alpha.name}};
    std::size_t arrow_idx = *b.basis_index(ap);  // arrows are always nonzero cosets
    for (std::size_t k = 0; k < diag.size(); ++k) {
      const Path& c = b.basis_paths()[diag[k]];
      if (c.source == alpha.source) {
        RationalVector za = b.product(diag[k], arrow_idx);
        for (std::size_t coord = 0; coord < za.size(); ++coord)
          rows[ai * b.dimension() + coord][k] += za[coord];
      }
      if (c.source == alpha.target) {
        RationalVector az = b.product(arrow_idx, diag[k]);
        for (std::size_t coord = 0; coord < az.size(); ++coord)
          rows[ai * b.dimension() + coord][k] -= az[coord];
      }
    }
  }
  RationalMatrix m(rows.size(), diag.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < diag.size(); ++c) m.at(r, c) = rows[r][c];
  return diag.size() - rank(m);
}

Rational tits_form(const Presentation& p, const std::vector<long>& v) {
  if (v.size() != p.quiver.vertices.size())
    throw std::invalid_argument("tits_form: dimension mismatch");
  std::map<std::string, long> val;
  for (std::size_t i = 0; i < v.size(); ++i) val[p.quiver.vertices[i].name] = v[i];
  Rational q(0);
  for (long x : v) q += Rational(x) * x;
  for (const auto& a : p.quiver.arrows) q -= Rational(val.at(a.source)) * val.at(a.target);
  for (const auto& rel : p.relations) {
    const Path& first = rel.terms.front().path;
    q += Rational(val.at(first.source)) * val.at(path_target(p.quiver, first));
  }
  return q;
}

}  // namespace qha
