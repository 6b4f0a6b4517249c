#include "qha/relext.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace qha {

RelextQuiver relext_quiver(const Presentation& c, const SystemOfRelations& r) {
  {
    auto diags = validate(c);
    if (!diags.empty()) throw std::runtime_error("invalid presentation: " + diags.front());
  }
  RelextQuiver out;
  out.quiver = c.quiver;
  for (std::size_t i = 0; i < r.relations.size(); ++i) {
    const Path& first = r.relations[i].terms.front().path;
    std::string name = "nw_" + std::to_string(i);
    while (out.quiver.find_arrow(name)) name = "_" + name;
    out.quiver.arrows.push_back(
        Arrow{name, path_target(c.quiver, first), first.source});
    out.new_arrows.insert(name);
    out.correspondence[name] = i;
  }
  return out;
}

ExtensionPair auto_relext_gentle(const Presentation& c) {
  GentleTiltedType type = gentle_tilted_type(c);
  if (type == GentleTiltedType::notApplicable)
    throw std::runtime_error("not gentle tilted of type A or A~");
  SystemOfRelations sys{c.relations};
  RelextQuiver rq = relext_quiver(c, sys);

  ExtensionPair pair;
  pair.c_presentation = c;
  pair.b_presentation.quiver = rq.quiver;
  pair.new_arrows = rq.new_arrows;
  pair.correspondence = rq.correspondence;

  std::map<std::size_t, std::string> arrow_of_relation;
  for (const auto& [name, idx] : rq.correspondence) arrow_of_relation[idx] = name;

  for (std::size_t i = 0; i < c.relations.size(); ++i) {
    const Path& ab = c.relations[i].terms.front().path;
    const std::string& a = ab.arrows[0];
    const std::string& b = ab.arrows[1];
    const std::string& n = arrow_of_relation.at(i);
    auto mono = [](const std::string& src, const std::string& a1, const std::string& a2) {
      return Relation{{RelationTerm{Rational(1), Path{src, {a1, a2}}}}};
    };
    const Quiver& bq = pair.b_presentation.quiver;
    pair.b_presentation.relations.push_back(mono(ab.source, a, b));
    pair.b_presentation.relations.push_back(
        mono(bq.find_arrow(b)->source, b, n));
    pair.b_presentation.relations.push_back(
        mono(bq.find_arrow(n)->source, n, a));
  }
  return pair;
}

std::vector<std::string> validate_pair(const ExtensionPair& pair) {
  std::vector<std::string> diags;
  for (const auto& d : validate(pair.c_presentation)) diags.push_back("C: " + d);
  for (const auto& d : validate(pair.b_presentation)) diags.push_back("B: " + d);
  if (!diags.empty()) return diags;

  const Quiver& cq = pair.c_presentation.quiver;
  const Quiver& bq = pair.b_presentation.quiver;

  std::set<std::string> cv, bv;
  for (const auto& v : cq.vertices) cv.insert(v.name);
  for (const auto& v : bq.vertices) bv.insert(v.name);
  if (cv != bv) diags.push_back("vertex sets of B and C differ");

  for (const auto& name : pair.new_arrows)
    if (!bq.find_arrow(name)) diags.push_back("new arrow not in B: " + name);

  // old arrows of B = arrows of C
  std::vector<Arrow> old_arrows;
  for (const auto& a : bq.arrows)
    if (!pair.new_arrows.count(a.name)) old_arrows.push_back(a);
  auto by_name = [](const Arrow& a, const Arrow& b) { return a.name < b.name; };
  std::vector<Arrow> c_arrows = cq.arrows;
  std::sort(old_arrows.begin(), old_arrows.end(), by_name);
  std::sort(c_arrows.begin(), c_arrows.end(), by_name);
  if (old_arrows != c_arrows) diags.push_back("old arrows of B do not match the arrows of C");

  // correspondence is a bijection new arrows <-> relation indices of C,
  // with each new arrow running t(rho) -> s(rho)
  std::set<std::size_t> used;
  if (pair.correspondence.size() != pair.new_arrows.size() ||
      pair.new_arrows.size() != pair.c_presentation.relations.size())
    diags.push_back("new arrow count does not match the relation count of C");
  for (const auto& [name, idx] : pair.correspondence) {
    if (!pair.new_arrows.count(name)) {
      diags.push_back("correspondence names a non-new arrow: " + name);
      continue;
    }
    if (idx >= pair.c_presentation.relations.size()) {
      diags.push_back("correspondence index out of range for arrow " + name);
      continue;
    }
    if (!used.insert(idx).second)
      diags.push_back("relation index used twice: " + std::to_string(idx));
    const Arrow* a = bq.find_arrow(name);
    const Path& first = pair.c_presentation.relations[idx].terms.front().path;
    if (!a) continue;
    if (a->source != path_target(cq, first) || a->target != first.source)
      diags.push_back("new arrow " + name + " does not run opposite to its relation");
  }
  for (const auto& name : pair.new_arrows)
    if (!pair.correspondence.count(name))
      diags.push_back("new arrow without correspondence: " + name);
  if (!diags.empty()) return diags;

  // Structural walk condition: no reduced walk new . w' . new where w'
  // consists of old arrows and every maximal directed run of w' is
  // nonzero in C.
  std::unique_ptr<AlgebraBasis> cb;
  try {
    cb = std::make_unique<AlgebraBasis>(AlgebraBasis::compute(pair.c_presentation));
  } catch (const std::exception& e) {
    diags.push_back(std::string("C basis: ") + e.what());
    return diags;
  }
  auto old_ok = [&](const std::string& name) { return !pair.new_arrows.count(name); };
  for (const auto& n1 : pair.new_arrows) {
    for (const auto& n2 : pair.new_arrows) {
      const Arrow* a1 = bq.find_arrow(n1);
      const Arrow* a2 = bq.find_arrow(n2);
      WalkQuery query;
      query.from = a1->target;
      query.to = a2->source;
      query.arrow_ok = old_ok;
      query.forbidden_first = WalkStep{n1, StepDir::inverse};
      query.forbidden_last = WalkStep{n2, StepDir::inverse};
      query.allow_empty = true;
      query.run_ok = [&](const Path& run) { return !cb->is_zero(run); };
      if (connecting_walk_exists(bq, query))
        diags.push_back("structural walk violation: new arrow " + n1 +
                        " connects to new arrow " + n2 + " through a nonzero old walk");
    }
  }
  return diags;
}

namespace {

// Rows spanning the ideal of `relations` inside the space of paths of
// length <= work_len, over global path coordinates.
std::vector<RationalVector> ideal_rows(const Quiver& q,
                                       const std::vector<Relation>& relations,
                                       const std::vector<Path>& all_paths,
                                       std::size_t work_len) {
  std::map<std::string, std::size_t> col_of;
  for (std::size_t i = 0; i < all_paths.size(); ++i) col_of[all_paths[i].key()] = i;
  std::map<std::string, std::vector<Path>> by_pair;
  for (const auto& p : all_paths) by_pair[p.source + "->" + path_target(q, p)].push_back(p);

  std::vector<RationalVector> rows;
  for (const auto& rel : relations) {
    const Path& first = rel.terms.front().path;
    std::string s = first.source;
    std::string t = path_target(q, first);
    std::size_t rel_max = 0;
    for (const auto& term : rel.terms) rel_max = std::max(rel_max, term.path.length());
    for (const auto& [key, us] : by_pair) {
      if (key.substr(key.find("->") + 2) != s) continue;
      for (const auto& u : us) {
        if (u.length() + rel_max > work_len) continue;
        for (const auto& [key2, vs] : by_pair) {
          if (key2.substr(0, key2.find("->")) != t) continue;
          for (const auto& v : vs) {
            if (u.length() + v.length() + rel_max > work_len) continue;
            RationalVector row(all_paths.size(), Rational(0));
            for (const auto& term : rel.terms) {
              Path w = compose(q, compose(q, u, term.path), v);
              row[col_of.at(w.key())] += term.coeff;
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

RationalMatrix rows_to_matrix(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

RationalVector relation_vector(const Quiver& q, const Relation& rel,
                               const std::map<std::string, std::size_t>& col_of,
                               std::size_t ncols) {
  RationalVector row(ncols, Rational(0));
  for (const auto& term : rel.terms) row[col_of.at(term.path.key())] += term.coeff;
  return row;
}

bool in_span(const std::vector<RationalVector>& rows, const RationalVector& v) {
  RationalMatrix a = rows_to_matrix(rows, v.size());
  std::vector<RationalVector> ext = rows;
  ext.push_back(v);
  RationalMatrix b = rows_to_matrix(ext, v.size());
  return rank(a) == rank(b);
}

}  // namespace

SystemReport verify_system(const Presentation& c, const SystemOfRelations& r,
                           bool check_minimal, std::size_t max_len) {
  {
    auto diags = validate(c);
    if (!diags.empty()) throw std::runtime_error("invalid presentation: " + diags.front());
  }
  AlgebraBasis basis = AlgebraBasis::compute(c, max_len);

  std::size_t spread = 0;
  auto scan = [&](const std::vector<Relation>& rels) {
    for (const auto& rel : rels) {
      std::size_t lo = rel.terms.front().path.length(), hi = lo;
      for (const auto& t : rel.terms) {
        lo = std::min(lo, t.path.length());
        hi = std::max(hi, t.path.length());
      }
      spread = std::max(spread, hi - lo);
    }
  };
  scan(c.relations);
  scan(r.relations);
  std::size_t work_len = std::min(max_len, basis.nilpotency_degree() + 2 * spread + 2);

  std::vector<Path> all_paths = enumerate_paths(c.quiver, work_len);
  std::map<std::string, std::size_t> col_of;
  for (std::size_t i = 0; i < all_paths.size(); ++i) col_of[all_paths[i].key()] = i;

  SystemReport rep;
  rep.minimal_checked = check_minimal;

  // r subset of I(c)
  bool contained = true;
  for (const auto& rel : r.relations) {
    RationalVector red = basis.reduce_combination(rel.terms);
    if (std::any_of(red.begin(), red.end(), [](const Rational& x) { return x != 0; })) {
      contained = false;
      break;
    }
  }

  std::vector<RationalVector> r_rows = ideal_rows(c.quiver, r.relations, all_paths, work_len);
  bool covers = true;
  for (const auto& rel : c.relations)
    if (!in_span(r_rows, relation_vector(c.quiver, rel, col_of, all_paths.size()))) {
      covers = false;
      break;
    }
  rep.generates = contained && covers;

  if (check_minimal) {
    for (std::size_t skip = 0; skip < r.relations.size() && rep.minimal; ++skip) {
      std::vector<Relation> rest;
      for (std::size_t i = 0; i < r.relations.size(); ++i)
        if (i != skip) rest.push_back(r.relations[i]);
      std::vector<RationalVector> rest_rows = ideal_rows(c.quiver, rest, all_paths, work_len);
      if (in_span(rest_rows,
                  relation_vector(c.quiver, r.relations[skip], col_of, all_paths.size())))
        rep.minimal = false;
    }
  }
  return rep;
}

}  // namespace qha
