#include "qha/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace qha {

namespace {

Rational lambda_of(const DiagonalDerivation& d, const std::string& arrow) {
  auto it = d.lambda.find(arrow);
  return it == d.lambda.end() ? Rational(0) : it->second;
}

Rational path_lambda_sum(const DiagonalDerivation& d, const Path& p) {
  Rational s(0);
  for (const auto& a : p.arrows) s += lambda_of(d, a);
  return s;
}

// reduce(prefix . g . suffix) where g replaces position j of path w.
RationalVector substituted_reduce(const AlgebraBasis& b, const Path& w, std::size_t j,
                                  const Path& g) {
  const Quiver& q = b.presentation().quiver;
  const Arrow* repl = q.find_arrow(w.arrows[j]);
  Path prefix{w.source, {w.arrows.begin(), w.arrows.begin() + j}};
  Path suffix{repl->target, {w.arrows.begin() + j + 1, w.arrows.end()}};
  return b.reduce(compose(q, compose(q, prefix, g), suffix));
}

struct Unknowns {
  // arrow name -> (offset, block basis indices)
  std::map<std::string, std::pair<std::size_t, std::vector<std::size_t>>> blocks;
  std::size_t total = 0;
};

Unknowns derivation_unknowns(const AlgebraBasis& b) {
  Unknowns u;
  for (const auto& a : b.presentation().quiver.arrows) {
    std::vector<std::size_t> blk = b.block(a.source, a.target);
    u.blocks[a.name] = {u.total, blk};
    u.total += blk.size();
  }
  return u;
}

}  // namespace

std::vector<DerivationValue> der0_basis(const AlgebraBasis& b) {
  const Presentation& p = b.presentation();
  Unknowns unk = derivation_unknowns(b);

  std::vector<RationalVector> rows;
  for (const auto& rel : p.relations) {
    // one equation per basis coordinate of delta(rel)
    std::vector<RationalVector> eq(b.dimension(), RationalVector(unk.total, Rational(0)));
    for (const auto& term : rel.terms) {
      const Path& w = term.path;
      for (std::size_t j = 0; j < w.arrows.size(); ++j) {
        const auto& [offset, blk] = unk.blocks.at(w.arrows[j]);
        for (std::size_t k = 0; k < blk.size(); ++k) {
          RationalVector red = substituted_reduce(b, w, j, b.basis_paths()[blk[k]]);
          for (std::size_t c = 0; c < red.size(); ++c)
            if (red[c] != 0) eq[c][offset + k] += term.coeff * red[c];
        }
      }
    }
    for (auto& row : eq) rows.push_back(std::move(row));
  }

  RationalMatrix m(rows.size(), unk.total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unk.total; ++c) m.at(r, c) = rows[r][c];

  std::vector<DerivationValue> out;
  for (const auto& v : kernel_basis(m)) {
    DerivationValue d;
    for (const auto& a : p.quiver.arrows) {
      const auto& [offset, blk] = unk.blocks.at(a.name);
      RationalVector img(blk.size());
      for (std::size_t k = 0; k < blk.size(); ++k) img[k] = v[offset + k];
      d.assignment[a.name] = std::move(img);
    }
    out.push_back(std::move(d));
  }
  return out;
}

RationalVector apply_derivation(const AlgebraBasis& b, const DerivationValue& delta,
                                const Path& path) {
  RationalVector out(b.dimension(), Rational(0));
  for (std::size_t j = 0; j < path.arrows.size(); ++j) {
    auto it = delta.assignment.find(path.arrows[j]);
    if (it == delta.assignment.end()) continue;
    const Arrow* a = b.presentation().quiver.find_arrow(path.arrows[j]);
    std::vector<std::size_t> blk = b.block(a->source, a->target);
    for (std::size_t k = 0; k < blk.size(); ++k) {
      if (it->second[k] == 0) continue;
      RationalVector red = substituted_reduce(b, path, j, b.basis_paths()[blk[k]]);
      for (std::size_t c = 0; c < red.size(); ++c) out[c] += it->second[k] * red[c];
    }
  }
  return out;
}

std::size_t int0_dim(const AlgebraBasis& b) {
  const Quiver& q = b.presentation().quiver;
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < b.basis_paths().size(); ++i) {
    const Path& path = b.basis_paths()[i];
    if (path.source == path_target(q, path)) diag.push_back(i);
  }
  std::vector<RationalVector> rows(q.arrows.size() * b.dimension(),
                                   RationalVector(diag.size(), Rational(0)));
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& alpha = q.arrows[ai];
    std::size_t arrow_idx = *b.basis_index(Path{alpha.source, {alpha.name}});
    for (std::size_t k = 0; k < diag.size(); ++k) {
      const Path& c = b.basis_paths()[diag[k]];
      if (c.source == alpha.source) {
        RationalVector v = b.product(diag[k], arrow_idx);
        for (std::size_t coord = 0; coord < v.size(); ++coord)
          rows[ai * b.dimension() + coord][k] += v[coord];
      }
      if (c.source == alpha.target) {
        RationalVector v = b.product(arrow_idx, diag[k]);
        for (std::size_t coord = 0; coord < v.size(); ++coord)
          rows[ai * b.dimension() + coord][k] -= v[coord];
      }
    }
  }
  RationalMatrix m(rows.size(), diag.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < diag.size(); ++c) m.at(r, c) = rows[r][c];
  return rank(m);
}

HH1Report hh1_oracle(const AlgebraBasis& b) {
  HH1Report rep;
  rep.method = HH1Method::oracle;
  rep.dim_der0 = der0_basis(b).size();
  rep.dim_int0 = int0_dim(b);
  rep.hh1_dim = static_cast<long>(rep.dim_der0) - static_cast<long>(rep.dim_int0);
  return rep;
}

HH1Report hh1_schurian(const AlgebraBasis& b) {
  ClassReport cls = classify(b);
  if (!cls.schurian) throw std::runtime_error("not schurian");
  if (!cls.connected) throw std::runtime_error("not connected");
  const Presentation& p = b.presentation();
  const std::vector<Arrow>& arrows = p.quiver.arrows;
  std::map<std::string, std::size_t> arrow_col;
  for (std::size_t i = 0; i < arrows.size(); ++i) arrow_col[arrows[i].name] = i;

  std::vector<RationalVector> rows;
  for (const auto& rel : p.relations) {
    std::vector<RationalVector> eq(b.dimension(), RationalVector(arrows.size(), Rational(0)));
    for (const auto& term : rel.terms) {
      RationalVector red = b.reduce(term.path);
      for (const auto& arrow : term.path.arrows)
        for (std::size_t c = 0; c < red.size(); ++c)
          if (red[c] != 0) eq[c][arrow_col.at(arrow)] += term.coeff * red[c];
    }
    for (auto& row : eq) rows.push_back(std::move(row));
  }
  RationalMatrix m(rows.size(), arrows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < arrows.size(); ++c) m.at(r, c) = rows[r][c];

  HH1Report rep;
  rep.method = HH1Method::schurian;
  rep.dim_der0 = arrows.size() - rank(m);
  rep.dim_int0 = p.quiver.vertices.empty() ? 0 : p.quiver.vertices.size() - 1;
  rep.hh1_dim = static_cast<long>(rep.dim_der0) - static_cast<long>(rep.dim_int0);
  return rep;
}

bool diagonal_derivation_valid(const AlgebraBasis& b, const DiagonalDerivation& delta) {
  for (const auto& rel : b.presentation().relations) {
    RationalVector acc(b.dimension(), Rational(0));
    for (const auto& term : rel.terms) {
      Rational factor = term.coeff * path_lambda_sum(delta, term.path);
      if (factor == 0) continue;
      RationalVector red = b.reduce(term.path);
      for (std::size_t c = 0; c < red.size(); ++c) acc[c] += factor * red[c];
    }
    if (std::any_of(acc.begin(), acc.end(), [](const Rational& x) { return x != 0; }))
      return false;
  }
  return true;
}

DiagonalDerivation extend_derivation(const ExtensionPair& pair,
                                     const DiagonalDerivation& delta_c) {
  DiagonalDerivation out = delta_c;
  for (const auto& [name, idx] : pair.correspondence) {
    const Relation& rel = pair.c_presentation.relations.at(idx);
    Rational sum = path_lambda_sum(delta_c, rel.terms.front().path);
    for (const auto& term : rel.terms)
      if (path_lambda_sum(delta_c, term.path) != sum)
        throw std::runtime_error("ambiguous defining sum for new arrow " + name);
    out.lambda[name] = -sum;
  }
  return out;
}

RationalVector project_new_components(const ExtensionPair& pair,
                                      const DiagonalDerivation& delta_b,
                                      const std::vector<std::string>& reps) {
  RationalVector out;
  for (const auto& name : reps) {
    if (!pair.new_arrows.count(name))
      throw std::invalid_argument("representative not a new arrow: " + name);
    const Relation& rel = pair.c_presentation.relations.at(pair.correspondence.at(name));
    out.push_back(lambda_of(delta_b, name) +
                  path_lambda_sum(delta_b, rel.terms.front().path));
  }
  return out;
}

}  // namespace qha
