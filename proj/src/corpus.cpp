#include "qha/corpus.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace qha {

namespace {

Relation mono(const std::string& src, const std::string& a, const std::string& b) {
  return Relation{{RelationTerm{Rational(1), Path{src, {a, b}}}}};
}

}  // namespace

Presentation kronecker() {
  Presentation p;
  p.quiver.vertices = {{"1"}, {"2"}};
  p.quiver.arrows = {{"a", "1", "2"}, {"b", "1", "2"}};
  return p;
}

Presentation triangle_bypass() {
  Presentation p;
  p.quiver.vertices = {{"1"}, {"2"}, {"3"}};
  p.quiver.arrows = {{"f", "1", "3"}, {"g", "1", "2"}, {"h", "2", "3"}};
  return p;
}

Presentation cd(std::size_t d) {
  if (d < 1) throw std::invalid_argument("cd: d must be >= 1");
  Presentation p;
  // s_j carries a_{2j-1} and a_{2j}; b_i runs m_i -> t_{ceil((i+1)/2)};
  // consecutive b's share targets, giving a zigzag tree on 2d+1 vertices.
  for (std::size_t j = 1; j <= (d + 1) / 2; ++j)
    p.quiver.vertices.push_back({"s" + std::to_string(j)});
  for (std::size_t i = 1; i <= d; ++i)
    p.quiver.vertices.push_back({"m" + std::to_string(i)});
  for (std::size_t j = 1; j <= d / 2 + 1; ++j)
    p.quiver.vertices.push_back({"t" + std::to_string(j)});
  for (std::size_t i = 1; i <= d; ++i) {
    std::string si = "s" + std::to_string((i + 1) / 2);
    std::string mi = "m" + std::to_string(i);
    std::string ti = "t" + std::to_string((i + 2) / 2);
    p.quiver.arrows.push_back({"a" + std::to_string(i), si, mi});
    p.quiver.arrows.push_back({"b" + std::to_string(i), mi, ti});
    p.relations.push_back(mono(si, "a" + std::to_string(i), "b" + std::to_string(i)));
  }
  return p;
}

Presentation tilde_a_example() {
  Presentation p;
  p.quiver.vertices = {{"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"6"}};
  p.quiver.arrows = {{"be", "2", "1"},  {"ga", "1", "3"},  {"al", "4", "2"},
                     {"alp", "4", "5"}, {"bep", "5", "6"}, {"gap", "6", "3"}};
  p.relations.push_back(mono("4", "al", "be"));
  p.relations.push_back(mono("4", "alp", "bep"));
  return p;
}

Presentation random_gentle_tree(std::size_t vertices, std::uint64_t seed) {
  if (vertices < 2) throw std::invalid_argument("random_gentle_tree: need >= 2 vertices");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };

  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > 10000)
      throw std::runtime_error("random_gentle_tree: no admissible draw found");
    Presentation p;
    std::vector<std::size_t> out_deg(vertices, 0), in_deg(vertices, 0);
    for (std::size_t i = 0; i < vertices; ++i)
      p.quiver.vertices.push_back({"v" + std::to_string(i + 1)});
    bool ok = true;
    for (std::size_t i = 1; i < vertices && ok; ++i) {
      // attach vertex i to a random earlier vertex, in a random direction,
      // respecting the two-in/two-out gentle degree bound
      std::size_t tries = 0;
      for (;; ++tries) {
        if (tries > 50) {
          ok = false;
          break;
        }
        std::size_t u = pick(i);
        bool outgoing = pick(2) == 0;
        std::size_t src = outgoing ? u : i;
        std::size_t tgt = outgoing ? i : u;
        if (out_deg[src] >= 2 || in_deg[tgt] >= 2) continue;
        ++out_deg[src];
        ++in_deg[tgt];
        p.quiver.arrows.push_back({"e" + std::to_string(i),
                                   p.quiver.vertices[src].name,
                                   p.quiver.vertices[tgt].name});
        break;
      }
    }
    if (!ok) continue;

    // relations through each vertex, respecting the unique-zero and
    // unique-nonzero continuation conditions
    for (const auto& v : p.quiver.vertices) {
      std::vector<const Arrow*> in, out;
      for (const auto& a : p.quiver.arrows) {
        if (a.target == v.name) in.push_back(&a);
        if (a.source == v.name) out.push_back(&a);
      }
      if (in.empty() || out.empty()) continue;
      auto bind = [&](const Arrow* b, const Arrow* g) {
        p.relations.push_back(mono(b->source, b->name, g->name));
      };
      if (in.size() == 1 && out.size() == 1) {
        if (pick(2) == 0) bind(in[0], out[0]);
      } else if (in.size() == 2 && out.size() == 1) {
        bind(in[pick(2)], out[0]);
      } else if (in.size() == 1 && out.size() == 2) {
        bind(in[0], out[pick(2)]);
      } else {
        std::size_t k = pick(2);
        bind(in[0], out[k]);
        bind(in[1], out[1 - k]);
      }
    }

    if (gentle_tilted_type(p) == GentleTiltedType::typeA) return p;
  }
}

}  // namespace qha
