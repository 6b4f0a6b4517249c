#include <doctest.h>

#include "qha/corpus.hpp"
#include "qha/presentation.hpp"

using namespace qha;

namespace {

Relation mono(const std::string& src, std::vector<std::string> arrows) {
  return Relation{{RelationTerm{Rational(1), Path{src, std::move(arrows)}}}};
}

Presentation bound_3cycle() {
  Presentation p;
  p.quiver.vertices = {{"1"}, {"2"}, {"3"}};
  p.quiver.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}};
  p.relations = {mono("1", {"a", "b"}), mono("2", {"b", "c"}), mono("3", {"c", "a"})};
  return p;
}

// commutative square bound by a.b - c.d
Presentation binomial_square() {
  Presentation p;
  p.quiver.vertices = {{"1"}, {"2"}, {"3"}, {"4"}};
  p.quiver.arrows = {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}};
  p.relations = {Relation{{RelationTerm{Rational(1), Path{"1", {"a", "b"}}},
                           RelationTerm{Rational(-1), Path{"1", {"c", "d"}}}}}};
  return p;
}

Presentation loop_squared() {
  Presentation p;
  p.quiver.vertices = {{"1"}};
  p.quiver.arrows = {{"l", "1", "1"}};
  p.relations = {mono("1", {"l", "l"})};
  return p;
}

}  // namespace

TEST_CASE("presentation validation") {
  Presentation p = bound_3cycle();
  CHECK(validate(p).empty());

  p.relations.push_back(mono("1", {"a"}));
  auto diags = validate(p);
  REQUIRE_FALSE(diags.empty());
  CHECK(diags.front().find("length < 2") != std::string::npos);

  Presentation q = binomial_square();
  q.relations[0].terms[1].path = Path{"2", {"b"}};
  CHECK_FALSE(validate(q).empty());
}

TEST_CASE("basis of a monomial algebra") {
  AlgebraBasis b = AlgebraBasis::compute(bound_3cycle());
  CHECK(b.dimension() == 6);  // 3 trivial + 3 arrows
  CHECK(b.nilpotency_degree() == 2);
  CHECK(b.is_zero(Path{"1", {"a", "b"}}));
  CHECK_FALSE(b.is_zero(Path{"1", {"a"}}));

  // unbound acyclic quiver: all paths survive
  AlgebraBasis k = AlgebraBasis::compute(kronecker());
  CHECK(k.dimension() == 4);
  CHECK(k.nilpotency_degree() == 2);
}

TEST_CASE("basis via the general truncated-span route") {
  AlgebraBasis b = AlgebraBasis::compute(binomial_square());
  CHECK(b.dimension() == 9);  // 4 trivial + 4 arrows + one length-2 class
  RationalVector ab = b.reduce(Path{"1", {"a", "b"}});
  RationalVector cdv = b.reduce(Path{"1", {"c", "d"}});
  CHECK(ab == cdv);
  std::size_t nonzero = 0;
  for (const auto& x : ab) nonzero += x != 0;
  CHECK(nonzero == 1);
}

TEST_CASE("non-admissible input is rejected") {
  Presentation p;
  p.quiver.vertices = {{"1"}};
  p.quiver.arrows = {{"l", "1", "1"}};  // free loop: infinite dimensional
  CHECK_THROWS(AlgebraBasis::compute(p, 12));
}

TEST_CASE("classification flags") {
  ClassReport kr = classify(AlgebraBasis::compute(kronecker()));
  CHECK(kr.admissible);
  CHECK(kr.finite_dimensional);
  CHECK_FALSE(kr.schurian);
  CHECK(kr.monomial);
  CHECK(kr.triangular);
  CHECK(kr.connected);

  ClassReport c3 = classify(AlgebraBasis::compute(bound_3cycle()));
  CHECK(c3.schurian);
  CHECK(c3.gentle);
  CHECK_FALSE(c3.triangular);

  ClassReport sq = classify(AlgebraBasis::compute(binomial_square()));
  CHECK(sq.schurian);
  CHECK_FALSE(sq.monomial);
}

TEST_CASE("multiplicativity of the reduction map") {
  AlgebraBasis b = AlgebraBasis::compute(binomial_square());
  const auto& paths = b.basis_paths();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (path_target(b.presentation().quiver, paths[i]) != paths[j].source) continue;
      Path prod = compose(b.presentation().quiver, paths[i], paths[j]);
      CHECK(b.product(i, j) == b.reduce(prod));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("center dimension") {
  CHECK(center_dim(AlgebraBasis::compute(bound_3cycle())) == 1);
  CHECK(center_dim(AlgebraBasis::compute(kronecker())) == 1);
  CHECK(center_dim(AlgebraBasis::compute(loop_squared())) == 2);
}

TEST_CASE("tits form") {
  // two vertices joined by d disjoint length-2 zero paths: value 2 - d on (1,...,1,-1,...)
  for (long d = 3; d <= 5; ++d) {
    Presentation p;
    p.quiver.vertices = {{"p"}, {"q"}};
    std::vector<long> v = {1, -1};
    for (long i = 0; i < d; ++i) {
      std::string m = "m" + std::to_string(i);
      p.quiver.vertices.push_back({m});
      p.quiver.arrows.push_back({"x" + std::to_string(i), "p", m});
      p.quiver.arrows.push_back({"y" + std::to_string(i), m, "q"});
      p.relations.push_back(mono("p", {"x" + std::to_string(i), "y" + std::to_string(i)}));
      v.push_back(0);
    }
    CHECK(tits_form(p, v) == Rational(2 - d));
  }
  CHECK_THROWS(tits_form(kronecker(), {1}));
}

TEST_CASE("gentle tilted type detection") {
  CHECK(gentle_tilted_type(cd(1)) == GentleTiltedType::typeA);
  CHECK(gentle_tilted_type(cd(4)) == GentleTiltedType::typeA);
  CHECK(gentle_tilted_type(tilde_a_example()) == GentleTiltedType::typeAtilde);
  CHECK(gentle_tilted_type(kronecker()) == GentleTiltedType::typeAtilde);
  CHECK(gentle_tilted_type(binomial_square()) == GentleTiltedType::notApplicable);

  // consecutive zero relations around a trivial nonzero walk: a double zero
  Presentation dz;
  dz.quiver.vertices = {{"1"}, {"2"}, {"3"}, {"4"}, {"5"}};
  dz.quiver.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}, {"d", "4", "5"}};
  dz.relations = {mono("1", {"a", "b"}), mono("3", {"c", "d"})};
  CHECK(has_double_zero(dz, [](const std::string&) { return true; }));
  CHECK(gentle_tilted_type(dz) == GentleTiltedType::notApplicable);

  // overlapping consecutive relations a.b, b.c: the walk retraces b
  Presentation ov;
  ov.quiver.vertices = {{"1"}, {"2"}, {"3"}, {"4"}};
  ov.quiver.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}};
  ov.relations = {mono("1", {"a", "b"}), mono("2", {"b", "c"})};
  CHECK(has_double_zero(ov, nullptr));
  CHECK(gentle_tilted_type(ov) == GentleTiltedType::notApplicable);
}
