#include <doctest.h>

#include "qha/corpus.hpp"

using namespace qha;

TEST_CASE("fixed fixtures") {
  Presentation k = kronecker();
  CHECK(k.quiver.vertices.size() == 2);
  CHECK(k.quiver.arrows.size() == 2);
  CHECK(k.relations.empty());
  CHECK(validate(k).empty());

  Presentation t = triangle_bypass();
  CHECK(t.quiver.arrows.size() == 3);
  CHECK(validate(t).empty());

  Presentation ta = tilde_a_example();
  CHECK(ta.quiver.vertices.size() == 6);
  CHECK(ta.quiver.arrows.size() == 6);
  CHECK(ta.relations.size() == 2);
  CHECK(validate(ta).empty());
}

TEST_CASE("zigzag family") {
  CHECK_THROWS(cd(0));
  Presentation c1 = cd(1);
  CHECK(c1.quiver.vertices.size() == 3);
  CHECK(c1.quiver.arrows.size() == 2);
  CHECK(c1.relations.size() == 1);

  for (std::size_t d = 1; d <= 6; ++d) {
    Presentation c = cd(d);
    CHECK(validate(c).empty());
    CHECK(c.quiver.vertices.size() == 2 * d + 1);
    CHECK(c.quiver.arrows.size() == 2 * d);
    CHECK(c.relations.size() == d);
    CHECK(gentle_tilted_type(c) == GentleTiltedType::typeA);
  }
}

TEST_CASE("random gentle trees") {
  CHECK_THROWS(random_gentle_tree(1, 0));
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    Presentation p = random_gentle_tree(7, seed);
    CHECK(validate(p).empty());
    CHECK(p.quiver.vertices.size() == 7);
    CHECK(p.quiver.arrows.size() == 6);
    CHECK(gentle_tilted_type(p) == GentleTiltedType::typeA);
    CHECK(p == random_gentle_tree(7, seed));  // deterministic
  }
}
