#include <doctest.h>

#include "qha/corpus.hpp"
#include "qha/quiver.hpp"

using namespace qha;

namespace {

Quiver triangle() {
  Quiver q;
  q.vertices = {{"1"}, {"2"}, {"3"}};
  q.arrows = {{"f", "1", "3"}, {"g", "1", "2"}, {"h", "2", "3"}};
  return q;
}

Quiver cycle3() {
  Quiver q;
  q.vertices = {{"1"}, {"2"}, {"3"}};
  q.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}};
  return q;
}

}  // namespace

TEST_CASE("paths: composition, keys, ordering") {
  Quiver q = triangle();
  Path g{"1", {"g"}}, h{"2", {"h"}};
  CHECK(path_target(q, g) == "2");
  CHECK(path_composable(q, Path{"1", {"g", "h"}}));
  CHECK_FALSE(path_composable(q, Path{"1", {"h"}}));

  Path gh = compose(q, g, h);
  CHECK(gh == Path{"1", {"g", "h"}});
  CHECK(gh.key() == "1|g.h");
  CHECK(trivial_path("2").key() == "2|");

  CHECK(path_less(trivial_path("1"), g));
  CHECK(path_less(Path{"1", {"f"}}, gh));
}

TEST_CASE("path enumeration") {
  Quiver q = triangle();
  // 3 trivial + 3 arrows + g.h
  CHECK(enumerate_paths(q, 5).size() == 7);
  CHECK(paths_between(q, "1", "3", 5).size() == 2);
  CHECK_THROWS(paths_between(q, "1", "9", 5));

  // cyclic quiver: enumeration is truncated by max_len
  CHECK(enumerate_paths(cycle3(), 1).size() == 6);
  CHECK(enumerate_paths(cycle3(), 2).size() == 9);
}

TEST_CASE("shape report") {
  ShapeReport kr = shape_report(kronecker().quiver);
  REQUIRE(kr.double_arrow_pairs.size() == 1);
  CHECK(kr.unoriented_cycle_count == 1);
  CHECK(kr.connected);
  CHECK(kr.acyclic);

  ShapeReport tr = shape_report(triangle());
  CHECK(tr.double_arrow_pairs.empty());
  CHECK(tr.bypass_arrows == std::vector<std::string>{"f"});
  CHECK(tr.unoriented_cycle_count == 1);

  ShapeReport cy = shape_report(cycle3());
  CHECK_FALSE(cy.acyclic);
  CHECK(cy.bypass_arrows.empty());
  CHECK(cy.unoriented_cycle_count == 1);
}

TEST_CASE("core arrows strip pendant trees") {
  Quiver q = cycle3();
  q.vertices.push_back({"4"});
  q.arrows.push_back({"d", "1", "4"});
  auto core = core_arrows(q);
  std::sort(core.begin(), core.end());
  CHECK(core == std::vector<std::string>{"a", "b", "c"});
  CHECK(core_arrows(triangle()).size() == 3);
  CHECK(core_arrows(cd(3).quiver).empty());
}

TEST_CASE("reduced walk search") {
  Quiver q = triangle();
  WalkQuery query;
  query.from = "2";
  query.to = "3";
  query.run_ok = [](const Path&) { return true; };
  query.arrow_ok = [](const std::string&) { return true; };
  CHECK(connecting_walk_exists(q, query));

  // empty walk accepted iff allowed
  query.to = "2";
  CHECK(connecting_walk_exists(q, query));
  query.allow_empty = false;
  CHECK(connecting_walk_exists(q, query));  // h, f^{-1}, g
}

TEST_CASE("walk search respects run and step restrictions") {
  Quiver q = cd(1).quiver;  // s1 -> m1 -> t1
  WalkQuery query;
  query.from = "s1";
  query.to = "t1";
  query.arrow_ok = [](const std::string&) { return true; };
  query.run_ok = [](const Path& run) { return run.length() <= 1; };  // forbid a1.b1 run
  CHECK_FALSE(connecting_walk_exists(q, query));
  query.run_ok = [](const Path&) { return true; };
  CHECK(connecting_walk_exists(q, query));
  query.forbidden_first = WalkStep{"a1", StepDir::forward};
  CHECK_FALSE(connecting_walk_exists(q, query));
}
