#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qha {

struct Vertex {
  std::string name;
  bool operator==(const Vertex&) const = default;
};

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;

  bool has_vertex(const std::string& name) const;
  const Arrow* find_arrow(const std::string& name) const;

  // Diagnostics for dangling endpoints and duplicate names; empty iff valid.
  std::vector<std::string> validate() const;

  bool operator==(const Quiver&) const = default;
};

// A directed path: source vertex plus a composable arrow sequence.
// An empty sequence is the trivial path e_source.
struct Path {
  std::string source;
  std::vector<std::string> arrows;

  bool trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }

  // Stable map key ("x|" for e_x, "x|a.b" for a.b at x).
  std::string key() const;

  bool operator==(const Path&) const = default;
};

Path trivial_path(const std::string& vertex);

// Target vertex of p in q; requires p composable in q.
std::string path_target(const Quiver& q, const Path& p);

bool path_composable(const Quiver& q, const Path& p);

// Concatenation; requires target(a) == source(b).
Path compose(const Quiver& q, const Path& a, const Path& b);

// Order used everywhere: by length, then lexicographically
// (trivial paths by source name, others by arrow-name sequence).
bool path_less(const Path& a, const Path& b);

enum class StepDir { forward, inverse };

struct WalkStep {
  std::string arrow;
  StepDir dir;
  bool operator==(const WalkStep&) const = default;
};

// A reduced walk: composition of arrows and formal inverses with no step
// immediately undone by its own inverse.
struct Walk {
  std::vector<WalkStep> steps;
  bool operator==(const Walk&) const = default;
};

struct ShapeReport {
  bool acyclic = false;
  bool connected = false;
  std::vector<std::pair<std::string, std::string>> double_arrow_pairs;
  std::vector<std::string> bypass_arrows;
  std::size_t unoriented_cycle_count = 0;
};

// All directed paths of length <= max_len, one trivial path per vertex,
// ordered by path_less.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

// Paths from x to y of length <= max_len; throws on unknown vertex names.
std::vector<Path> paths_between(const Quiver& q, const std::string& x,
                                const std::string& y, std::size_t max_len);

ShapeReport shape_report(const Quiver& q);

// Is the underlying (undirected) graph connected?
bool underlying_connected(const Quiver& q);

bool is_acyclic(const Quiver& q);

// Arrows lying on the 2-core of the underlying graph. For a quiver with
// unoriented_cycle_count == 1 this is exactly the unique cycle.
std::vector<std::string> core_arrows(const Quiver& q);

// Reduced-walk search between two vertices.
//
// Every maximal directed run of the walk (a run of consecutive forward
// steps, or the underlying directed path of a run of inverse steps) must
// satisfy run_ok. Steps are restricted to arrows passing arrow_ok.
// forbidden_first / forbidden_last exclude a specific first or last step,
// which is how callers keep the surrounding walk reduced.
struct WalkQuery {
  std::string from;
  std::string to;
  std::function<bool(const Path&)> run_ok;
  std::function<bool(const std::string&)> arrow_ok;  // by arrow name
  std::optional<WalkStep> forbidden_first;
  std::optional<WalkStep> forbidden_last;
  bool allow_empty = true;
};

bool connecting_walk_exists(const Quiver& q, const WalkQuery& query);

}  // namespace qha
