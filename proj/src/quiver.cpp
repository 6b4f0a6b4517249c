#include "qha/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace qha {

bool Quiver::has_vertex(const std::string& name) const {
  for (const auto& v : vertices)
    if (v.name == name) return true;
  return false;
}

const Arrow* Quiver::find_arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::string> Quiver::validate() const {
  std::vector<std::string> diags;
  std::set<std::string> vnames;
  for (const auto& v : vertices)
    if (!vnames.insert(v.name).second) diags.push_back("duplicate vertex name: " + v.name);
  std::set<std::string> anames;
  for (const auto& a : arrows) {
    if (!anames.insert(a.name).second) diags.push_back("duplicate arrow name: " + a.name);
    if (!vnames.count(a.source)) diags.push_back("arrow " + a.name + ": unknown source " + a.source);
    if (!vnames.count(a.target)) diags.push_back("arrow " + a.name + ": unknown target " + a.target);
  }
  return diags;
}

std::string Path::key() const {
  std::string k = source + "|";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) k += '.';
    k += arrows[i];
  }
  return k;
}

Path trivial_path(const std::string& vertex) { return Path{vertex, {}}; }

std::string path_target(const Quiver& q, const Path& p) {
  std::string at = p.source;
  for (const auto& name : p.arrows) {
    const Arrow* a = q.find_arrow(name);
    if (!a || a->source != at) throw std::invalid_argument("non-composable path: " + p.key());
    at = a->target;
  }
  return at;
}

bool path_composable(const Quiver& q, const Path& p) {
  std::string at = p.source;
  for (const auto& name : p.arrows) {
    const Arrow* a = q.find_arrow(name);
    if (!a || a->source != at) return false;
    at = a->target;
  }
  return true;
}

Path compose(const Quiver& q, const Path& a, const Path& b) {
  if (path_target(q, a) != b.source) throw std::invalid_argument("compose: endpoints do not match");
  Path p = a;
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.source < b.source;
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (const auto& v : q.vertices) frontier.push_back(trivial_path(v.name));
  all = frontier;
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      std::string end = path_target(q, p);
      for (const auto& a : q.arrows) {
        if (a.source != end) continue;
        Path ext = p;
        ext.arrows.push_back(a.name);
        next.push_back(std::move(ext));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), path_less);
  return all;
}

std::vector<Path> paths_between(const Quiver& q, const std::string& x,
                                const std::string& y, std::size_t max_len) {
  if (!q.has_vertex(x)) throw std::invalid_argument("unknown vertex: " + x);
  if (!q.has_vertex(y)) throw std::invalid_argument("unknown vertex: " + y);
  std::vector<Path> out;
  for (auto& p : enumerate_paths(q, max_len))
    if (p.source == x && path_target(q, p) == y) out.push_back(std::move(p));
  return out;
}

bool underlying_connected(const Quiver& q) {
  if (q.vertices.empty()) return true;
  std::set<std::string> seen{q.vertices.front().name};
  std::deque<std::string> todo{q.vertices.front().name};
  while (!todo.empty()) {
    std::string v = todo.front();
    todo.pop_front();
    for (const auto& a : q.arrows) {
      for (const std::string& w : {a.source == v ? a.target : std::string(),
                                   a.target == v ? a.source : std::string()}) {
        if (!w.empty() && seen.insert(w).second) todo.push_back(w);
      }
    }
  }
  return seen.size() == q.vertices.size();
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm.
  std::map<std::string, std::size_t> indeg;
  for (const auto& v : q.vertices) indeg[v.name] = 0;
  for (const auto& a : q.arrows) ++indeg[a.target];
  std::deque<std::string> todo;
  for (auto& [v, d] : indeg)
    if (d == 0) todo.push_back(v);
  std::size_t removed = 0;
  while (!todo.empty()) {
    std::string v = todo.front();
    todo.pop_front();
    ++removed;
    for (const auto& a : q.arrows)
      if (a.source == v && --indeg[a.target] == 0) todo.push_back(a.target);
  }
  return removed == q.vertices.size();
}

static std::size_t component_count(const Quiver& q) {
  std::set<std::string> unseen;
  for (const auto& v : q.vertices) unseen.insert(v.name);
  std::size_t comps = 0;
  while (!unseen.empty()) {
    ++comps;
    std::deque<std::string> todo{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!todo.empty()) {
      std::string v = todo.front();
      todo.pop_front();
      for (const auto& a : q.arrows) {
        for (const std::string& w : {a.source == v ? a.target : std::string(),
                                     a.target == v ? a.source : std::string()}) {
          if (!w.empty() && unseen.erase(w)) todo.push_back(w);
        }
      }
    }
  }
  return comps;
}

static bool reachable(const Quiver& q, const std::string& from, const std::string& to,
                      const std::string& excluded_arrow) {
  std::set<std::string> seen{from};
  std::deque<std::string> todo{from};
  while (!todo.empty()) {
    std::string v = todo.front();
    todo.pop_front();
    if (v == to) return true;
    for (const auto& a : q.arrows)
      if (a.name != excluded_arrow && a.source == v && seen.insert(a.target).second)
        todo.push_back(a.target);
  }
  return false;
}

ShapeReport shape_report(const Quiver& q) {
  ShapeReport rep;
  rep.acyclic = is_acyclic(q);
  rep.connected = underlying_connected(q);
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[i].source == q.arrows[j].source && q.arrows[i].target == q.arrows[j].target)
        rep.double_arrow_pairs.emplace_back(q.arrows[i].name, q.arrows[j].name);
  for (const auto& alpha : q.arrows) {
    // bypass: a parallel directed path of length >= 2 not using alpha
    bool found = false;
    for (const auto& b : q.arrows) {
      if (b.name == alpha.name || b.source != alpha.source) continue;
      for (const auto& c : q.arrows) {
        if (c.name == alpha.name || c.source != b.target) continue;
        if (c.target == alpha.target || reachable(q, c.target, alpha.target, alpha.name)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) rep.bypass_arrows.push_back(alpha.name);
  }
  rep.unoriented_cycle_count =
      q.arrows.size() + component_count(q) - q.vertices.size();
  return rep;
}

std::vector<std::string> core_arrows(const Quiver& q) {
  std::set<std::string> live_v;
  for (const auto& v : q.vertices) live_v.insert(v.name);
  std::set<std::string> live_a;
  for (const auto& a : q.arrows) live_a.insert(a.name);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : q.vertices) {
      if (!live_v.count(v.name)) continue;
      std::size_t deg = 0;
      for (const auto& a : q.arrows)
        if (live_a.count(a.name)) deg += (a.source == v.name) + (a.target == v.name);
      if (deg <= 1) {
        live_v.erase(v.name);
        for (const auto& a : q.arrows)
          if (a.source == v.name || a.target == v.name) live_a.erase(a.name);
        changed = true;
      }
    }
  }
  std::vector<std::string> out;
  for (const auto& a : q.arrows)
    if (live_a.count(a.name)) out.push_back(a.name);
  return out;
}

namespace {

// BFS state for connecting_walk_exists: the trailing maximal directed run
// (underlying directed path) and its traversal direction. The current
// vertex and the last walk step are both derivable from it.
struct WalkState {
  Path run;
  StepDir dir;
};

}  // namespace

bool connecting_walk_exists(const Quiver& q, const WalkQuery& query) {
  if (query.allow_empty && query.from == query.to) return true;

  auto arrow_allowed = [&](const Arrow& a) { return !query.arrow_ok || query.arrow_ok(a.name); };

  auto last_step_of = [](const WalkState& s) -> WalkStep {
    if (s.dir == StepDir::forward) return {s.run.arrows.back(), StepDir::forward};
    return {s.run.arrows.front(), StepDir::inverse};
  };
  auto vertex_of = [&](const WalkState& s) {
    return s.dir == StepDir::forward ? path_target(q, s.run) : s.run.source;
  };
  auto accepting = [&](const WalkState& s) {
    if (vertex_of(s) != query.to) return false;
    return !query.forbidden_last || !(last_step_of(s) == *query.forbidden_last);
  };

  std::deque<WalkState> todo;
  std::set<std::pair<int, std::string>> seen;

  auto push = [&](WalkState s) {
    auto k = std::make_pair(s.dir == StepDir::forward ? 0 : 1, s.run.key());
    if (!seen.insert(k).second) return false;
    bool accept = accepting(s);
    todo.push_back(std::move(s));
    return accept;
  };

  // initial steps
  for (const auto& a : q.arrows) {
    if (!arrow_allowed(a)) continue;
    if (a.source == query.from) {
      WalkStep step{a.name, StepDir::forward};
      if (!(query.forbidden_first && step == *query.forbidden_first)) {
        Path run{a.source, {a.name}};
        if (!query.run_ok || query.run_ok(run))
          if (push({run, StepDir::forward})) return true;
      }
    }
    if (a.target == query.from) {
      WalkStep step{a.name, StepDir::inverse};
      if (!(query.forbidden_first && step == *query.forbidden_first)) {
        Path run{a.source, {a.name}};
        if (!query.run_ok || query.run_ok(run))
          if (push({run, StepDir::inverse})) return true;
      }
    }
  }

  while (!todo.empty()) {
    WalkState cur = todo.front();
    todo.pop_front();
    std::string v = vertex_of(cur);
    WalkStep last = last_step_of(cur);
    for (const auto& a : q.arrows) {
      if (!arrow_allowed(a)) continue;
      if (a.source == v && !(last == WalkStep{a.name, StepDir::inverse})) {
        Path run = cur.dir == StepDir::forward ? cur.run : Path{a.source, {}};
        run.arrows.push_back(a.name);
        if (!query.run_ok || query.run_ok(run))
          if (push({run, StepDir::forward})) return true;
      }
      if (a.target == v && !(last == WalkStep{a.name, StepDir::forward})) {
        Path run;
        if (cur.dir == StepDir::inverse) {
          run.source = a.source;
          run.arrows.push_back(a.name);
          run.arrows.insert(run.arrows.end(), cur.run.arrows.begin(), cur.run.arrows.end());
        } else {
          run = Path{a.source, {a.name}};
        }
        if (!query.run_ok || query.run_ok(run))
          if (push({run, StepDir::inverse})) return true;
      }
    }
  }
  return false;
}

}  // namespace qha
