#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qha/presentation.hpp"

namespace qha {

// An ordered generating set of the ideal; indices identify relations and
// label the new arrows of the relation-extension.
struct SystemOfRelations {
  std::vector<Relation> relations;
};

// A tilted presentation C together with its relation-extension B, the
// old/new arrow tagging and the new-arrow <-> relation correspondence.
struct ExtensionPair {
  Presentation c_presentation;
  Presentation b_presentation;
  std::set<std::string> new_arrows;
  std::map<std::string, std::size_t> correspondence;  // new arrow -> relation index in C
};

struct RelextQuiver {
  Quiver quiver;
  std::set<std::string> new_arrows;
  std::map<std::string, std::size_t> correspondence;
};

// Quiver of the relation-extension: same vertices, old arrows, and one new
// arrow t(rho) -> s(rho) per relation rho of the system.
RelextQuiver relext_quiver(const Presentation& c, const SystemOfRelations& r);

// Full relation-extension of a gentle tilted presentation: each relation
// a.b closes a 3-cycle with its new arrow n, bound by a.b, b.n, n.a.
// Throws std::runtime_error unless c is gentle of type A or A-tilde.
ExtensionPair auto_relext_gentle(const Presentation& c);

// ExtensionPair invariants plus the structural walk condition: no walk
// new-arrow . (nonzero all-old walk) . new-arrow may exist in B.
std::vector<std::string> validate_pair(const ExtensionPair& pair);

struct SystemReport {
  bool generates = false;
  bool minimal = true;  // meaningful only when minimality was checked
  bool minimal_checked = false;
};

SystemReport verify_system(const Presentation& c, const SystemOfRelations& r,
                           bool check_minimal, std::size_t max_len = 24);

}  // namespace qha
