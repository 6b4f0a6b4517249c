#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qha/linalg.hpp"
#include "qha/quiver.hpp"

namespace qha {

struct RelationTerm {
  Rational coeff;
  Path path;
  bool operator==(const RelationTerm&) const = default;
};

// A linear combination of pairwise distinct parallel paths of length >= 2
// with nonzero coefficients. One term: monomial; two terms: binomial.
struct Relation {
  std::vector<RelationTerm> terms;
  bool monomial() const { return terms.size() == 1; }
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  bool operator==(const Presentation&) const = default;
};

// Empty iff the presentation is well-formed (names resolve, terms parallel,
// lengths >= 2, coefficients nonzero, term paths distinct).
std::vector<std::string> validate(const Presentation& p);

struct ClassReport {
  bool admissible = false;
  bool finite_dimensional = false;
  std::size_t dimension = 0;
  bool schurian = false;
  bool monomial = false;
  bool gentle = false;
  bool triangular = false;
  bool connected = false;
};

enum class GentleTiltedType { typeA, typeAtilde, notApplicable };

// Certified finite basis of path cosets of kQ/I with a linear,
// multiplicative reduction map from paths to basis coordinates.
class AlgebraBasis {
 public:
  // Throws std::runtime_error if the quotient cannot be certified
  // finite-dimensional within max_len.
  static AlgebraBasis compute(const Presentation& p, std::size_t max_len = 24);

  const Presentation& presentation() const { return pres_; }
  const std::vector<Path>& basis_paths() const { return basis_paths_; }
  std::size_t dimension() const { return basis_paths_.size(); }
  std::size_t nilpotency_degree() const { return nilpotency_degree_; }

  // Coordinates of the coset of p in basis_paths(). Defined for every
  // composable path (paths of length >= nilpotency_degree reduce to zero).
  RationalVector reduce(const Path& p) const;

  // reduce() of a linear combination of paths.
  RationalVector reduce_combination(const std::vector<RelationTerm>& terms) const;

  bool is_zero(const Path& p) const;

  // Product of two basis cosets, as coordinates in basis_paths().
  RationalVector product(std::size_t i, std::size_t j) const;

  // Basis indices whose path goes from x to y.
  std::vector<std::size_t> block(const std::string& x, const std::string& y) const;

  std::optional<std::size_t> basis_index(const Path& p) const;

 private:
  Presentation pres_;
  std::vector<Path> basis_paths_;
  std::size_t nilpotency_degree_ = 0;
  std::map<std::string, RationalVector> reduction_;  // path key -> coordinates
  std::map<std::string, std::size_t> basis_index_;
  std::map<std::string, std::string> target_of_;  // vertex cache per basis path
};

ClassReport classify(const AlgebraBasis& b);

// Type of a gentle presentation as a tilted algebra: a gentle tree without
// double zeros, or a one-cycle gentle quiver whose cycle has no double
// zeros and whose attached arrows all enter or all leave it.
GentleTiltedType gentle_tilted_type(const Presentation& p);

// Dimension of the center, as a kernel over the diagonal part of the basis.
std::size_t center_dim(const AlgebraBasis& b);

// Tits form sum(v_x^2) - sum_{arrows} v_s v_t + sum_{relations} v_s v_t.
Rational tits_form(const Presentation& p, const std::vector<long>& v);

// True iff the path contains a generating relation path as a contiguous
// subpath (only meaningful for monomial presentations).
bool contains_relation_subpath(const Presentation& p, const Path& path);

// Double-zero walk test used by gentle type detection: a walk r1 w' r2
// with r1, r2 generating length-2 relation paths and w' a reduced walk
// from the target of r1 to the source of r2 whose maximal directed runs
// are all free of relation subpaths (w' may retrace into r1 or r2, which
// is how overlapping relations qualify). arrow_ok restricts the arrows
// of w'.
bool has_double_zero(const Presentation& p,
                     const std::function<bool(const std::string&)>& arrow_ok);

}  // namespace qha
