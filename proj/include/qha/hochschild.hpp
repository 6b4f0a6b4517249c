#pragma once

#include <map>
#include <string>
#include <vector>

#include "qha/presentation.hpp"
#include "qha/relext.hpp"

namespace qha {

// A normalized derivation, stored by its value on the arrows: coordinates
// of delta(alpha) in the e_{s(alpha)} B e_{t(alpha)} block of the basis.
struct DerivationValue {
  std::map<std::string, RationalVector> assignment;  // arrow -> block coordinates
};

// Normalized derivation of a schurian algebra: delta(alpha) = lambda_alpha alpha.
struct DiagonalDerivation {
  std::map<std::string, Rational> lambda;
};

enum class HH1Method { oracle, schurian };

struct HH1Report {
  std::size_t dim_der0 = 0;
  std::size_t dim_int0 = 0;
  long hh1_dim = 0;
  HH1Method method = HH1Method::oracle;
};

// Basis of the space of normalized derivations: arrow assignments whose
// Leibniz extension annihilates every generating relation.
std::vector<DerivationValue> der0_basis(const AlgebraBasis& b);

// Rank of a |-> (a.alpha - alpha.a) over the diagonal part of the basis.
std::size_t int0_dim(const AlgebraBasis& b);

HH1Report hh1_oracle(const AlgebraBasis& b);

// Fast path for schurian connected algebras: one scalar per arrow, one
// linear constraint per binomial relation, dim Int0 = |Q0| - 1.
// Throws std::runtime_error on precondition failure.
HH1Report hh1_schurian(const AlgebraBasis& b);

// Value of delta on a path by the Leibniz rule, as basis coordinates in
// the block of the path.
RationalVector apply_derivation(const AlgebraBasis& b, const DerivationValue& delta,
                                const Path& path);

// Does the diagonal derivation annihilate every generating relation of b?
bool diagonal_derivation_valid(const AlgebraBasis& b, const DiagonalDerivation& delta);

// The lift along zeta: old arrows keep lambda, each new arrow alpha gets
// -sum(lambda_{beta_i}) over a path of its defining relation in C.
// Throws if a binomial defining relation has inconsistent term sums.
DiagonalDerivation extend_derivation(const ExtensionPair& pair,
                                     const DiagonalDerivation& delta_c);

// The phi components (lambda_alpha + sum lambda_{beta_i})_{alpha in reps},
// which vanish exactly on the image of the lift.
RationalVector project_new_components(const ExtensionPair& pair,
                                      const DiagonalDerivation& delta_b,
                                      const std::vector<std::string>& reps);

}  // namespace qha
