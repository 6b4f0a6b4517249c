#pragma once

#include <cstdint>

#include "qha/presentation.hpp"

namespace qha {

// Two vertices joined by a double arrow; no relations.
Presentation kronecker();

// Hereditary triangle: an arrow with a parallel length-2 path.
Presentation triangle_bypass();

// Zigzag tree on 2d+1 vertices bound by d disjoint length-2 relations
// a_i.b_i; gentle tilted of type A for every d >= 1.
Presentation cd(std::size_t d);

// Six-vertex gentle presentation of type A-tilde bound by al.be and
// alp.bep; its relation-extension is schurian with two new arrows.
Presentation tilde_a_example();

// Seeded random gentle tree presentation without double zeros (type A
// certified); deterministic for a given (vertices, seed).
Presentation random_gentle_tree(std::size_t vertices, std::uint64_t seed);

}  // namespace qha
