#ifndef SPINDLE_POLY_HPP
#define SPINDLE_POLY_HPP

#include <optional>
#include <utility>

#include "spindle/digraph.hpp"

namespace spindle {

// Largest k such that g contains a subdivision of a (k x len)-spindle, for
// len in {1, 2, 3}, plus a witness when k >= 1. Ties between endpoint pairs
// break to the lexicographically smallest (tail, head).
//
// len = 1: vertex-capacity max flow per ordered pair;
// len = 2: same after deleting the arcs between the pair;
// len = 3: nontrivial N+(s) -> N-(t) paths in g - {s,t} via the matching
//          gadget, re-attaching s and t.
//
// jobs > 1 evaluates endpoint pairs on that many threads; the result is
// schedule-independent.
std::pair<int, std::optional<SpindleWitness>> max_k_for_ell(const Digraph& g, int len,
                                                            int jobs = 1);

} // namespace spindle

#endif
