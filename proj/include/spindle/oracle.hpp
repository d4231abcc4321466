#ifndef SPINDLE_ORACLE_HPP
#define SPINDLE_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "spindle/digraph.hpp"

namespace spindle {

// Raised when an exhaustive-search entry point is asked to run beyond its
// size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleGuard = 14;

// Exhaustive reference search: a validated witness spindle matching
// `lengths` under `mode`, or nullopt. Deliberately exponential; refuses
// digraphs with more than `guard` vertices.
std::optional<SpindleWitness> oracle_find(const Digraph& g, const std::vector<int>& lengths,
                                          SpindleMode mode = SpindleMode::Subdivision,
                                          int guard = kDefaultOracleGuard);

// Largest k such that g contains a subdivision of a (k x len)-spindle.
int oracle_max_k(const Digraph& g, int len, int guard = kDefaultOracleGuard);

// Maximum total length over all 2-spindles, 0 when none exists.
int oracle_max_total(const Digraph& g, int guard = kDefaultOracleGuard);

// True iff g contains `count` pairwise vertex-disjoint subdivisions of a
// (2 x 1)-spindle.
bool oracle_disjoint_pack(const Digraph& g, int count, int guard = kDefaultOracleGuard);

} // namespace spindle

#endif
