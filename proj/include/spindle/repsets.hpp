#ifndef SPINDLE_REPSETS_HPP
#define SPINDLE_REPSETS_HPP

#include <cstdint>
#include <vector>

namespace spindle {

// Family of p-element subsets of {0, ..., universe_size - 1}. Members are
// sorted and deduplicated.
struct SetFamily {
    int universe_size = 0;
    int p = 0;
    std::vector<std::vector<int>> members;
};

// Linear representation of the uniform matroid of rank p + q: a
// (p+q) x n Vandermonde matrix over a prime field, one column per ground-set
// element. Any rank-many distinct columns are independent, so two sets fit
// exactly when they are disjoint.
struct TrimContext {
    std::int64_t field_prime = 0;
    int rank = 0;
    std::vector<std::int64_t> generator_points; // n distinct field elements
};

TrimContext make_trim_context(int universe_size, int rank);

// q-representative subfamily via exterior-algebra vectors: each member maps
// to its C(p+q, p) minors against the Vandermonde matrix, and members whose
// vectors extend a growing basis are kept (Gaussian elimination over the
// prime field). Output size is at most C(p+q, p).
//
// When universe_size < p + q the representation cannot be loss-free and the
// family is returned unchanged (it trivially represents itself).
SetFamily trim(const SetFamily& f, int q, const TrimContext& ctx);

// Exhaustive check of the q-representation property; test support only,
// refuses universes larger than 16 elements.
bool check_representative(const SetFamily& f, const SetFamily& sub, int q);

// Trim of the concatenation; q-represents the union of the sources whenever
// each input q-represents its own.
SetFamily union_families(const std::vector<SetFamily>& fs, int q, const TrimContext& ctx);

// C(n, k) without overflow concerns at the scales used here.
std::uint64_t binomial(int n, int k);

} // namespace spindle

#endif
