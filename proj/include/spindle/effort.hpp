#ifndef SPINDLE_EFFORT_HPP
#define SPINDLE_EFFORT_HPP

#include <cstdint>

namespace spindle::effort {

// Coarse search-effort counter (search nodes, flow augmentations, DP
// entries, color-coding trials). Process-wide; reset before a solve to
// report how much exploring it did.
void reset();
std::uint64_t ticks();
void bump(std::uint64_t n = 1);

} // namespace spindle::effort

#endif
