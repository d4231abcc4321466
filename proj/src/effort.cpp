#include "spindle/effort.hpp"

#include <atomic>

namespace spindle::effort {

namespace {
std::atomic<std::uint64_t> counter{0};
}

void reset() { counter.store(0, std::memory_order_relaxed); }
std::uint64_t ticks() { return counter.load(std::memory_order_relaxed); }
void bump(std::uint64_t n) { counter.fetch_add(n, std::memory_order_relaxed); }

} // namespace spindle::effort
