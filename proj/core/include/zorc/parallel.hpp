#ifndef ZORC_PARALLEL_HPP
#define ZORC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zorc {

// Runs fn(0..count-1) on up to `workers` threads. Callers keep results in
// index-addressed slots, so output is identical for any worker count.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace zorc

#endif
