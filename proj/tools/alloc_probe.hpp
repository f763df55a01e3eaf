#ifndef LAZYSTREAMS_TOOLS_ALLOC_PROBE_HPP
#define LAZYSTREAMS_TOOLS_ALLOC_PROBE_HPP

#include <cstddef>

// Heap accounting through replaced global operator new/delete. Linking any
// caller of these functions pulls the replacement into the binary.
namespace lazystreams::probe {

std::size_t live_bytes() noexcept;
std::size_t peak_bytes() noexcept;
/// Sets the peak to the current live size.
void reset_peak() noexcept;

}  // namespace lazystreams::probe

#endif  // LAZYSTREAMS_TOOLS_ALLOC_PROBE_HPP
