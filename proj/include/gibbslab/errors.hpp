#pragma once

#include <cstdint>
#include <stdexcept>

namespace gibbslab {

/// Thrown when an exact enumeration (or a tree truncation) would exceed the
/// configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on |Phi|^|A| for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 26;

/// base^exponent, or CapacityError if it exceeds `limit`.
std::uint64_t checked_state_count(std::uint64_t base, std::uint64_t exponent,
                                  std::uint64_t limit);

}  // namespace gibbslab
