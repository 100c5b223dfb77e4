#pragma once

#include <functional>

#include "accel/types.hpp"

namespace accel {

/// Uniform denoiser contract: noisy window in, denoised window of the same
/// length out. Implementations must be safe to call concurrently.
using Denoiser = std::function<Series(const Series&)>;

inline Denoiser identity_denoiser() {
  return [](const Series& x) { return x; };
}

}  // namespace accel
