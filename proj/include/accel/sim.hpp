#pragma once

#include <vector>

#include "accel/rng.hpp"
#include "accel/types.hpp"

namespace accel::sim {

/// Body-to-navigation rotation matrix for the z-y-x Euler sequence.
/// Orthonormal with determinant +1.
Mat3 body_to_nav_matrix(const EulerAngles& angles);

/// Specific force sensed by a stationary accelerometer:
/// [sin(pitch), -sin(roll)cos(pitch), -cos(roll)cos(pitch)] * gravity.
/// Independent of yaw; the result norm equals gravity.
Vec3 gravity_projection(const EulerAngles& angles, double gravity = kStandardGravity);

/// Cartesian product of roll x pitch values on the half-open interval
/// [min, max) with the given step, yaw fixed at zero. A degenerate min == max
/// range yields the single point {min}.
std::vector<EulerAngles> generate_grid(const SimConfig& config);

/// Additive error series for one sensor grade: white noise of per-sample
/// sigma vrw*sqrt(fs), a first-order Gauss-Markov bias-instability process at
/// steady state, and a per-axis constant offset drawn uniformly from
/// [-bo, +bo]. Deterministic given the stream.
Series synthesize_errors(const NoiseSpec& spec, int n, Rng& rng);

/// One Recording per grid point: gravity projection plus independently drawn
/// errors for the GT and noisy grades. Recording i consumes substreams
/// derive_seed(seed, 2i) / derive_seed(seed, 2i+1), so any thread count
/// produces the identical dataset.
std::vector<Recording> build_dataset(const SimConfig& config, unsigned threads = 1);

/// Random re-orientation by at most jitter_deg per axis (gt and noisy rotated
/// consistently, stored angles updated) followed by additive white noise on
/// the noisy channel only.
Recording augment(const Recording& rec, double angle_jitter_deg, double extra_noise_std, Rng& rng);

}  // namespace accel::sim
