#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numbers>
#include <vector>

namespace accel {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// One 3-axis specific-force sample per time step, m/s^2.
using Series = std::vector<Vec3>;

inline constexpr double kStandardGravity = 9.80665;  // m/s^2

inline constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Orientation in the z-y-x Euler convention. Degrees at module boundaries,
/// radians only inside trigonometric kernels.
struct EulerAngles {
  double roll_deg = 0.0;
  double pitch_deg = 0.0;
  double yaw_deg = 0.0;
};

/// Accelerometer error magnitudes for one sensor grade.
struct NoiseSpec {
  double vrw = 0.0;            ///< white-noise density, m/s/sqrt(s)
  double bi = 0.0;             ///< bias-instability steady-state sigma, m/s^2
  double bo = 0.0;             ///< bias-offset bound (uniform per axis), m/s^2
  double sample_rate = 100.0;  ///< Hz
  double bi_corr_time = 60.0;  ///< Gauss-Markov correlation time, s
};

/// Paired noisy / ground-truth stationary recording with its true orientation.
struct Recording {
  EulerAngles angles;
  Series gt;
  Series noisy;
  double sample_rate = 100.0;
};

struct SimConfig {
  double angle_min_deg = -15.0;
  double angle_max_deg = 15.0;
  double angle_step_deg = 0.1;
  int window_len = 100;
  NoiseSpec noisy_spec{0.005, 0.001, 0.05, 100.0, 60.0};
  NoiseSpec gt_spec{1e-5, 1e-5, 1e-5, 100.0, 60.0};
  double gravity = kStandardGravity;
  std::uint64_t seed = 0;
};

}  // namespace accel
