#pragma once

#include <cstddef>
#include <vector>

#include "metric_ripple/metric_core.hpp"

namespace metric_ripple {

/// Position and velocity of test particle B relative to the comoving
/// reference particle A at the origin of the proper frame.
struct ParticleState {
  Vec3 position{};
  Vec3 velocity{};
  double t = 0.0;
};

struct Trajectory {
  std::vector<ParticleState> samples;
  double dt = 0.0;
};

/// Where the perturbation is sampled for a moving particle.
enum class SamplingMode {
  InitialPosition,  // z of the starting point, frozen
  Comoving,         // unperturbed z0 + v_z t
};

/// First-order geodesic fluctuation
///   x^j(t) = x0^k (delta_jk + 1/2 Re psi_jk) + v0^j t.
/// The packet amplitude must pass the TT check along +z at 1e-12.
Vec3 closed_form_position(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                          double t,
                          SamplingMode mode = SamplingMode::InitialPosition);

/// Time derivative of closed_form_position.
Vec3 closed_form_velocity(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                          double t,
                          SamplingMode mode = SamplingMode::InitialPosition);

/// Integrates d^2 x^j/dt^2 = 1/2 Re(d^2 psi_jk/dt^2) x^k with classical RK4,
/// starting from (x0, v0) at t = 0. dt must divide t_end within 1e-9.
Trajectory integrate_deviation(const GaussianPacket& p, const Vec3& x0,
                               const Vec3& v0, double t_end, double dt,
                               SamplingMode mode = SamplingMode::InitialPosition);

/// Same integrator from an arbitrary state, `steps` uniform steps spanning
/// `duration` (which may be negative). The field is sampled at z_ref
/// (InitialPosition) or z_ref + v_z (t - start.t) (Comoving).
Trajectory propagate(const GaussianPacket& p, const ParticleState& start,
                     double duration, std::size_t steps, double z_ref,
                     SamplingMode mode = SamplingMode::InitialPosition);

/// max_k |closed_form(t_k) - integrated(t_k)|. The integrator is seeded with
/// the closed form's own t = 0 position and velocity so that the two agree to
/// first order in the amplitude.
double deviation_report(const GaussianPacket& p, const Vec3& x0, const Vec3& v0,
                        double t_end, double dt,
                        SamplingMode mode = SamplingMode::InitialPosition);

}  // namespace metric_ripple
