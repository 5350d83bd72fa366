#pragma once

#include <iosfwd>
#include <string>

#include "dsrnet/design.hpp"
#include "dsrnet/formation.hpp"
#include "dsrnet/sim.hpp"

namespace dsr {

/// Formats a double with 15 significant digits, locale-independent.
[[nodiscard]] std::string format_value(double v);

/// Header `t,agent_1,...,agent_n,source`; one row per step; LF endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Reads a trajectory CSV back; delta_t is recovered from the time column.
[[nodiscard]] Trajectory read_trajectory_csv(std::istream& in);

/// Header `t,x_1,y_1,...,x_n,y_n`; same numeric format as trajectories.
void write_formation_csv(std::ostream& out, const FormationTrace& trace);

/// Header `gain,radius`.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace dsr
