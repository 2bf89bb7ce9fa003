#pragma once

#include <vector>

#include "orca/trajectory.hpp"

namespace orca {

enum class LabelSource { supervised, consistent };

struct LabelMode {
  LabelSource source = LabelSource::supervised;
  // Replace the raw sequence by its running maximum: once a step is labeled
  // 1, every later step is too.
  bool cumulative = true;
};

// Per-step binary labels for one trajectory.
//   supervised: the recorded correctness bits.
//   consistent: indicator that the step's answer id equals the final step's.
// Throws input_error if the required per-step fields are missing.
std::vector<int> build_labels(const Trajectory& traj, const LabelMode& mode);

}  // namespace orca
