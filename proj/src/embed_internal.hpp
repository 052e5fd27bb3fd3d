#pragma once

#include <vector>

#include "obstructionist/embed.hpp"

namespace obstructionist::embed::detail {

/// All (unsigned) rotation systems of a connected graph with exactly
/// `faces` faces, none fixed by symmetry. Deterministic order.
std::vector<RotationSystem> rotation_systems_with_faces(const MultiGraph& g, std::size_t faces);

}  // namespace obstructionist::embed::detail
