#pragma once

#include <set>
#include <string>

#include "rotorcomb/engine.hpp"

namespace rotorcomb {

/// Deterministic SVG picture of a cluster state: dotted background grid,
/// cells shaded by odometer value, rotor arrows, optional odometer labels.
std::string render_svg(const EngineState& state, const std::set<VertexC2>& cluster,
                       bool labels = true);

}  // namespace rotorcomb
