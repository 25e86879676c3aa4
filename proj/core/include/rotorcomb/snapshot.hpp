#pragma once

#include <iosfwd>
#include <string>

#include "rotorcomb/engine.hpp"
#include "rotorcomb/harmonic.hpp"

namespace rotorcomb {

inline constexpr int kSnapshotVersion = 1;

/// Versioned JSON snapshot of an engine state: rotors as direction
/// characters E/S/W/N, particles and odometer as coordinate-value triples.
std::string state_to_json(const EngineState& s);
EngineState state_from_json(const std::string& json_text);

/// CSV rows `x,y` for a vertex set, sorted.
std::string vertices_to_csv(const std::vector<VertexC2>& vs);

/// CSV rows `x,y,u` for the odometer, sorted by vertex.
std::string odometer_to_csv(const OdometerMap& u);

/// CSV rows `x,y,e,nu_num,nu_den` for a boundary measure.
std::string measure_to_csv(const BoundaryMeasure& m);

/// JSON array of [x,y] pairs.
std::string vertices_to_json(const std::vector<VertexC2>& vs);

}  // namespace rotorcomb
