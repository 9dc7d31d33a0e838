#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "xychain/analysis.hpp"
#include "xychain/disorder.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/ensemble.hpp"

namespace xychain {

/// Shortest representation that round-trips the double exactly.
std::string format_double(double value);

// Column order and header names are a stable contract.
void write_sequence_csv(std::ostream& out, const DisorderSequence& sequence);
void write_alpha_sweep_csv(std::ostream& out, const std::vector<AlphaPoint>& points);
void write_grid_csv(std::ostream& out, const std::vector<GridPoint>& points);
void write_profile_csv(std::ostream& out, const WavefunctionProfile& profile);
void write_dynamics_csv(std::ostream& out, const DynamicsTrace& trace);

}  // namespace xychain
