#pragma once

#include "hullopt/rom/pod_gpr.hpp"

#include <string>

namespace hullopt::rom {

/// Persists one POD-GPR model as a directory: a JSON manifest with the GP
/// heads and identity data, plus 17-digit text matrices for the basis and
/// training inputs. Loading reproduces predictions bit-for-bit.
void save_rom(const std::string& dir, const PodGprRom& rom);
PodGprRom load_rom(const std::string& dir);

/// The pressure/shear pair under `<dir>/pressure` and `<dir>/shear`.
void save_rom_pair(const std::string& dir, const RomPair& pair);
RomPair load_rom_pair(const std::string& dir);

}  // namespace hullopt::rom
