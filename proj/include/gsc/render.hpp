#pragma once

#include <string>

#include "gsc/carpet.hpp"

namespace gsc {

/// Largest image side render accepts.
inline constexpr std::uint64_t kMaxImageSide = std::uint64_t{1} << 15;

/// Binary PGM of level n: "P5\n<w> <h>\n255\n" then one byte per cell, top row first;
/// white cells are 255, black cells 0. Throws CapacityError past kMaxImageSide.
std::string render_pgm(const SequenceSpec& spec, int n, const EnumerationOptions& options = {});

/// Writes render_pgm to `path`; throws Error when the file cannot be written.
void render(const SequenceSpec& spec, int n, const std::string& path, const EnumerationOptions& options = {});

}  // namespace gsc
