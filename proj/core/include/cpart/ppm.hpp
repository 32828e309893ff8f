#pragma once

#include <array>
#include <string>

#include "cpart/genfun.hpp"

namespace cpart {

// Hue from the phase of exp(value), brightness 1 - exp(-max(0, Re)/4),
// saturation 1; pixels outside the disc are black.
std::array<std::uint8_t, 3> domain_pixel(std::complex<double> value, bool inside);

// Binary PPM (P6, maxval 255), byte-deterministic for identical grids.
void render_domain_plot(const DomainGrid& grid, const std::string& path);

}  // namespace cpart
