#include "cpart/ppm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cpart {

namespace {

std::array<std::uint8_t, 3> hsv_to_rgb(double h, double s, double v) {
    h = h - std::floor(h);
    double c = v * s;
    double hp = h * 6.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    double m = v - c;
    auto byte = [](double t) {
        long v8 = std::lround(255.0 * t);
        if (v8 < 0) v8 = 0;
        if (v8 > 255) v8 = 255;
        return static_cast<std::uint8_t>(v8);
    };
    return {byte(r + m), byte(g + m), byte(b + m)};
}

}  // namespace

std::array<std::uint8_t, 3> domain_pixel(std::complex<double> value, bool inside) {
    if (!inside) return {0, 0, 0};
    // arg(exp(v)) = Im(v) wrapped to (-pi, pi]
    double arg = std::remainder(value.imag(), 2.0 * std::numbers::pi);
    double hue = (arg + std::numbers::pi) / (2.0 * std::numbers::pi);
    double v = 1.0 - std::exp(-std::max(0.0, value.real()) / 4.0);
    return hsv_to_rgb(hue, 1.0, v);
}

void render_domain_plot(const DomainGrid& grid, const std::string& path) {
    int res = grid.resolution;
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(res) * res * 3 + 32);
    char header[64];
    int hl = std::snprintf(header, sizeof header, "P6\n%d %d\n255\n", res, res);
    buf.insert(buf.end(), header, header + hl);
    for (int row = 0; row < res; ++row) {
        for (int col = 0; col < res; ++col) {
            auto px = domain_pixel(grid.at(row, col), grid.is_inside(row, col));
            buf.push_back(px[0]);
            buf.push_back(px[1]);
            buf.push_back(px[2]);
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("render_domain_plot: cannot open " + path);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("render_domain_plot: write failed for " + path);
}

}  // namespace cpart
