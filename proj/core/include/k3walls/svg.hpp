#pragma once

#include "k3walls/wall.hpp"

#include <string>
#include <vector>

namespace k3walls {

/// Deterministic SVG for wall pictures on the slice: semicircular walls over
/// the u-axis, vertical walls, and dashed vertical scan rays.  Elements are
/// emitted in input order; coordinates are rounded to 6 decimals only at the
/// serialization boundary, so identical inputs give byte-identical output.
std::string render_walls_svg(const std::vector<WallGeometry>& walls,
                             const std::vector<Rational>& rays);

/// The hyperbola picture behind the reflection-positivity argument: spherical
/// classes of the tower wall lattice in (x, y) coordinates, the pairing-zero
/// line y = -x/(2n-1), and the half-plane boundary 2x + y = -3.
std::string render_hyperbola_svg(std::int64_t n, std::int64_t bound);

void write_file(const std::string& path, const std::string& contents);

}  // namespace k3walls
