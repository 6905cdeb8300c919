#pragma once

#include "lefscalc/io.hpp"

#include <string>
#include <vector>

namespace lefscalc {

/// Built-in problems: point, interval, hexagon, 12gon, disk, s2, cp1,
/// doubling, reflection, rotation, flag3, plus the map fixtures collapse
/// and square.
const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);
/// Throws UnknownCell for an unknown name.
ProblemFile fixture(const std::string& name);

/// Angle doubling of the m-gon (m even), as a map sd(m-gon) -> m-gon with
/// normal data [[2]] at its fixed vertex v0.
ProblemFile polygon_doubling(int m);
/// Reflection v_i -> v_-i of the m-gon (m even), fixing v0 and v_{m/2}.
ProblemFile polygon_reflection(int m);

}  // namespace lefscalc
