#pragma once

#include <string_view>

namespace beamtf::cli {

enum class Dimension {
  Length,
  Area,
  SecondMoment,
  Density,
  Pressure,
  Stiffness,
  Mass,
  Damping,
  Frequency,
  Dimensionless,
};

std::string_view to_string(Dimension dim) noexcept;

/// Converts value given in `unit` to SI. An empty unit means SI already.
/// Throws Error(Parse) for unknown units or a dimension mismatch.
double to_si(double value, std::string_view unit, Dimension dim);

}  // namespace beamtf::cli
