#include "beamtf/cli/units.hpp"

#include <array>
#include <cmath>
#include <string>

#include "beamtf/errors.hpp"

namespace beamtf::cli {

namespace {

struct UnitEntry {
  std::string_view name;
  Dimension dim;
  int exponent;  ///< SI value = value * 10^exponent
};

constexpr std::array kUnits{
    UnitEntry{"m", Dimension::Length, 0},
    UnitEntry{"cm", Dimension::Length, -2},
    UnitEntry{"mm", Dimension::Length, -3},
    UnitEntry{"m^2", Dimension::Area, 0},
    UnitEntry{"cm^2", Dimension::Area, -4},
    UnitEntry{"mm^2", Dimension::Area, -6},
    UnitEntry{"m^4", Dimension::SecondMoment, 0},
    UnitEntry{"cm^4", Dimension::SecondMoment, -8},
    UnitEntry{"mm^4", Dimension::SecondMoment, -12},
    UnitEntry{"kg/m^3", Dimension::Density, 0},
    UnitEntry{"g/cm^3", Dimension::Density, 3},
    UnitEntry{"Pa", Dimension::Pressure, 0},
    UnitEntry{"kPa", Dimension::Pressure, 3},
    UnitEntry{"MPa", Dimension::Pressure, 6},
    UnitEntry{"GPa", Dimension::Pressure, 9},
    UnitEntry{"N/m", Dimension::Stiffness, 0},
    UnitEntry{"N/mm", Dimension::Stiffness, 3},
    UnitEntry{"kN/m", Dimension::Stiffness, 3},
    UnitEntry{"kg", Dimension::Mass, 0},
    UnitEntry{"g", Dimension::Mass, -3},
    UnitEntry{"N*s/m", Dimension::Damping, 0},
    UnitEntry{"Ns/m", Dimension::Damping, 0},
    UnitEntry{"kg/s", Dimension::Damping, 0},
    UnitEntry{"Hz", Dimension::Frequency, 0},
    UnitEntry{"kHz", Dimension::Frequency, 3},
};

}  // namespace

std::string_view to_string(Dimension dim) noexcept {
  switch (dim) {
    case Dimension::Length: return "length";
    case Dimension::Area: return "area";
    case Dimension::SecondMoment: return "second moment of area";
    case Dimension::Density: return "density";
    case Dimension::Pressure: return "pressure";
    case Dimension::Stiffness: return "stiffness";
    case Dimension::Mass: return "mass";
    case Dimension::Damping: return "damping";
    case Dimension::Frequency: return "frequency";
    case Dimension::Dimensionless: return "dimensionless";
  }
  return "unknown";
}

double to_si(double value, std::string_view unit, Dimension dim) {
  if (unit.empty()) return value;
  for (const auto& u : kUnits) {
    if (u.name != unit) continue;
    if (u.dim != dim) {
      throw Error(ErrorKind::Parse, "unit '" + std::string(unit) +
                                        "' is not a " +
                                        std::string(to_string(dim)) + " unit");
    }
    // One correctly rounded operation by an exact power of ten, so that
    // "2.25 cm^2" lands on the same double as 2.25e-4.
    const double p10 = std::pow(10.0, std::abs(u.exponent));
    return u.exponent >= 0 ? value * p10 : value / p10;
  }
  throw Error(ErrorKind::Parse, "unknown unit '" + std::string(unit) + "'");
}

}  // namespace beamtf::cli
