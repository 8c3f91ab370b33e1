#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/energetics.hpp"
#include "modesplit/fields.hpp"

namespace modesplit::csv {

/// Shortest round-trip decimal representation.
std::string format_double(double value);

/// Lines written as "# <line>" before the CSV header.
using Preamble = std::vector<std::string>;

void write_profile(std::ostream& os, const BackgroundProfile& profile, const Preamble& preamble = {});
void write_field_state(std::ostream& os, const FieldState& state, const Preamble& preamble = {});
void write_physical_state(std::ostream& os, const PhysicalState& state,
                          const Preamble& preamble = {});
void write_mode_split(std::ostream& os, const ModeSplit& split, const Preamble& preamble = {});
void write_energy_log(std::ostream& os, std::span<const EnergyRecord> log,
                      const Preamble& preamble = {});

/// Generic table: named columns of equal length.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
void write_table(std::ostream& os, const Table& table, const Preamble& preamble = {});

/// Parses a table, skipping '#' comment lines and blank lines.
/// Throws InvalidInput on malformed input.
Table read_table(std::istream& is);

/// Reads a FieldState CSV (header z,Uz,P,Phi). The grid must be uniform with
/// z[0] = 0; its height is taken from the last row.
FieldState read_field_state(std::istream& is);

}  // namespace modesplit::csv
