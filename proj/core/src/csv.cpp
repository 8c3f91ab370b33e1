#include "modesplit/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "modesplit/error.hpp"

namespace modesplit::csv {

namespace {

void write_preamble(std::ostream& os, const Preamble& preamble) {
  for (const std::string& line : preamble) os << "# " << line << '\n';
}

void write_rows(std::ostream& os, const std::vector<const Field*>& cols) {
  const std::size_t n = cols.front()->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      os << format_double((*cols[c])[i]);
    }
    os << '\n';
  }
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& cell, std::size_t row) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidInput("csv: cannot parse '" + cell + "' on data row " + std::to_string(row));
  }
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_profile(std::ostream& os, const BackgroundProfile& p, const Preamble& preamble) {
  write_preamble(os, preamble);
  os << "z,H,eta,nu,rho_bar,p_bar,w\n";
  write_rows(os, {&p.grid.positions(), &p.H, &p.eta, &p.nu, &p.rho_bar, &p.p_bar, &p.w});
}

void write_field_state(std::ostream& os, const FieldState& s, const Preamble& preamble) {
  write_preamble(os, preamble);
  os << "z,Uz,P,Phi\n";
  write_rows(os, {&s.grid.positions(), &s.Uz, &s.P, &s.Phi});
}

void write_physical_state(std::ostream& os, const PhysicalState& s, const Preamble& preamble) {
  write_preamble(os, preamble);
  os << "z,Vz,p_prime,phi_prime,rho_prime\n";
  write_rows(os, {&s.grid.positions(), &s.Vz, &s.p_prime, &s.phi_prime, &s.rho_prime});
}

void write_mode_split(std::ostream& os, const ModeSplit& m, const Preamble& preamble) {
  write_preamble(os, preamble);
  os << "z,Uz_a,P_a,Phi_a,P_0,Phi_0\n";
  write_rows(os, {&m.acoustic.grid.positions(), &m.acoustic.Uz, &m.acoustic.P, &m.acoustic.Phi,
                  &m.entropy.P, &m.entropy.Phi});
}

void write_energy_log(std::ostream& os, std::span<const EnergyRecord> log,
                      const Preamble& preamble) {
  write_preamble(os, preamble);
  os << "t,E_total,E_kinetic,E_baro,E_thermal,E_acoustic,E_entropy,cross\n";
  for (const EnergyRecord& r : log) {
    os << format_double(r.t) << ',' << format_double(r.total) << ',' << format_double(r.kinetic)
       << ',' << format_double(r.baro) << ',' << format_double(r.thermal) << ','
       << format_double(r.acoustic) << ',' << format_double(r.entropy) << ','
       << format_double(r.cross) << '\n';
  }
}

void write_table(std::ostream& os, const Table& table, const Preamble& preamble) {
  if (table.header.size() != table.columns.size() || table.columns.empty()) {
    throw InvalidInput("csv table: header and columns disagree");
  }
  for (const auto& c : table.columns) {
    if (c.size() != table.columns.front().size()) throw InvalidInput("csv table: ragged columns");
  }
  write_preamble(os, preamble);
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) os << ',';
    os << table.header[c];
  }
  os << '\n';
  std::vector<const Field*> cols;
  for (const auto& c : table.columns) cols.push_back(&c);
  write_rows(os, cols);
}

Table read_table(std::istream& is) {
  Table table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> cells = split_line(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
      table.columns.resize(table.header.size());
      continue;
    }
    ++row;
    if (cells.size() != table.header.size()) {
      throw InvalidInput("csv: data row " + std::to_string(row) + " has " +
                         std::to_string(cells.size()) + " cells, expected " +
                         std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      table.columns[c].push_back(parse_double(cells[c], row));
    }
  }
  if (table.header.empty()) throw InvalidInput("csv: no header row");
  return table;
}

FieldState read_field_state(std::istream& is) {
  const Table t = read_table(is);
  const std::vector<std::string> expected{"z", "Uz", "P", "Phi"};
  if (t.header != expected) throw InvalidInput("csv: expected header z,Uz,P,Phi");
  const Field& z = t.columns[0];
  if (z.size() < Grid1D::kMinSamples) throw InvalidInput("csv: too few rows for a grid");
  if (z.front() != 0.0) throw InvalidInput("csv: grid must start at z = 0");
  Grid1D grid(z.size(), z.back());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::abs(z[i] - grid.z(i)) > 1e-9 * grid.height()) {
      throw InvalidInput("csv: grid is not uniform at row " + std::to_string(i + 1));
    }
  }
  FieldState s{grid, t.columns[1], t.columns[2], t.columns[3], 0.0};
  s.validate();
  return s;
}

}  // namespace modesplit::csv
