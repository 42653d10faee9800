#pragma once

// Embedded reference table of Hellmann-potential energies (a = 1), the unit
// calibration that maps it onto the radial spectrum, and the per-row report.

#include "hellmann/bound.hpp"
#include "hellmann/oracle.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hellmann {

struct TableRow {
    int id = 0;
    double a = 1.0;
    double b = 0.0;
    double lambda = 0.0;
    int table_n = 1; // principal-type index as printed
    int ell = 0;
    double present = 0.0;
    double ref11 = 0.0; // 1/N expansion
    double ref28 = 0.0; // Nikiforov-Uvarov
};

/// All 40 rows, blocks ordered (b=0.5, 0.001), (b=-0.5, 0.001), (b=0.5, 0.01), (b=-0.5, 0.01).
std::span<const TableRow> table1_rows();

enum class IndexMap {
    Direct,    // formula n = table n
    Principal, // formula n = table n - l - 1
};

std::string_view to_string(IndexMap m);

/// Units in which the table is expressed: 2m/hbar^2 = coupling with hbar = 1,
/// and table energy = energy_scale * E.
struct UnitConvention {
    double coupling = 2.0;
    double energy_scale = 2.0;
    IndexMap index_map = IndexMap::Principal;

    PotentialParams params(double a, double b, double lambda) const;
    QuantumNumbers formula_qn(int table_n, int ell) const;
    std::string describe() const;
};

/// The convention selected by calibrate_table, frozen for the CLI shortcut.
UnitConvention table1_convention();

struct CalibrationRow {
    int row_id = 0;
    double table_value = 0.0;
    double computed = 0.0;
    double deviation = 0.0; // |computed - table_value|
};

struct CalibrationResult {
    UnitConvention convention;
    double scale = 0.0;           // 2m/hbar^2 of the winner
    std::string index_map;        // human-readable table-n mapping
    double max_deviation = 0.0;   // over all rows
    double max_deviation_0001 = 0.0; // lambda = 0.001 block (selection criterion)
    double max_deviation_001 = 0.0;  // lambda = 0.01 block
    std::vector<CalibrationRow> per_row;
};

/// Scans coupling in {1,2,4,8}, energy_scale in {1,2} and both index maps;
/// keeps the candidate with the smallest max deviation over the lambda = 0.001
/// block. Never throws on a poor fit.
CalibrationResult calibrate_table();

/// Same report for a fixed convention.
CalibrationResult evaluate_convention(const UnitConvention& conv);

struct ValidationRow {
    TableRow row;
    QuantumNumbers qn;
    double analytic = 0.0;         // table units
    double analytic_printed = 0.0; // radial spectrum with the typeset bracket terms
    std::optional<double> oracle_exact;
    std::optional<double> oracle_approx;
};

/// Table rows with the analytic energy and, unless skip_oracle, the Numerov
/// energies for the exact and Pekeris-approximated equations, all in table units.
std::vector<ValidationRow> validate_table(const UnitConvention& conv, bool skip_oracle,
                                          const SolverConfig& cfg = {});

} // namespace hellmann
