#pragma once

// Grid sweeps behind the CSV figure commands. Rows are computed with
// grid_map, so the serial and OpenMP paths give identical tables.

#include <cstddef>
#include <vector>

#include "twostate/csv.hpp"
#include "twostate/parallel.hpp"

namespace twostate {

inline constexpr const char* kVersion = "1.0.0";

/// `steps` points from lo to hi inclusive (steps >= 2).
std::vector<double> inclusive_grid(double lo, double hi, std::size_t steps);

struct ClassicalRow {
  double theta, f_min_error, f_unambiguous, f_optimized, f_fuchs_peres;
};

struct ChannelRow {
  double alpha_sq, f_direct, f_purification, f_combined, alpha_prime_opt;
};

struct UnknownChannelRow {
  double alpha_sq, f_direct_avg, f_purif_unknown;
};

struct TelecloningRow {
  double theta, a, b, c, f_global_teleclone, f_global_optimal, entanglement_alice_receivers;
};

std::vector<ClassicalRow> classical_sweep(std::size_t theta_steps, Execution ex = Execution::kParallel);
std::vector<ChannelRow> channel_sweep(double theta, std::size_t alpha_steps,
                                      Execution ex = Execution::kParallel);
std::vector<UnknownChannelRow> unknown_channel_sweep(std::size_t alpha_steps,
                                                     Execution ex = Execution::kParallel);
std::vector<TelecloningRow> telecloning_sweep(std::size_t theta_steps,
                                              Execution ex = Execution::kParallel);

CsvTable to_table(const std::vector<ClassicalRow>& rows);
CsvTable to_table(const std::vector<ChannelRow>& rows);
CsvTable to_table(const std::vector<UnknownChannelRow>& rows);
CsvTable to_table(const std::vector<TelecloningRow>& rows);

}  // namespace twostate
