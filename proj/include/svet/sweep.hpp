#pragma once

#include "svet/oracle.hpp"
#include "svet/spacetime.hpp"
#include "svet/svetlichny.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace svet {

enum class SweepScenario { schwarzschild, sds, custom_matrix };

std::string to_string(SweepScenario scenario);

// One swept parameter: `steps` evenly spaced values over [min, max].
// Valid names: schwarzschild scenarios sweep T, M, alpha or omega; two-horizon
// scenarios sweep Lambda, M, alpha or omega.
struct AxisSpec {
    std::string name = "T";
    double min = 1e-3;
    double max = 3.0;
    int steps = 101;

    double value_at(int k) const {
        return min + (max - min) * static_cast<double>(k) /
                         static_cast<double>(steps - 1);
    }
};

struct SweepConfig {
    SweepScenario scenario = SweepScenario::schwarzschild;
    SchwarzschildScenario schwarzschild{};  // base values for fixed fields
    SdSScenario sds{};
    AxisSpec axis1{"T", 1e-3, 3.0, 101};
    AxisSpec axis2{"alpha", 0.0, 1.0, 101};
    bool audit = false;      // run the numeric maximizer per cell
    OracleConfig oracle{};   // audit settings; per-cell seed = rng_seed ^ cell index
    double threshold = 8.0;  // genuine-nonlocality line
    std::string output_path = "sweep.csv";
    std::uint64_t rng_seed = 42;
    int workers = 1;
    std::string tag;  // panel tag used in the summary
};

void validate(const SweepConfig& cfg);  // throws InvalidConfig

struct SweepCell {
    double axis1_value = 0.0;
    double axis2_value = 0.0;
    double value = 0.0;
    double measure = 0.0;
    Branch branch = Branch::coherence;
    std::optional<double> oracle_value;
    std::optional<double> oracle_gap;  // value - oracle_value
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepCell> cells;  // axis1-major order
    double max_value = 0.0;
    double min_value = 0.0;
    int max_cell[2] = {0, 0};  // (axis1 index, axis2 index)
    int min_cell[2] = {0, 0};
    long cells_above_threshold = 0;
};

// Evaluates one grid cell standalone (used by workers and by tests verifying
// that rows re-evaluate identically).
SweepCell evaluate_cell(const SweepConfig& cfg, int i1, int i2);

// Runs the grid across cfg.workers threads (static row partition; the gather
// and file writes are single-threaded, so output bytes never depend on the
// worker count), writes the CSV to cfg.output_path and the summary JSON next
// to it (<output stem>.summary.json), and returns the cells.
SweepResult run_sweep(const SweepConfig& cfg);

// CSV text for the result (schema: axis1,axis2,S,N_measure,branch with
// S_oracle,gap appended under audit; 12 significant digits).
std::string sweep_csv(const SweepResult& result);

// Summary JSON text: axes, fixed parameters, extrema, cells above threshold,
// branch-transition boundary cells, audit flags, and a definitive note on
// whether any cell exceeds the threshold.
std::string sweep_summary_json(const SweepResult& result);

// Path of the summary written by run_sweep for a given CSV path.
std::string summary_path_for(const std::string& csv_path);

// Named panel families reproducing the published parameter grids:
//   fig2 -> one-horizon n=1 panels (p,q) = (1,0), (0,1)
//   fig3 -> n=2 panels (2,0), (1,1), (0,2)
//   fig4 -> n=3 panels (3,0), (2,1), (1,2), (0,3)
//   fig5 -> two-horizon M=0.033 panels (n,m) = (3,1), (2,2), (1,3), Lambda axis
//   fig6 -> two-horizon Lambda=1 panels, same (n,m), M axis
// All use omega = 1 and a 101x101 grid with alpha on axis 2.
std::vector<SweepConfig> figure_preset(const std::string& name);

// Parses a CSV produced by run_sweep and reports the 4-neighbor connected
// regions with S strictly above 8: per-region cell count, bounding box and
// maximum; states "none found" explicitly when no cell qualifies. Throws
// ParseError on empty or malformed input.
std::string region_report(const std::string& csv_path);

}  // namespace svet
