#include "svet/sweep.hpp"

#include "svet/errors.hpp"
#include "svet/xtype.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

namespace svet {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

bool axis_name_valid(SweepScenario scenario, const std::string& name) {
    if (scenario == SweepScenario::schwarzschild)
        return name == "T" || name == "M" || name == "alpha" || name == "omega";
    if (scenario == SweepScenario::sds)
        return name == "Lambda" || name == "M" || name == "alpha" || name == "omega";
    return false;
}

void apply_axis(SchwarzschildScenario& s, const std::string& name, double value) {
    if (name == "T") {
        s.temperature = value;
        s.mass.reset();
    } else if (name == "M") {
        s.mass = value;
        s.temperature.reset();
    } else if (name == "alpha") {
        s.alpha = value;
    } else {
        s.omega = value;
    }
}

void apply_axis(SdSScenario& s, const std::string& name, double value) {
    if (name == "Lambda") {
        s.lambda_cosmo = value;
    } else if (name == "M") {
        s.mass = value;
    } else if (name == "alpha") {
        s.alpha = value;
    } else {
        s.omega = value;
    }
}

json axis_json(const AxisSpec& axis) {
    return json{{"name", axis.name}, {"min", axis.min}, {"max", axis.max},
                {"steps", axis.steps}};
}

struct ParsedGrid {
    int steps1 = 0;
    int steps2 = 0;
    std::vector<double> axis1;   // per row
    std::vector<double> axis2;   // per column
    std::vector<double> values;  // axis1-major
};

ParsedGrid parse_grid_csv(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open " + csv_path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file: " + csv_path);
    if (line.rfind("axis1,axis2,S,N_measure,branch", 0) != 0)
        throw ParseError("unrecognized header: " + line);

    std::vector<std::string> a1_text;
    std::vector<double> a1, a2, values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() < 5) throw ParseError("short row: " + line);
        try {
            a1.push_back(std::stod(fields[0]));
            a2.push_back(std::stod(fields[1]));
            values.push_back(std::stod(fields[2]));
        } catch (const std::exception&) {
            throw ParseError("non-numeric row: " + line);
        }
        a1_text.push_back(fields[0]);
    }
    if (values.empty()) throw ParseError("no data rows in " + csv_path);

    ParsedGrid grid;
    int steps2 = 1;
    while (steps2 < static_cast<int>(values.size()) &&
           a1_text[static_cast<std::size_t>(steps2)] == a1_text[0])
        ++steps2;
    grid.steps2 = steps2;
    if (values.size() % static_cast<std::size_t>(steps2) != 0)
        throw ParseError("row count is not a full grid");
    grid.steps1 = static_cast<int>(values.size()) / steps2;
    for (int r = 0; r < grid.steps1; ++r) {
        const std::size_t base = static_cast<std::size_t>(r) *
                                 static_cast<std::size_t>(steps2);
        for (int c = 1; c < steps2; ++c)
            if (a1_text[base + static_cast<std::size_t>(c)] != a1_text[base])
                throw ParseError("axis1 is not constant within a row block");
        grid.axis1.push_back(a1[base]);
    }
    for (int c = 0; c < steps2; ++c) grid.axis2.push_back(a2[static_cast<std::size_t>(c)]);
    grid.values = std::move(values);
    return grid;
}

}  // namespace

std::string to_string(SweepScenario scenario) {
    switch (scenario) {
        case SweepScenario::schwarzschild: return "schwarzschild";
        case SweepScenario::sds: return "sds";
        case SweepScenario::custom_matrix: return "custom-matrix";
    }
    return "?";
}

void validate(const SweepConfig& cfg) {
    if (cfg.scenario == SweepScenario::custom_matrix)
        throw InvalidConfig("custom-matrix inputs are evaluated singly, not swept");
    for (const AxisSpec* axis : {&cfg.axis1, &cfg.axis2}) {
        if (axis->steps < 2) throw InvalidConfig("axis steps must be >= 2");
        if (!(axis->min < axis->max)) throw InvalidConfig("axis needs min < max");
        if (!axis_name_valid(cfg.scenario, axis->name))
            throw InvalidConfig("axis name '" + axis->name + "' is not valid for " +
                                to_string(cfg.scenario));
    }
    if (cfg.axis1.name == cfg.axis2.name)
        throw InvalidConfig("the two axes must sweep different parameters");
    if (cfg.workers < 1) throw InvalidConfig("workers must be >= 1");
    if (cfg.output_path.empty()) throw InvalidConfig("output path must not be empty");
    validate(cfg.oracle);
}

SweepCell evaluate_cell(const SweepConfig& cfg, int i1, int i2) {
    SweepCell cell;
    cell.axis1_value = cfg.axis1.value_at(i1);
    cell.axis2_value = cfg.axis2.value_at(i2);

    SvetlichnyResult result;
    DensityOperator audited_state;
    if (cfg.scenario == SweepScenario::schwarzschild) {
        SchwarzschildScenario sc = cfg.schwarzschild;
        apply_axis(sc, cfg.axis1.name, cell.axis1_value);
        apply_axis(sc, cfg.axis2.name, cell.axis2_value);
        result = svetlichny_schwarzschild(sc);
        if (cfg.audit) audited_state = reduce_schwarzschild(sc);
    } else {
        SdSScenario sc = cfg.sds;
        apply_axis(sc, cfg.axis1.name, cell.axis1_value);
        apply_axis(sc, cfg.axis2.name, cell.axis2_value);
        result = svetlichny_sds(sc);
        if (cfg.audit) audited_state = build_sds_state(sc);
    }
    cell.value = result.value;
    cell.measure = result.measure;
    cell.branch = result.branch;

    if (cfg.audit) {
        OracleConfig oracle = cfg.oracle;
        const std::uint64_t cell_index =
            static_cast<std::uint64_t>(i1) * static_cast<std::uint64_t>(cfg.axis2.steps) +
            static_cast<std::uint64_t>(i2);
        oracle.rng_seed = cfg.rng_seed ^ cell_index;
        const OracleOutcome outcome = maximize(audited_state, oracle);
        cell.oracle_value = outcome.value;
        cell.oracle_gap = cell.value - outcome.value;
    }
    return cell;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate(cfg);

    SweepResult result;
    result.config = cfg;
    result.cells.resize(static_cast<std::size_t>(cfg.axis1.steps) *
                        static_cast<std::size_t>(cfg.axis2.steps));

    const int rows = cfg.axis1.steps;
    const int cols = cfg.axis2.steps;
    const int nthreads = std::max(1, std::min(cfg.workers, rows));
    const auto worker = [&](int w) {
        for (int i1 = w; i1 < rows; i1 += nthreads)
            for (int i2 = 0; i2 < cols; ++i2)
                result.cells[static_cast<std::size_t>(i1) * static_cast<std::size_t>(cols) +
                             static_cast<std::size_t>(i2)] = evaluate_cell(cfg, i1, i2);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    result.max_value = result.cells[0].value;
    result.min_value = result.cells[0].value;
    for (int i1 = 0; i1 < rows; ++i1) {
        for (int i2 = 0; i2 < cols; ++i2) {
            const SweepCell& cell =
                result.cells[static_cast<std::size_t>(i1) * static_cast<std::size_t>(cols) +
                             static_cast<std::size_t>(i2)];
            if (cell.value > result.max_value) {
                result.max_value = cell.value;
                result.max_cell[0] = i1;
                result.max_cell[1] = i2;
            }
            if (cell.value < result.min_value) {
                result.min_value = cell.value;
                result.min_cell[0] = i1;
                result.min_cell[1] = i2;
            }
            if (cell.value > cfg.threshold) ++result.cells_above_threshold;
        }
    }

    std::ofstream csv(cfg.output_path, std::ios::binary);
    if (!csv) throw IoError("cannot write " + cfg.output_path);
    csv << sweep_csv(result);
    if (!csv.good()) throw IoError("failed writing " + cfg.output_path);
    csv.close();

    const std::string summary_path = summary_path_for(cfg.output_path);
    std::ofstream summary(summary_path, std::ios::binary);
    if (!summary) throw IoError("cannot write " + summary_path);
    summary << sweep_summary_json(result);
    if (!summary.good()) throw IoError("failed writing " + summary_path);
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "axis1,axis2,S,N_measure,branch";
    if (result.config.audit) out += ",S_oracle,gap";
    out += "\n";
    for (const SweepCell& cell : result.cells) {
        out += fmt12(cell.axis1_value);
        out += ',';
        out += fmt12(cell.axis2_value);
        out += ',';
        out += fmt12(cell.value);
        out += ',';
        out += fmt12(cell.measure);
        out += ',';
        out += to_string(cell.branch);
        if (result.config.audit) {
            out += ',';
            out += fmt12(cell.oracle_value.value_or(0.0));
            out += ',';
            out += fmt12(cell.oracle_gap.value_or(0.0));
        }
        out += '\n';
    }
    return out;
}

std::string sweep_summary_json(const SweepResult& result) {
    const SweepConfig& cfg = result.config;
    const int cols = cfg.axis2.steps;
    const auto& cell_at = [&](int i1, int i2) -> const SweepCell& {
        return result.cells[static_cast<std::size_t>(i1) * static_cast<std::size_t>(cols) +
                            static_cast<std::size_t>(i2)];
    };

    json fixed;
    if (cfg.scenario == SweepScenario::schwarzschild) {
        const SchwarzschildScenario& s = cfg.schwarzschild;
        fixed = json{{"alpha", s.alpha}, {"omega", s.omega}, {"n", s.n},
                     {"p", s.p},         {"q", s.q}};
        if (s.temperature) fixed["T"] = *s.temperature;
        if (s.mass) fixed["M"] = *s.mass;
    } else {
        const SdSScenario& s = cfg.sds;
        fixed = json{{"alpha", s.alpha}, {"omega", s.omega},
                     {"M", s.mass},      {"Lambda", s.lambda_cosmo},
                     {"n", s.n},         {"m", s.m}};
    }

    json above = json::array();
    json transitions = json::array();
    json flagged = json::array();
    double max_abs_gap = 0.0;
    for (int i1 = 0; i1 < cfg.axis1.steps; ++i1) {
        for (int i2 = 0; i2 < cols; ++i2) {
            const SweepCell& cell = cell_at(i1, i2);
            if (cell.value > cfg.threshold) above.push_back({i1, i2});
            const bool boundary =
                (i1 + 1 < cfg.axis1.steps && cell_at(i1 + 1, i2).branch != cell.branch) ||
                (i2 + 1 < cols && cell_at(i1, i2 + 1).branch != cell.branch);
            if (boundary) transitions.push_back({i1, i2});
            if (cell.oracle_gap) {
                max_abs_gap = std::max(max_abs_gap, std::abs(*cell.oracle_gap));
                if (std::abs(*cell.oracle_gap) > 1e-3) flagged.push_back({i1, i2});
            }
        }
    }

    const SweepCell& max_cell = cell_at(result.max_cell[0], result.max_cell[1]);
    const SweepCell& min_cell = cell_at(result.min_cell[0], result.min_cell[1]);

    std::string note;
    if (result.cells_above_threshold == 0) {
        note = "no cell exceeds S = " + fmt12(cfg.threshold) +
               " on this grid; maximum S = " + fmt12(result.max_value) + " at (" +
               cfg.axis1.name + ", " + cfg.axis2.name + ") = (" +
               fmt12(max_cell.axis1_value) + ", " + fmt12(max_cell.axis2_value) + ")";
    } else {
        note = std::to_string(result.cells_above_threshold) + " cell(s) exceed S = " +
               fmt12(cfg.threshold) + "; maximum S = " + fmt12(result.max_value) +
               " at (" + cfg.axis1.name + ", " + cfg.axis2.name + ") = (" +
               fmt12(max_cell.axis1_value) + ", " + fmt12(max_cell.axis2_value) + ")";
    }

    json summary{
        {"scenario", to_string(cfg.scenario)},
        {"tag", cfg.tag},
        {"axis1", axis_json(cfg.axis1)},
        {"axis2", axis_json(cfg.axis2)},
        {"fixed", fixed},
        {"seed", cfg.rng_seed},
        {"audit", cfg.audit},
        {"threshold", cfg.threshold},
        {"max_S", result.max_value},
        {"max_cell", json{{"axis1", max_cell.axis1_value},
                          {"axis2", max_cell.axis2_value},
                          {"index", {result.max_cell[0], result.max_cell[1]}}}},
        {"min_S", result.min_value},
        {"min_cell", json{{"axis1", min_cell.axis1_value},
                          {"axis2", min_cell.axis2_value},
                          {"index", {result.min_cell[0], result.min_cell[1]}}}},
        {"cells_above_threshold", result.cells_above_threshold},
        {"cells_above_threshold_index_pairs", above},
        {"branch_transition_cells", transitions},
        {"note", note},
    };
    if (cfg.audit) {
        summary["audit_max_abs_gap"] = max_abs_gap;
        summary["audit_flagged_cells"] = flagged;
    }
    return summary.dump(2) + "\n";
}

std::string summary_path_for(const std::string& csv_path) {
    const std::string suffix = ".csv";
    if (csv_path.size() > suffix.size() &&
        csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return csv_path.substr(0, csv_path.size() - suffix.size()) + ".summary.json";
    return csv_path + ".summary.json";
}

std::vector<SweepConfig> figure_preset(const std::string& name) {
    const AxisSpec alpha_axis{"alpha", 0.0, 1.0, 101};
    std::vector<SweepConfig> configs;

    const auto schwarzschild_panel = [&](int n, int p, int q) {
        SweepConfig cfg;
        cfg.scenario = SweepScenario::schwarzschild;
        cfg.schwarzschild.omega = 1.0;
        cfg.schwarzschild.n = n;
        cfg.schwarzschild.p = p;
        cfg.schwarzschild.q = q;
        cfg.schwarzschild.temperature = 1.0;  // overridden by the T axis
        cfg.axis1 = AxisSpec{"T", 1e-3, 3.0, 101};
        cfg.axis2 = alpha_axis;
        cfg.tag = "fig" + std::to_string(n + 1) + "-n" + std::to_string(n) + "p" +
                  std::to_string(p) + "q" + std::to_string(q);
        cfg.output_path = cfg.tag + ".csv";
        return cfg;
    };
    const auto sds_panel = [&](const std::string& fig, int n, int m, bool lambda_axis) {
        SweepConfig cfg;
        cfg.scenario = SweepScenario::sds;
        cfg.sds.omega = 1.0;
        cfg.sds.n = n;
        cfg.sds.m = m;
        if (lambda_axis) {
            cfg.sds.mass = 0.033;
            cfg.axis1 = AxisSpec{"Lambda", 1e-4, 1.0, 101};
        } else {
            cfg.sds.lambda_cosmo = 1.0;
            cfg.axis1 = AxisSpec{"M", 1e-3, 0.33, 101};
        }
        cfg.axis2 = alpha_axis;
        cfg.tag = fig + "-n" + std::to_string(n) + "m" + std::to_string(m);
        cfg.output_path = cfg.tag + ".csv";
        return cfg;
    };

    if (name == "fig2") {
        configs.push_back(schwarzschild_panel(1, 1, 0));
        configs.push_back(schwarzschild_panel(1, 0, 1));
    } else if (name == "fig3") {
        configs.push_back(schwarzschild_panel(2, 2, 0));
        configs.push_back(schwarzschild_panel(2, 1, 1));
        configs.push_back(schwarzschild_panel(2, 0, 2));
    } else if (name == "fig4") {
        configs.push_back(schwarzschild_panel(3, 3, 0));
        configs.push_back(schwarzschild_panel(3, 2, 1));
        configs.push_back(schwarzschild_panel(3, 1, 2));
        configs.push_back(schwarzschild_panel(3, 0, 3));
    } else if (name == "fig5") {
        configs.push_back(sds_panel("fig5", 3, 1, true));
        configs.push_back(sds_panel("fig5", 2, 2, true));
        configs.push_back(sds_panel("fig5", 1, 3, true));
    } else if (name == "fig6") {
        configs.push_back(sds_panel("fig6", 3, 1, false));
        configs.push_back(sds_panel("fig6", 2, 2, false));
        configs.push_back(sds_panel("fig6", 1, 3, false));
    } else {
        throw UnknownPreset("unknown preset '" + name +
                            "' (expected fig2, fig3, fig4, fig5 or fig6)");
    }
    return configs;
}

std::string region_report(const std::string& csv_path) {
    const ParsedGrid grid = parse_grid_csv(csv_path);
    constexpr double kThreshold = 8.0;

    const auto value_at = [&](int r, int c) {
        return grid.values[static_cast<std::size_t>(r) *
                               static_cast<std::size_t>(grid.steps2) +
                           static_cast<std::size_t>(c)];
    };

    std::vector<int> region_id(grid.values.size(), -1);
    json regions = json::array();
    long above_total = 0;
    int next_id = 0;
    for (int r = 0; r < grid.steps1; ++r) {
        for (int c = 0; c < grid.steps2; ++c) {
            const std::size_t flat = static_cast<std::size_t>(r) *
                                         static_cast<std::size_t>(grid.steps2) +
                                     static_cast<std::size_t>(c);
            if (value_at(r, c) <= kThreshold) continue;
            ++above_total;
            if (region_id[flat] >= 0) continue;

            // Flood-fill one 4-neighbor connected region.
            long cells = 0;
            int min_r = r, max_r = r, min_c = c, max_c = c;
            double best = value_at(r, c);
            int best_r = r, best_c = c;
            std::vector<std::pair<int, int>> stack{{r, c}};
            region_id[flat] = next_id;
            while (!stack.empty()) {
                const auto [cr, cc] = stack.back();
                stack.pop_back();
                ++cells;
                min_r = std::min(min_r, cr);
                max_r = std::max(max_r, cr);
                min_c = std::min(min_c, cc);
                max_c = std::max(max_c, cc);
                if (value_at(cr, cc) > best) {
                    best = value_at(cr, cc);
                    best_r = cr;
                    best_c = cc;
                }
                const int dr[4] = {1, -1, 0, 0};
                const int dc[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nr = cr + dr[k], nc = cc + dc[k];
                    if (nr < 0 || nr >= grid.steps1 || nc < 0 || nc >= grid.steps2)
                        continue;
                    const std::size_t nflat = static_cast<std::size_t>(nr) *
                                                  static_cast<std::size_t>(grid.steps2) +
                                              static_cast<std::size_t>(nc);
                    if (region_id[nflat] >= 0 || value_at(nr, nc) <= kThreshold) continue;
                    region_id[nflat] = next_id;
                    stack.emplace_back(nr, nc);
                }
            }
            regions.push_back(json{
                {"cells", cells},
                {"bounding_box",
                 json{{"axis1_min", grid.axis1[static_cast<std::size_t>(min_r)]},
                      {"axis1_max", grid.axis1[static_cast<std::size_t>(max_r)]},
                      {"axis2_min", grid.axis2[static_cast<std::size_t>(min_c)]},
                      {"axis2_max", grid.axis2[static_cast<std::size_t>(max_c)]}}},
                {"max_S", best},
                {"argmax", {grid.axis1[static_cast<std::size_t>(best_r)],
                            grid.axis2[static_cast<std::size_t>(best_c)]}},
            });
            ++next_id;
        }
    }

    json report{
        {"source", csv_path},
        {"threshold", kThreshold},
        {"grid", {{"axis1_steps", grid.steps1}, {"axis2_steps", grid.steps2}}},
        {"cells_above_threshold", above_total},
        {"regions", regions},
        {"found", next_id > 0},
        {"note", next_id > 0
                     ? std::to_string(next_id) + " connected region(s) with S > 8 found"
                     : "none found: no cell exceeds S = 8"},
    };
    return report.dump(2) + "\n";
}

}  // namespace svet
