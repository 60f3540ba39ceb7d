#include "svet/json_io.hpp"

#include "svet/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace svet {

namespace {

using nlohmann::json;

json vec_json(const Vector3& v) { return json{v.x(), v.y(), v.z()}; }

Vector3 vec_from(const json& j, const char* name) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError(std::string(name) + " must be a 3-element array");
    try {
        return Vector3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
    } catch (const json::exception&) {
        throw ParseError(std::string(name) + " must hold numbers");
    }
}

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

json to_json(const DensityOperator& rho) {
    json re = json::array(), im = json::array();
    for (int r = 0; r < 16; ++r) {
        json re_row = json::array(), im_row = json::array();
        for (int c = 0; c < 16; ++c) {
            re_row.push_back(rho.entries(r, c).real());
            im_row.push_back(rho.entries(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", 16}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityOperator density_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("density operator JSON must be an object");
    const json& dim = require(j, "dim");
    if (!dim.is_number_integer() || dim.get<int>() != 16)
        throw DimensionMismatch("expected dim = 16, got " + dim.dump());
    const json& re = require(j, "re");
    const json& im = require(j, "im");
    const auto check_shape = [](const json& m, const char* name) {
        if (!m.is_array() || m.size() != 16)
            throw DimensionMismatch(std::string(name) + " must be a 16x16 array");
        for (const json& row : m)
            if (!row.is_array() || row.size() != 16)
                throw DimensionMismatch(std::string(name) + " must be a 16x16 array");
    };
    check_shape(re, "re");
    check_shape(im, "im");

    DensityOperator rho;
    try {
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c)
                rho.entries(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(),
                                            im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>());
    } catch (const json::exception&) {
        throw ParseError("re/im entries must be numbers");
    }
    return rho;
}

json to_json(const MeasurementSettings& s) {
    return json{{"a", vec_json(s.a)},   {"a_prime", vec_json(s.a_prime)},
                {"b", vec_json(s.b)},   {"b_prime", vec_json(s.b_prime)},
                {"c", vec_json(s.c)},   {"c_prime", vec_json(s.c_prime)},
                {"d", vec_json(s.d)},   {"d_prime", vec_json(s.d_prime)}};
}

MeasurementSettings settings_from_json(const json& j) {
    MeasurementSettings s;
    s.a = vec_from(require(j, "a"), "a");
    s.a_prime = vec_from(require(j, "a_prime"), "a_prime");
    s.b = vec_from(require(j, "b"), "b");
    s.b_prime = vec_from(require(j, "b_prime"), "b_prime");
    s.c = vec_from(require(j, "c"), "c");
    s.c_prime = vec_from(require(j, "c_prime"), "c_prime");
    s.d = vec_from(require(j, "d"), "d");
    s.d_prime = vec_from(require(j, "d_prime"), "d_prime");
    return s;
}

json to_json(const SvetlichnyResult& result) {
    json j{{"value", result.value},
           {"measure", result.measure},
           {"branch", to_string(result.branch)}};
    if (result.certificate) j["certificate"] = to_json(*result.certificate);
    return j;
}

json to_json(const OracleConfig& cfg) {
    return json{{"restarts", cfg.restarts},
                {"max_iterations", cfg.max_iterations},
                {"step_tolerance", cfg.step_tolerance},
                {"value_tolerance", cfg.value_tolerance},
                {"seed", cfg.rng_seed}};
}

OracleConfig oracle_config_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("oracle config must be an object");
    OracleConfig cfg;
    try {
        cfg.restarts = j.value("restarts", cfg.restarts);
        cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
        cfg.step_tolerance = j.value("step_tolerance", cfg.step_tolerance);
        cfg.value_tolerance = j.value("value_tolerance", cfg.value_tolerance);
        cfg.rng_seed = j.value("seed", cfg.rng_seed);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad oracle config: ") + e.what());
    }
    return cfg;
}

json to_json(const OracleOutcome& outcome) {
    return json{{"value", outcome.value},
                {"settings", to_json(outcome.settings)},
                {"iterations_used", outcome.iterations_used},
                {"converged", outcome.converged}};
}

AxisSpec axis_from_string(const std::string& text) {
    std::stringstream stream(text);
    std::string name, min_s, max_s, steps_s, extra;
    if (!std::getline(stream, name, ':') || !std::getline(stream, min_s, ':') ||
        !std::getline(stream, max_s, ':') || !std::getline(stream, steps_s, ':') ||
        std::getline(stream, extra, ':'))
        throw ParseError("axis must be name:min:max:steps, got '" + text + "'");
    AxisSpec axis;
    axis.name = name;
    try {
        axis.min = std::stod(min_s);
        axis.max = std::stod(max_s);
        axis.steps = std::stoi(steps_s);
    } catch (const std::exception&) {
        throw ParseError("axis must be name:min:max:steps, got '" + text + "'");
    }
    return axis;
}

std::string to_string(const AxisSpec& axis) {
    std::ostringstream out;
    out << axis.name << ':' << axis.min << ':' << axis.max << ':' << axis.steps;
    return out.str();
}

json to_json(const SweepConfig& cfg) {
    json j{{"scenario", to_string(cfg.scenario)},
           {"omega", cfg.scenario == SweepScenario::sds ? cfg.sds.omega
                                                        : cfg.schwarzschild.omega},
           {"alpha", cfg.scenario == SweepScenario::sds ? cfg.sds.alpha
                                                        : cfg.schwarzschild.alpha},
           {"axis1", json{{"name", cfg.axis1.name}, {"min", cfg.axis1.min},
                          {"max", cfg.axis1.max}, {"steps", cfg.axis1.steps}}},
           {"axis2", json{{"name", cfg.axis2.name}, {"min", cfg.axis2.min},
                          {"max", cfg.axis2.max}, {"steps", cfg.axis2.steps}}},
           {"audit", cfg.audit},
           {"threshold", cfg.threshold},
           {"seed", cfg.rng_seed},
           {"out", cfg.output_path},
           {"workers", cfg.workers},
           {"tag", cfg.tag},
           {"oracle", to_json(cfg.oracle)}};
    if (cfg.scenario == SweepScenario::sds) {
        j["n"] = cfg.sds.n;
        j["m"] = cfg.sds.m;
        j["mass"] = cfg.sds.mass;
        j["lambda"] = cfg.sds.lambda_cosmo;
    } else {
        j["n"] = cfg.schwarzschild.n;
        j["p"] = cfg.schwarzschild.p;
        j["q"] = cfg.schwarzschild.q;
        if (cfg.schwarzschild.temperature) j["T"] = *cfg.schwarzschild.temperature;
        if (cfg.schwarzschild.mass) j["mass"] = *cfg.schwarzschild.mass;
    }
    return j;
}

SweepConfig sweep_config_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("sweep config must be an object");
    static const std::set<std::string> known{
        "scenario", "n",    "p",         "q",    "m",      "mass", "lambda",
        "omega",    "alpha", "T",        "axis1", "axis2", "audit", "threshold",
        "seed",     "out",  "workers",   "tag",  "oracle"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw ParseError("unknown sweep config key '" + key + "'");

    SweepConfig cfg;
    try {
        if (j.contains("scenario")) {
            const std::string s = j["scenario"].get<std::string>();
            if (s == "schwarzschild") cfg.scenario = SweepScenario::schwarzschild;
            else if (s == "sds") cfg.scenario = SweepScenario::sds;
            else if (s == "custom-matrix") cfg.scenario = SweepScenario::custom_matrix;
            else throw ParseError("unknown scenario '" + s + "'");
        }
        if (j.contains("n")) {
            cfg.schwarzschild.n = j["n"].get<int>();
            cfg.sds.n = j["n"].get<int>();
        }
        if (j.contains("p")) cfg.schwarzschild.p = j["p"].get<int>();
        if (j.contains("q")) cfg.schwarzschild.q = j["q"].get<int>();
        if (j.contains("m")) cfg.sds.m = j["m"].get<int>();
        if (j.contains("mass")) {
            cfg.schwarzschild.mass = j["mass"].get<double>();
            cfg.schwarzschild.temperature.reset();
            cfg.sds.mass = j["mass"].get<double>();
        }
        if (j.contains("T")) {
            cfg.schwarzschild.temperature = j["T"].get<double>();
            cfg.schwarzschild.mass.reset();
        }
        if (j.contains("lambda")) cfg.sds.lambda_cosmo = j["lambda"].get<double>();
        if (j.contains("omega")) {
            cfg.schwarzschild.omega = j["omega"].get<double>();
            cfg.sds.omega = j["omega"].get<double>();
        }
        if (j.contains("alpha")) {
            cfg.schwarzschild.alpha = j["alpha"].get<double>();
            cfg.sds.alpha = j["alpha"].get<double>();
        }
        for (const auto& [key, member] :
             {std::pair<const char*, AxisSpec SweepConfig::*>{"axis1", &SweepConfig::axis1},
              {"axis2", &SweepConfig::axis2}}) {
            if (!j.contains(key)) continue;
            const json& axis = j[key];
            if (axis.is_string()) {
                cfg.*member = axis_from_string(axis.get<std::string>());
            } else if (axis.is_object()) {
                AxisSpec spec;
                spec.name = require(axis, "name").get<std::string>();
                spec.min = require(axis, "min").get<double>();
                spec.max = require(axis, "max").get<double>();
                spec.steps = require(axis, "steps").get<int>();
                cfg.*member = spec;
            } else {
                throw ParseError(std::string(key) + " must be a string or object");
            }
        }
        cfg.audit = j.value("audit", cfg.audit);
        cfg.threshold = j.value("threshold", cfg.threshold);
        cfg.rng_seed = j.value("seed", cfg.rng_seed);
        cfg.output_path = j.value("out", cfg.output_path);
        cfg.workers = j.value("workers", cfg.workers);
        cfg.tag = j.value("tag", cfg.tag);
        if (j.contains("oracle")) cfg.oracle = oracle_config_from_json(j["oracle"]);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad sweep config: ") + e.what());
    }
    return cfg;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out.good()) throw IoError("failed writing " + path);
}

}  // namespace svet
