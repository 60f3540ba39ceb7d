#include "svet/spacetime.hpp"

#include "svet/errors.hpp"
#include "svet/xtype.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace svet {

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot2 = std::numbers::sqrt2;
constexpr double kTempMassTol = 1e-9;
constexpr double kNariaiGuard = 1e-9;

SvetlichnyResult branch_result(double coherence, double diagonal) {
    SvetlichnyResult result;
    if (coherence >= diagonal) {
        result.value = coherence;
        result.branch = Branch::coherence;
    } else {
        result.value = diagonal;
        result.branch = Branch::diagonal;
    }
    result.measure = nonlocality_measure(result.value);
    return result;
}

}  // namespace

void validate(const SchwarzschildScenario& s) {
    if (!(s.alpha >= 0.0 && s.alpha <= 1.0))
        throw InvalidScenario("alpha must lie in [0, 1]");
    if (!(s.omega > 0.0)) throw InvalidScenario("omega must be > 0");
    if (s.n < 1 || s.n > 3) throw InvalidScenario("n must be 1, 2 or 3");
    if (s.p < 0 || s.q < 0 || s.p + s.q != s.n)
        throw InvalidScenario("need p, q >= 0 with p + q = n");
    if (!s.temperature && !s.mass)
        throw InvalidScenario("provide a temperature or a mass");
    if (s.temperature && !(*s.temperature > 0.0))
        throw InvalidScenario("temperature must be > 0");
    if (s.mass && !(*s.mass > 0.0)) throw InvalidScenario("mass must be > 0");
    if (s.temperature && s.mass &&
        std::abs(*s.temperature - hawking_temperature(*s.mass)) > kTempMassTol)
        throw InvalidScenario("temperature and mass disagree: T != 1/(8 pi M)");
}

double effective_temperature(const SchwarzschildScenario& s) {
    if (s.temperature) return *s.temperature;
    return hawking_temperature(*s.mass);
}

double hawking_temperature(double mass) {
    if (!(mass > 0.0)) throw NonPositiveMass("mass must be > 0");
    return 1.0 / (8.0 * kPi * mass);
}

SqueezeCoeffs squeeze_coeffs(double omega, double temperature) {
    if (!(omega > 0.0)) throw NonPositive("omega must be > 0");
    if (!(temperature > 0.0)) throw NonPositive("temperature must be > 0");
    const double x = omega / temperature;
    SqueezeCoeffs c;
    c.cos_sq = 1.0 / std::sqrt(std::exp(-x) + 1.0);
    c.sin_sq = 1.0 / std::sqrt(std::exp(x) + 1.0);
    return c;
}

ModeState build_schwarzschild_state(const SchwarzschildScenario& s) {
    validate(s);
    const double beta = std::sqrt(std::max(0.0, 1.0 - s.alpha * s.alpha));
    const SqueezeCoeffs c = squeeze_coeffs(s.omega, effective_temperature(s));

    std::vector<ModeLabel> kruskal;
    for (int i = 1; i <= 4; ++i) kruskal.push_back({ModeKind::kruskal, i});
    ModeState state = make_two_branch_state(kruskal, s.alpha, beta);
    for (int i = 1; i <= s.n; ++i) {
        state = squeeze_mode(state, {ModeKind::kruskal, i}, {ModeKind::out, i},
                             {ModeKind::in, i}, c.cos_sq, c.sin_sq);
    }
    return state;
}

DensityOperator reduce_schwarzschild(const SchwarzschildScenario& s) {
    const ModeState state = build_schwarzschild_state(s);
    std::vector<ModeLabel> keep;
    for (int i = s.n + 1; i <= 4; ++i) keep.push_back({ModeKind::kruskal, i});
    for (int i = 1; i <= s.p; ++i) keep.push_back({ModeKind::out, i});
    for (int i = s.p + 1; i <= s.n; ++i) keep.push_back({ModeKind::in, i});
    return partial_trace(state, keep);
}

SvetlichnyResult svetlichny_schwarzschild(const SchwarzschildScenario& s) {
    validate(s);
    const double temperature = effective_temperature(s);
    const SqueezeCoeffs c = squeeze_coeffs(s.omega, temperature);
    const double beta_sq = 1.0 - s.alpha * s.alpha;
    const double coherence = 16.0 * kRoot2 * s.alpha * std::sqrt(std::max(0.0, beta_sq)) *
                             std::pow(c.cos_sq, s.p) * std::pow(c.sin_sq, s.q);
    const double diag_n = s.alpha * s.alpha *
                              std::pow(std::tanh(s.omega / (2.0 * temperature)), s.n) +
                          (s.q % 2 == 0 ? 1.0 : -1.0) * beta_sq;
    return branch_result(coherence, 4.0 * std::abs(diag_n));
}

HorizonRadii sds_horizons(double mass, double lambda_cosmo) {
    if (!(mass > 0.0)) throw NonPositiveMass("mass must be > 0");
    if (!(lambda_cosmo > 0.0)) throw NonPositive("cosmological constant must be > 0");
    const double x = 3.0 * mass * std::sqrt(lambda_cosmo);
    if (!(x < 1.0 - kNariaiGuard))
        throw NariaiViolation("3 M sqrt(Lambda) = " + std::to_string(x) +
                              " is at or beyond the extremal limit 1");
    const double acx = std::acos(x);
    HorizonRadii r;
    r.r_H = (2.0 / std::sqrt(lambda_cosmo)) * std::cos((kPi + acx) / 3.0);
    r.r_C = (2.0 / std::sqrt(lambda_cosmo)) * std::cos((acx - kPi) / 3.0);
    return r;
}

SdSThermo sds_thermo(double mass, double lambda_cosmo, double omega) {
    if (!(omega > 0.0)) throw NonPositive("omega must be > 0");
    const HorizonRadii r = sds_horizons(mass, lambda_cosmo);

    SdSThermo th;
    th.r_H = r.r_H;
    th.r_C = r.r_C;
    th.k_H = lambda_cosmo * (2.0 * r.r_H + r.r_C) * (r.r_C - r.r_H) / (6.0 * r.r_H);
    th.k_C = lambda_cosmo * (2.0 * r.r_C + r.r_H) * (r.r_C - r.r_H) / (6.0 * r.r_C);
    th.T_H = th.k_H / (2.0 * kPi);
    th.T_C = th.k_C / (2.0 * kPi);

    const SqueezeCoeffs horizon = squeeze_coeffs(omega, th.T_H);
    const SqueezeCoeffs cosmological = squeeze_coeffs(omega, th.T_C);
    th.cos_r = horizon.cos_sq;
    th.sin_r = horizon.sin_sq;
    th.cos_w = cosmological.cos_sq;
    th.sin_w = cosmological.sin_sq;
    return th;
}

void validate(const SdSScenario& s) {
    if (!(s.alpha >= 0.0 && s.alpha <= 1.0))
        throw InvalidScenario("alpha must lie in [0, 1]");
    if (!(s.omega > 0.0)) throw InvalidScenario("omega must be > 0");
    if (!(s.mass > 0.0)) throw InvalidScenario("mass must be > 0");
    if (!(s.lambda_cosmo > 0.0))
        throw InvalidScenario("cosmological constant must be > 0");
    if (s.n < 1 || s.m < 1 || s.n + s.m != 4)
        throw InvalidScenario("need n >= 1, m >= 1 with n + m = 4");
    if (!(3.0 * s.mass * std::sqrt(s.lambda_cosmo) < 1.0 - kNariaiGuard))
        throw NariaiViolation("3 M sqrt(Lambda) must stay below the extremal limit 1");
}

DensityOperator build_sds_state(const SdSScenario& s) {
    validate(s);
    const double beta = std::sqrt(std::max(0.0, 1.0 - s.alpha * s.alpha));
    const SdSThermo th = sds_thermo(s.mass, s.lambda_cosmo, s.omega);

    std::vector<ModeLabel> initial;
    for (int i = 1; i <= s.n; ++i) initial.push_back({ModeKind::A, i});
    for (int j = 1; j <= s.m; ++j) initial.push_back({ModeKind::B, j});
    ModeState state = make_two_branch_state(initial, s.alpha, beta);
    // Squeeze in place: each A_i becomes the pair (A_i, L_i), each B_j the
    // pair (B_j, R_j).
    for (int i = 1; i <= s.n; ++i)
        state = squeeze_mode(state, {ModeKind::A, i}, {ModeKind::A, i},
                             {ModeKind::L, i}, th.cos_r, th.sin_r);
    for (int j = 1; j <= s.m; ++j)
        state = squeeze_mode(state, {ModeKind::B, j}, {ModeKind::B, j},
                             {ModeKind::R, j}, th.cos_w, th.sin_w);

    std::vector<ModeLabel> keep;
    for (int i = 1; i <= s.n; ++i) keep.push_back({ModeKind::A, i});
    for (int j = 1; j <= s.m; ++j) keep.push_back({ModeKind::B, j});
    return partial_trace(state, keep);
}

SvetlichnyResult svetlichny_sds(const SdSScenario& s) {
    validate(s);
    const SdSThermo th = sds_thermo(s.mass, s.lambda_cosmo, s.omega);
    const double beta_sq = 1.0 - s.alpha * s.alpha;
    const double coherence = 16.0 * kRoot2 * s.alpha * std::sqrt(std::max(0.0, beta_sq)) *
                             std::pow(th.cos_r, s.n) * std::pow(th.cos_w, s.m);
    const double diag_n = s.alpha * s.alpha *
                              std::pow(std::tanh(s.omega / (2.0 * th.T_H)), s.n) *
                              std::pow(std::tanh(s.omega / (2.0 * th.T_C)), s.m) +
                          beta_sq;
    return branch_result(coherence, 4.0 * std::abs(diag_n));
}

}  // namespace svet
