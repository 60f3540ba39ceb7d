#include "svet/oracle.hpp"

#include "svet/errors.hpp"
#include "svet/rng.hpp"
#include "svet/xtype.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace svet {

namespace {

Vector3 polar_vector(double polar, double azimuth) {
    const double sp = std::sin(polar);
    return {sp * std::sin(azimuth), sp * std::cos(azimuth), std::cos(polar)};
}

using Point = std::array<double, 12>;

double distance(const Point& u, const Point& v) {
    double sum = 0.0;
    for (int i = 0; i < 12; ++i) sum += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(sum);
}

std::uint64_t restart_seed(std::uint64_t base, int restart) {
    SplitMix64 mix(base ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1)));
    return mix.next_u64();
}

struct NelderMeadResult {
    Point best{};
    double value = 0.0;  // maximized objective
    int iterations = 0;
    bool converged = false;
};

// Standard Nelder-Mead on 12 angles, maximizing f.
template <typename F>
NelderMeadResult nelder_mead(F&& f, const Point& start, double edge, int max_iterations,
                             double step_tolerance, double value_tolerance) {
    constexpr int n = 12;
    std::vector<Point> x(n + 1, start);
    std::vector<double> fx(n + 1);
    for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i)][i - 1] += edge;
    for (int i = 0; i <= n; ++i) fx[static_cast<std::size_t>(i)] = f(x[static_cast<std::size_t>(i)]);

    const auto order = [&] {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[static_cast<std::size_t>(i)] = i;
        // Descending by value (we maximize); stable so ties keep insertion order.
        std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) {
            return fx[static_cast<std::size_t>(p)] > fx[static_cast<std::size_t>(q)];
        });
        std::vector<Point> nx(n + 1);
        std::vector<double> nf(n + 1);
        for (int i = 0; i <= n; ++i) {
            nx[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            nf[static_cast<std::size_t>(i)] = fx[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        }
        x.swap(nx);
        fx.swap(nf);
    };

    NelderMeadResult result;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        order();
        const double spread = fx[0] - fx[n];
        double diameter = 0.0;
        for (int i = 1; i <= n; ++i)
            diameter = std::max(diameter, distance(x[0], x[static_cast<std::size_t>(i)]));
        if (spread <= value_tolerance && diameter <= step_tolerance) {
            result.converged = true;
            break;
        }

        Point centroid{};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < 12; ++k) centroid[k] += x[static_cast<std::size_t>(i)][k] / n;

        const auto affine = [&](double t) {  // centroid + t (centroid - worst)
            Point p;
            for (int k = 0; k < 12; ++k) p[k] = centroid[k] + t * (centroid[k] - x[n][k]);
            return p;
        };

        const Point refl = affine(1.0);
        const double f_refl = f(refl);
        if (f_refl > fx[0]) {
            const Point expd = affine(2.0);
            const double f_expd = f(expd);
            if (f_expd > f_refl) {
                x[n] = expd;
                fx[n] = f_expd;
            } else {
                x[n] = refl;
                fx[n] = f_refl;
            }
            continue;
        }
        if (f_refl > fx[n - 1]) {
            x[n] = refl;
            fx[n] = f_refl;
            continue;
        }
        const bool outside = f_refl > fx[n];
        const Point contr = affine(outside ? 0.5 : -0.5);
        const double f_contr = f(contr);
        if (f_contr > (outside ? f_refl : fx[n])) {
            x[n] = contr;
            fx[n] = f_contr;
            continue;
        }
        // Shrink toward the best vertex.
        for (int i = 1; i <= n; ++i) {
            for (int k = 0; k < 12; ++k)
                x[static_cast<std::size_t>(i)][k] =
                    x[0][k] + 0.5 * (x[static_cast<std::size_t>(i)][k] - x[0][k]);
            fx[static_cast<std::size_t>(i)] = f(x[static_cast<std::size_t>(i)]);
        }
    }
    order();
    result.best = x[0];
    result.value = fx[0];
    result.iterations = iter;
    return result;
}

}  // namespace

SixDirections angle_directions(const AngleVector& v) {
    SixDirections d;
    d.a = polar_vector(v.alpha1, v.alpha2);
    d.a_prime = polar_vector(v.beta1, v.beta2);
    d.b = polar_vector(v.alpha3, v.alpha4);
    d.b_prime = polar_vector(v.beta3, v.beta4);
    d.d = polar_vector(v.alpha5, v.alpha6);
    d.d_prime = polar_vector(v.beta5, v.beta6);
    return d;
}

void validate(const OracleConfig& cfg) {
    if (cfg.restarts < 1) throw InvalidConfig("restarts must be >= 1");
    if (cfg.max_iterations < 1) throw InvalidConfig("max_iterations must be >= 1");
    if (cfg.step_tolerance <= 0) throw InvalidConfig("step_tolerance must be > 0");
    if (cfg.value_tolerance <= 0) throw InvalidConfig("value_tolerance must be > 0");
}

double angle_objective(const CorrelationTensor& t, const AngleVector& v) {
    const SixDirections d = angle_directions(v);
    return inner_max(lambdas(t, d.a, d.a_prime, d.b, d.b_prime, d.d, d.d_prime));
}

OracleOutcome maximize(const DensityOperator& rho, const OracleConfig& cfg) {
    validate(cfg);
    const CorrelationTensor tensor = pauli_tensor(rho);

    const auto objective = [&tensor](const Point& p) {
        return angle_objective(tensor, AngleVector::from_array(p));
    };

    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    Point best_point{};
    double best_value = -1.0;
    long iterations_total = 0;
    bool best_converged = false;

    for (int r = 0; r < cfg.restarts; ++r) {
        SplitMix64 rng(restart_seed(cfg.rng_seed, r));
        Point start;
        for (int k = 0; k < 12; ++k) start[k] = rng.next_double(0.0, kTwoPi);
        const NelderMeadResult nm =
            nelder_mead(objective, start, 0.5, cfg.max_iterations, cfg.step_tolerance,
                        cfg.value_tolerance);
        iterations_total += nm.iterations;
        if (nm.value > best_value) {
            best_value = nm.value;
            best_point = nm.best;
            best_converged = nm.converged;
        }
    }

    // Reconstruct the full certificate: the six searched directions plus the
    // analytically optimal pair for the third observer.
    const SixDirections d = angle_directions(AngleVector::from_array(best_point));
    const InnerSolution inner =
        inner_max_settings(lambdas(tensor, d.a, d.a_prime, d.b, d.b_prime, d.d, d.d_prime));

    OracleOutcome outcome;
    outcome.settings = MeasurementSettings{d.a,      d.a_prime, d.b, d.b_prime,
                                           inner.c,  inner.c_prime, d.d, d.d_prime};
    outcome.value = expectation(rho, outcome.settings);
    outcome.iterations_used = iterations_total;
    outcome.converged = best_converged;
    return outcome;
}

DeltaCheck delta_inequality_check(const AngleVector& v) {
    const double s1 = std::sin(v.alpha1), t1 = std::sin(v.beta1);
    const double s3 = std::sin(v.alpha3), t3 = std::sin(v.beta3);
    const double s5 = std::sin(v.alpha5), t5 = std::sin(v.beta5);
    const double S1 = s1 * s1 + t1 * t1;
    const double S3 = s3 * s3 + t3 * t3;
    const double S5 = s5 * s5 + t5 * t5;

    DeltaCheck check;
    check.delta = S1 * S3 * S5 + 4.0 * s1 * t1 * s3 * t3 * S5 +
                  4.0 * s3 * t3 * s5 * t5 * S1 + 4.0 * s1 * t1 * s5 * t5 * S3;
    check.delta_prime = (2.0 - S1) * (2.0 - S3) * (2.0 - S5);
    check.holds = check.delta + 4.0 * check.delta_prime <= 32.0 + 1e-12;
    return check;
}

SvetlichnyResult svetlichny_value(const DensityOperator& rho, const OracleConfig& cfg) {
    try {
        return svetlichny_xtype(classify_xtype(rho));
    } catch (const NotXType&) {
        const OracleOutcome outcome = maximize(rho, cfg);
        SvetlichnyResult result;
        result.value = outcome.value;
        result.measure = nonlocality_measure(outcome.value);
        result.branch = Branch::numeric;
        result.certificate = outcome.settings;
        return result;
    }
}

}  // namespace svet
