#include "topocorr/matching.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "topocorr/errors.hpp"
#include "topocorr/filtration.hpp"
#include "topocorr/persistence.hpp"

namespace topocorr {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kQuarterPi = 0.7853981633974483;
constexpr double kInvSqrt2 = 0.7071067811865476;
// Refinement windows never leave (0, pi/2); base grids place their own
// angles, so this floor only guards the windows.
constexpr double kMinWindowTheta = 1e-4;
constexpr int kRefineGridSize = 5;

} // namespace

FilteringLine FilteringLine::from_angle(double theta, double beta) {
    if (!(theta > 0.0 && theta < kHalfPi)) {
        throw std::invalid_argument("filtering line angle must lie in (0, pi/2)");
    }
    if (!std::isfinite(beta)) {
        throw NonFiniteValueError("filtering line offset must be finite");
    }
    if (theta == kQuarterPi) {
        return FilteringLine(theta, beta, kInvSqrt2, kInvSqrt2);
    }
    return FilteringLine(theta, beta, std::cos(theta), std::sin(theta));
}

void GridSpec::validate() const {
    if (n_theta < 1) throw std::invalid_argument("n_theta must be positive");
    if (n_beta < 1) throw std::invalid_argument("n_beta must be positive");
    if (!(beta_bound > 0.0) || !std::isfinite(beta_bound)) {
        throw std::invalid_argument("beta_bound must be a positive finite number");
    }
    if (refine_rounds < 0) throw std::invalid_argument("refine_rounds must be non-negative");
    if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) {
        throw std::invalid_argument("refine_shrink must lie in (0, 1)");
    }
}

ScalarField push_to_line(const Bifunction& phi, const FilteringLine& line) {
    const double c = line.cos_theta();
    const double s = line.sin_theta();
    const double beta = line.beta();
    const double weight = std::min(c, s);
    std::vector<double> pushed(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        pushed[i] = weight * std::max((phi.first()[i] - beta) / c,
                                      (phi.second()[i] + beta) / s);
    }
    return ScalarField(std::move(pushed));
}

std::vector<FilteringLine> line_grid(const GridSpec& grid, double value_range) {
    grid.validate();
    if (!std::isfinite(value_range) || value_range < 0.0) {
        throw std::invalid_argument("value_range must be finite and non-negative");
    }
    const int nt = grid.n_theta;
    const int nb = grid.n_beta;

    // The upper halves mirror the lower halves by swapping/negating stored
    // doubles, so the grid is symmetric as a set, exactly.
    struct Direction {
        double theta, c, s;
    };
    std::vector<Direction> directions(static_cast<std::size_t>(nt));
    for (int k = 0; k < nt - 1 - k; ++k) {
        const double t = kHalfPi * (static_cast<double>(k + 1) / static_cast<double>(nt + 1));
        const double c = std::cos(t);
        const double s = std::sin(t);
        directions[static_cast<std::size_t>(k)] = {t, c, s};
        directions[static_cast<std::size_t>(nt - 1 - k)] = {kHalfPi - t, s, c};
    }
    if (nt % 2 == 1) {
        directions[static_cast<std::size_t>(nt / 2)] = {kQuarterPi, kInvSqrt2, kInvSqrt2};
    }

    std::vector<double> betas(static_cast<std::size_t>(nb));
    const double bound = grid.beta_bound * value_range;
    for (int j = 0; j < nb - 1 - j; ++j) {
        const double b =
            bound * (2.0 * static_cast<double>(j + 1) / static_cast<double>(nb + 1) - 1.0);
        betas[static_cast<std::size_t>(j)] = b;
        betas[static_cast<std::size_t>(nb - 1 - j)] = -b;
    }
    if (nb % 2 == 1) betas[static_cast<std::size_t>(nb / 2)] = 0.0;

    std::vector<FilteringLine> lines;
    lines.reserve(static_cast<std::size_t>(nt) * static_cast<std::size_t>(nb));
    for (const Direction& d : directions) {
        for (double b : betas) {
            lines.push_back(FilteringLine(d.theta, b, d.c, d.s));
        }
    }
    return lines;
}

namespace {

double line_value(const Bifunction& phi1, const Bifunction& phi2,
                  const SimplicialComplex& complex, const FilteringLine& line,
                  int degree) {
    const PersistenceDiagram dgm1 =
        compute_persistence(lower_star_filtration(complex, push_to_line(phi1, line)), degree);
    const PersistenceDiagram dgm2 =
        compute_persistence(lower_star_filtration(complex, push_to_line(phi2, line)), degree);
    const ExtendedDistance d = bottleneck_distance(dgm1, dgm2);
    if (d.is_infinite()) {
        throw IncomparableDiagramsError(
            "diagrams along a filtering line have different essential counts");
    }
    return d.value();
}

std::vector<double> evaluate_lines(const Bifunction& phi1, const Bifunction& phi2,
                                   const SimplicialComplex& complex,
                                   std::span<const FilteringLine> lines, int degree,
                                   int threads) {
    std::vector<double> values(lines.size());
    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers =
        std::min<std::size_t>(threads <= 0 ? hardware : static_cast<unsigned>(threads),
                              lines.size());

    if (workers <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            values[i] = line_value(phi1, phi2, complex, lines[i], degree);
        }
        return values;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        try {
            for (std::size_t i = next.fetch_add(1); i < lines.size();
                 i = next.fetch_add(1)) {
                if (failed.load(std::memory_order_relaxed)) return;
                values[i] = line_value(phi1, phi2, complex, lines[i], degree);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return values;
}

// Mirror-invariant identity of a line: sorted direction components plus the
// absolute offset. Refinement windows are a function of this key alone, so a
// run and its component-swapped twin explore identical line sets.
struct CanonicalKey {
    double a, b, abs_beta;
};

CanonicalKey key_of(const FilteringLine& line) {
    return {std::min(line.cos_theta(), line.sin_theta()),
            std::max(line.cos_theta(), line.sin_theta()), std::fabs(line.beta())};
}

bool key_less(const CanonicalKey& x, const CanonicalKey& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.abs_beta < y.abs_beta;
}

struct BestLine {
    bool valid = false;
    double value = 0.0;
    CanonicalKey key{0.0, 0.0, 0.0};
    double theta = 0.0;
    double beta = 0.0;
};

void consider(BestLine& best, double value, const FilteringLine& line) {
    const CanonicalKey key = key_of(line);
    if (!best.valid || value > best.value ||
        (value == best.value && key_less(key, best.key))) {
        best = {true, value, key, line.theta(), line.beta()};
    }
}

std::vector<FilteringLine> refinement_window(const CanonicalKey& center, double h_theta,
                                             double h_beta, double beta_limit) {
    const double theta0 = std::atan2(center.a, center.b); // in (0, pi/4]
    const double beta0 = center.abs_beta;
    const int half = kRefineGridSize / 2;

    std::vector<FilteringLine> window;
    window.reserve(2u * kRefineGridSize * kRefineGridSize);
    for (int i = 0; i < kRefineGridSize; ++i) {
        double t = theta0 + h_theta * static_cast<double>(i - half) / static_cast<double>(half);
        t = std::clamp(t, kMinWindowTheta, kHalfPi - kMinWindowTheta);
        for (int j = 0; j < kRefineGridSize; ++j) {
            double b = beta0 + h_beta * static_cast<double>(j - half) / static_cast<double>(half);
            b = std::clamp(b, -beta_limit, beta_limit);
            const FilteringLine line = FilteringLine::from_angle(t, b);
            window.push_back(line);
            window.push_back(line.mirrored());
        }
    }
    return window;
}

void check_same_complex(const Bifunction& phi1, const Bifunction& phi2,
                        const SimplicialComplex& complex) {
    const auto n = static_cast<std::size_t>(complex.vertex_count());
    if (phi1.size() != n || phi2.size() != n) {
        throw DimensionMismatchError("bifunctions must be defined on the complex's vertices");
    }
}

// The base pass samples the requested grid together with all its ceil-halved
// coarsenings. The halving chain of (2n) passes through (n), so doubling the
// grid counts yields a superset of lines and the estimate cannot decrease.
std::vector<FilteringLine> multilevel_grid(const GridSpec& grid, double value_range) {
    std::vector<FilteringLine> lines;
    GridSpec level = grid;
    while (true) {
        const std::vector<FilteringLine> layer = line_grid(level, value_range);
        lines.insert(lines.end(), layer.begin(), layer.end());
        if (level.n_theta == 1 && level.n_beta == 1) break;
        level.n_theta = (level.n_theta + 1) / 2;
        level.n_beta = (level.n_beta + 1) / 2;
    }
    return lines;
}

} // namespace

double matching_distance_over_lines(const Bifunction& phi1, const Bifunction& phi2,
                                    const SimplicialComplex& complex,
                                    std::span<const FilteringLine> lines, int degree,
                                    int threads) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    check_same_complex(phi1, phi2, complex);
    const std::vector<double> values =
        evaluate_lines(phi1, phi2, complex, lines, degree, threads);
    double result = 0.0;
    for (double v : values) result = std::max(result, v);
    return result;
}

MatchingReport matching_distance_report(const Bifunction& phi1, const Bifunction& phi2,
                                        const SimplicialComplex& complex,
                                        const GridSpec& grid, int degree, int threads) {
    grid.validate();
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    check_same_complex(phi1, phi2, complex);

    // Horizontal and vertical members of the foliation: the filtrations of
    // the components themselves.
    auto component_distance = [&](const ScalarField& a, const ScalarField& b) {
        const PersistenceDiagram da =
            compute_persistence(lower_star_filtration(complex, a), degree);
        const PersistenceDiagram db =
            compute_persistence(lower_star_filtration(complex, b), degree);
        const ExtendedDistance d = bottleneck_distance(da, db);
        if (d.is_infinite()) {
            throw IncomparableDiagramsError(
                "component diagrams have different essential counts");
        }
        return d.value();
    };
    const double component = std::max(component_distance(phi1.first(), phi2.first()),
                                      component_distance(phi1.second(), phi2.second()));

    const double range = std::max(std::max(phi1.first().max_abs(), phi1.second().max_abs()),
                                  std::max(phi2.first().max_abs(), phi2.second().max_abs()));

    const std::vector<FilteringLine> base = multilevel_grid(grid, range);
    const std::vector<double> base_values =
        evaluate_lines(phi1, phi2, complex, base, degree, threads);

    BestLine best;
    for (std::size_t i = 0; i < base.size(); ++i) consider(best, base_values[i], base[i]);
    std::size_t evaluated = base.size();

    const double bound = grid.beta_bound * range;
    double h_theta = kHalfPi / static_cast<double>(grid.n_theta + 1);
    double h_beta = 2.0 * bound / static_cast<double>(grid.n_beta + 1);
    for (int round = 0; round < grid.refine_rounds; ++round) {
        h_theta *= grid.refine_shrink;
        h_beta *= grid.refine_shrink;
        const std::vector<FilteringLine> window =
            refinement_window(best.key, h_theta, h_beta, bound);
        const std::vector<double> window_values =
            evaluate_lines(phi1, phi2, complex, window, degree, threads);
        for (std::size_t i = 0; i < window.size(); ++i) {
            consider(best, window_values[i], window[i]);
        }
        evaluated += window.size();
    }

    return {std::max(best.value, component), component, best.theta, best.beta, evaluated};
}

double matching_distance(const Bifunction& phi1, const Bifunction& phi2,
                         const SimplicialComplex& complex, const GridSpec& grid,
                         int degree, int threads) {
    return matching_distance_report(phi1, phi2, complex, grid, degree, threads).distance;
}

} // namespace topocorr
