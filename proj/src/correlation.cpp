#include "topocorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topocorr/errors.hpp"

namespace topocorr {

double topological_difference(const Bifunction& phi1, const Bifunction& phi2,
                              const SimplicialComplex& complex, const GridSpec& grid,
                              int degree, int threads) {
    const MatchingReport report =
        matching_distance_report(phi1, phi2, complex, grid, degree, threads);
    // distance = max(candidates including component_distance), so the
    // subtraction cannot go below zero even in floating point.
    return report.distance - report.component_distance;
}

double normalized_asymmetry(double delta_f, double delta_g) {
    const double raw = 2.0 * std::max(delta_f, delta_g) / (delta_f + delta_g) - 1.0;
    return std::clamp(raw, 0.0, 1.0);
}

CorrelationReport topological_correlation(const Bifunction& phi,
                                          const SimplicialComplex& complex,
                                          const GridSpec& grid, int degree,
                                          double degeneracy_tol, int threads) {
    if (!(degeneracy_tol >= 0.0)) {
        throw std::invalid_argument("degeneracy tolerance must be non-negative");
    }

    const Bifunction diag_f(phi.first(), phi.first());
    const Bifunction diag_g(phi.second(), phi.second());
    const double a = topological_difference(phi, diag_f, complex, grid, degree, threads);
    const double b = topological_difference(phi, diag_g, complex, grid, degree, threads);

    CorrelationReport report;
    report.delta_phi_f = a;
    report.delta_phi_g = b;
    report.grid = grid;
    if (a + b <= degeneracy_tol) {
        report.branch = CorrelationBranch::Degenerate;
        report.correlation = 1.0;
    } else {
        report.branch = CorrelationBranch::Formula;
        report.correlation = normalized_asymmetry(a, b);
    }
    return report;
}

double collection_correlation(const std::vector<SpaceBifunction>& spaces,
                              const GridSpec& grid, int degree,
                              double degeneracy_tol, int threads) {
    if (spaces.empty()) {
        throw EmptyCollectionError("collection correlation needs at least one space");
    }
    double sum = 0.0;
    for (const SpaceBifunction& space : spaces) {
        sum += topological_correlation(space.phi, space.complex, grid, degree,
                                       degeneracy_tol, threads)
                   .correlation;
    }
    return sum / static_cast<double>(spaces.size());
}

} // namespace topocorr
