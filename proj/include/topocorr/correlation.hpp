#pragma once

#include <vector>

#include "topocorr/matching.hpp"
#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

/// Surplus of the biparameter comparison over the best monoparameter one:
/// matching distance minus the larger componentwise bottleneck distance.
/// Non-negative by construction, because the matching distance's candidate
/// set contains both component distances.
double topological_difference(const Bifunction& phi1, const Bifunction& phi2,
                              const SimplicialComplex& complex, const GridSpec& grid,
                              int degree, int threads = 1);

enum class CorrelationBranch {
    Formula,   // 2*max(a,b)/(a+b) - 1
    Degenerate // a + b below tolerance: no surplus at all, correlation 1
};

struct CorrelationReport {
    double delta_phi_f = 0.0; // difference against (f, f)
    double delta_phi_g = 0.0; // difference against (g, g)
    double correlation = 0.0; // in [0, 1]
    CorrelationBranch branch = CorrelationBranch::Degenerate;
    GridSpec grid;
};

constexpr double kDefaultDegeneracyTol = 1e-9;

/// The normalization step of the correlation on its own:
/// 2*max(a,b)/(a+b) - 1 for non-negative differences, clamped to [0,1]
/// against round-off of the division.
double normalized_asymmetry(double delta_f, double delta_g);

/// Correlation of the components of phi = (f, g): compares phi against the
/// diagonal bifunctions F = (f, f) and G = (g, g) on one shared grid and
/// normalizes the asymmetry of the two differences. 1 means the components
/// carry the same information, 0 a balanced nonzero surplus.
CorrelationReport topological_correlation(const Bifunction& phi,
                                          const SimplicialComplex& complex,
                                          const GridSpec& grid, int degree,
                                          double degeneracy_tol = kDefaultDegeneracyTol,
                                          int threads = 1);

struct SpaceBifunction {
    SimplicialComplex complex;
    Bifunction phi;
};

/// Arithmetic mean of the per-space correlations; the collection may mix
/// complexes of different sizes but shares one grid spec.
double collection_correlation(const std::vector<SpaceBifunction>& spaces,
                              const GridSpec& grid, int degree,
                              double degeneracy_tol = kDefaultDegeneracyTol,
                              int threads = 1);

} // namespace topocorr
