#pragma once

#include <span>
#include <vector>

#include "topocorr/bottleneck.hpp"
#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

/// A positive-slope filtering line: direction (cos theta, sin theta) with
/// theta in (0, pi/2), passing through (beta, -beta). The direction
/// components are stored explicitly so that mirrored() is an exact
/// involution on doubles: it swaps them and negates beta, which is what
/// makes swap-equivariance of the matching distance hold bit-for-bit.
class FilteringLine {
public:
    static FilteringLine from_angle(double theta, double beta);

    double theta() const { return theta_; }
    double beta() const { return beta_; }
    double cos_theta() const { return cos_theta_; }
    double sin_theta() const { return sin_theta_; }

    // The line for the component-swapped problem: direction components
    // swapped, offset negated.
    FilteringLine mirrored() const {
        return FilteringLine(1.5707963267948966 - theta_, -beta_, sin_theta_, cos_theta_);
    }

private:
    friend std::vector<FilteringLine> line_grid(const struct GridSpec& grid,
                                                double value_range);

    FilteringLine(double theta, double beta, double cos_theta, double sin_theta)
        : theta_(theta), beta_(beta), cos_theta_(cos_theta), sin_theta_(sin_theta) {}

    double theta_;
    double beta_;
    double cos_theta_;
    double sin_theta_;
};

/// Sampling policy for the foliation search. Angles are placed at the
/// quantiles k/(n_theta+1) of (0, pi/2) and offsets at the interior
/// quantiles of [-beta_bound*range, +beta_bound*range], so both sets are
/// symmetric (exactly, by mirrored construction). After the grid pass the
/// best line's neighborhood is re-sampled refine_rounds times, shrinking
/// the window by refine_shrink each round.
struct GridSpec {
    int n_theta = 32;
    int n_beta = 32;
    double beta_bound = 1.0;
    int refine_rounds = 3;
    double refine_shrink = 0.5;

    void validate() const;
};

/// One-parameter reduction of the bifunction along a line:
/// min(cos t, sin t) * max((f - beta)/cos t, (g + beta)/sin t) per vertex.
ScalarField push_to_line(const Bifunction& phi, const FilteringLine& line);

/// The base sampling grid: deterministic order (angles outer, offsets
/// inner), mirror-symmetric as a set.
std::vector<FilteringLine> line_grid(const GridSpec& grid, double value_range);

/// Max over the given lines of the degree-k bottleneck distance between the
/// pushed filtrations of the two bifunctions. No component lines, no
/// refinement; monotone under adding lines.
double matching_distance_over_lines(const Bifunction& phi1, const Bifunction& phi2,
                                    const SimplicialComplex& complex,
                                    std::span<const FilteringLine> lines, int degree,
                                    int threads = 1);

struct MatchingReport {
    double distance;           // the matching-distance estimate (a lower bound)
    double component_distance; // max of the two componentwise bottleneck distances
    double best_theta;         // line attaining the max over sampled lines
    double best_beta;
    std::size_t lines_evaluated;
};

/// Sampled matching distance between two bifunctions on one complex: max of
/// the per-line bottleneck distances over the grid (plus refinement) and of
/// the horizontal/vertical contributions d_B(f1,f2), d_B(g1,g2). The result
/// is a certified lower bound of the supremum and never smaller than the
/// component distances. The base pass samples the grid together with its
/// ceil-halved coarsenings, so with refinement off, doubling n_theta and
/// n_beta enlarges the sampled set and never decreases the estimate.
double matching_distance(const Bifunction& phi1, const Bifunction& phi2,
                         const SimplicialComplex& complex, const GridSpec& grid,
                         int degree, int threads = 1);

MatchingReport matching_distance_report(const Bifunction& phi1, const Bifunction& phi2,
                                        const SimplicialComplex& complex,
                                        const GridSpec& grid, int degree,
                                        int threads = 1);

} // namespace topocorr
