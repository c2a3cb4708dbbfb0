#pragma once

#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

/// Simplices of the complex whose vertices all satisfy first <= u and
/// second <= v. The result is a subcomplex (closed under faces).
SimplicialComplex sublevel_complex(const SimplicialComplex& complex,
                                   const Bifunction& phi, double u, double v);

/// Rank of the degree-k simplicial homology (Z/2 coefficients) of the
/// sublevel subcomplex at (u, v). Zero for the empty subcomplex.
int betti_at(const SimplicialComplex& complex, const Bifunction& phi,
             double u, double v, int degree);

} // namespace topocorr
