#pragma once

#include <array>
#include <vector>

#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

struct EmbeddedMesh {
    SimplicialComplex complex;
    std::vector<std::array<double, 3>> coordinates; // one per vertex
};

/// Unit-circle samples with exact reflection symmetry: the set of points is
/// closed, coordinate-for-coordinate, under (x,y) -> (y,x), (-x,y) and
/// (x,-y) with the matching index relabelings. (1,0), (0,1), (-1,0), (0,-1)
/// appear literally. Requires n >= 4, n divisible by 4.
std::vector<std::array<double, 2>> unit_circle_points(int n);

/// Regular n-gon on the unit circle, vertex k at angle 2*pi*k/n.
EmbeddedMesh circle_mesh(int n);

/// Octahedron subdivided `subdivisions` times with vertices reprojected to
/// the unit sphere; the six axis poles are vertices at every level.
/// Guarded to subdivisions <= 6.
EmbeddedMesh sphere_mesh(int subdivisions);

/// Torus of revolution, major radius R, minor radius r, on an m-by-n angle
/// lattice with two triangles per cell; the diagonal direction alternates by
/// column so the mesh keeps the lattice's reflection symmetries. m, n must
/// be multiples of 4.
EmbeddedMesh torus_mesh(int m, int n, double major_radius, double minor_radius);

enum class Axis { X, Y, Z };

ScalarField projection_field(const EmbeddedMesh& mesh, Axis axis);

} // namespace topocorr
