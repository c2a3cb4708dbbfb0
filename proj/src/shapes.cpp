#include "topocorr/shapes.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace topocorr {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kInvSqrt2 = 0.7071067811865476;

} // namespace

std::vector<std::array<double, 2>> unit_circle_points(int n) {
    if (n < 4 || n % 4 != 0) {
        throw std::invalid_argument("circle sampling needs n to be a positive multiple of 4, got " +
                                    std::to_string(n));
    }
    const int quarter = n / 4;
    std::vector<std::array<double, 2>> points(static_cast<std::size_t>(n));

    // First quadrant: libm for the lower octant, exact mirrors above it.
    points[0] = {1.0, 0.0};
    points[static_cast<std::size_t>(quarter)] = {0.0, 1.0};
    for (int k = 1; k < quarter - k; ++k) {
        const double t = kTwoPi * (static_cast<double>(k) / static_cast<double>(n));
        const double c = std::cos(t);
        const double s = std::sin(t);
        points[static_cast<std::size_t>(k)] = {c, s};
        points[static_cast<std::size_t>(quarter - k)] = {s, c};
    }
    if (quarter % 2 == 0 && quarter >= 2) {
        points[static_cast<std::size_t>(quarter / 2)] = {kInvSqrt2, kInvSqrt2};
    }

    // Remaining quadrants by sign reflection.
    for (int k = quarter + 1; k <= n / 2; ++k) {
        const auto& p = points[static_cast<std::size_t>(n / 2 - k)];
        points[static_cast<std::size_t>(k)] = {-p[0], p[1]};
    }
    for (int k = n / 2 + 1; k < n; ++k) {
        const auto& p = points[static_cast<std::size_t>(n - k)];
        points[static_cast<std::size_t>(k)] = {p[0], -p[1]};
    }
    return points;
}

EmbeddedMesh circle_mesh(int n) {
    const auto points = unit_circle_points(n);

    EmbeddedMesh mesh;
    mesh.coordinates.reserve(static_cast<std::size_t>(n));
    for (const auto& p : points) mesh.coordinates.push_back({p[0], p[1], 0.0});

    std::vector<Simplex> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        edges.push_back({k, (k + 1) % n});
    }
    mesh.complex = build_complex(edges, n);
    return mesh;
}

EmbeddedMesh sphere_mesh(int subdivisions) {
    if (subdivisions < 0 || subdivisions > 6) {
        throw std::invalid_argument("sphere subdivisions must lie in [0, 6], got " +
                                    std::to_string(subdivisions));
    }

    std::vector<std::array<double, 3>> vertices = {
        {1.0, 0.0, 0.0},  {-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0},
        {0.0, -1.0, 0.0}, {0.0, 0.0, 1.0},  {0.0, 0.0, -1.0},
    };
    std::vector<std::array<int, 3>> faces = {
        {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
        {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5},
    };

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<int, int>, int> midpoint_of_edge;
        auto midpoint = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            if (auto it = midpoint_of_edge.find(key); it != midpoint_of_edge.end()) {
                return it->second;
            }
            const auto& pa = vertices[static_cast<std::size_t>(key.first)];
            const auto& pb = vertices[static_cast<std::size_t>(key.second)];
            std::array<double, 3> p = {(pa[0] + pb[0]) * 0.5, (pa[1] + pb[1]) * 0.5,
                                       (pa[2] + pb[2]) * 0.5};
            const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
            p = {p[0] / norm, p[1] / norm, p[2] / norm};
            const int index = static_cast<int>(vertices.size());
            vertices.push_back(p);
            midpoint_of_edge.emplace(key, index);
            return index;
        };

        std::vector<std::array<int, 3>> refined;
        refined.reserve(faces.size() * 4);
        for (const auto& [a, b, c] : faces) {
            const int ab = midpoint(a, b);
            const int bc = midpoint(b, c);
            const int ca = midpoint(c, a);
            refined.push_back({a, ab, ca});
            refined.push_back({b, bc, ab});
            refined.push_back({c, ca, bc});
            refined.push_back({ab, bc, ca});
        }
        faces = std::move(refined);
    }

    EmbeddedMesh mesh;
    mesh.coordinates = std::move(vertices);
    std::vector<Simplex> triangles;
    triangles.reserve(faces.size());
    for (const auto& [a, b, c] : faces) triangles.push_back({a, b, c});
    mesh.complex = build_complex(triangles, static_cast<int>(mesh.coordinates.size()));
    return mesh;
}

EmbeddedMesh torus_mesh(int m, int n, double major_radius, double minor_radius) {
    if (m < 4 || m % 4 != 0 || n < 4 || n % 4 != 0) {
        throw std::invalid_argument("torus lattice sizes must be positive multiples of 4");
    }
    if (!(std::isfinite(major_radius) && std::isfinite(minor_radius)) ||
        !(major_radius > minor_radius && minor_radius > 0.0)) {
        throw std::invalid_argument("torus radii must satisfy R > r > 0");
    }

    const auto big = unit_circle_points(m);   // (cos theta, sin theta)
    const auto small = unit_circle_points(n); // (cos phi, sin phi)

    EmbeddedMesh mesh;
    mesh.coordinates.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    auto vertex = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const double ring = major_radius + minor_radius * small[static_cast<std::size_t>(j)][0];
            mesh.coordinates[static_cast<std::size_t>(vertex(i, j))] = {
                ring * big[static_cast<std::size_t>(i)][0],
                ring * big[static_cast<std::size_t>(i)][1],
                minor_radius * small[static_cast<std::size_t>(j)][1],
            };
        }
    }

    // Alternating the diagonal by column keeps the triangulation invariant
    // under the lattice reflections that swap the x and y projections.
    std::vector<Simplex> triangles;
    triangles.reserve(2u * static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int a = vertex(i, j);
            const int b = vertex((i + 1) % m, j);
            const int c = vertex(i, (j + 1) % n);
            const int d = vertex((i + 1) % m, (j + 1) % n);
            if (i % 2 == 0) {
                triangles.push_back({a, b, d});
                triangles.push_back({a, d, c});
            } else {
                triangles.push_back({a, b, c});
                triangles.push_back({b, d, c});
            }
        }
    }
    mesh.complex = build_complex(triangles, m * n);
    return mesh;
}

ScalarField projection_field(const EmbeddedMesh& mesh, Axis axis) {
    const std::size_t component = axis == Axis::X ? 0 : axis == Axis::Y ? 1 : 2;
    std::vector<double> values;
    values.reserve(mesh.coordinates.size());
    for (const auto& p : mesh.coordinates) values.push_back(p[component]);
    return ScalarField(std::move(values));
}

} // namespace topocorr
