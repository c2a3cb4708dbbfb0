#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "topocorr/filtration.hpp"
#include "topocorr/persistence.hpp"
#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr::testing {

using Rng = std::mt19937_64;

inline SimplicialComplex random_graph_complex(Rng& rng, int max_vertices = 50,
                                              int max_edges = 150) {
    std::uniform_int_distribution<int> vertex_count_dist(1, max_vertices);
    const int n = vertex_count_dist(rng);
    std::uniform_int_distribution<int> edge_count_dist(0, max_edges);
    const int target_edges = edge_count_dist(rng);

    std::vector<Simplex> simplices;
    for (int v = 0; v < n; ++v) simplices.push_back({v});
    std::set<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> vertex_dist(0, n - 1);
    for (int attempt = 0; attempt < target_edges; ++attempt) {
        int a = vertex_dist(rng);
        int b = vertex_dist(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (edges.insert({a, b}).second) simplices.push_back({a, b});
    }
    return build_complex(simplices, n);
}

// Occasionally includes triangles, for code paths beyond graphs.
inline SimplicialComplex random_complex(Rng& rng, int max_vertices = 30) {
    SimplicialComplex graph = random_graph_complex(rng, max_vertices, 3 * max_vertices);
    std::vector<Simplex> simplices = graph.simplices();
    std::uniform_int_distribution<int> triangle_count_dist(0, 5);
    std::uniform_int_distribution<int> vertex_dist(0, graph.vertex_count() - 1);
    const int triangles = triangle_count_dist(rng);
    for (int t = 0; t < triangles; ++t) {
        int a = vertex_dist(rng), b = vertex_dist(rng), c = vertex_dist(rng);
        if (a == b || b == c || a == c) continue;
        simplices.push_back({a, b, c});
    }
    return build_complex(simplices, graph.vertex_count());
}

inline ScalarField random_field(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> value_dist(-1.0, 1.0);
    std::vector<double> values(n);
    for (double& v : values) v = value_dist(rng);
    return ScalarField(std::move(values));
}

inline Bifunction random_bifunction(Rng& rng, std::size_t n) {
    return Bifunction(random_field(rng, n), random_field(rng, n));
}

inline PersistenceDiagram random_diagram(Rng& rng, int max_points,
                                         int essential_count = -1) {
    std::uniform_int_distribution<int> count_dist(0, max_points);
    std::uniform_real_distribution<double> birth_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> persistence_dist(0.05, 1.0);
    int total = count_dist(rng);
    int essentials;
    if (essential_count >= 0) {
        essentials = essential_count;
        total = std::max(total, essentials);
    } else {
        std::uniform_int_distribution<int> essential_dist(0, total);
        essentials = essential_dist(rng);
    }

    std::vector<std::pair<double, double>> finite;
    std::vector<double> essential_births;
    for (int i = 0; i < total - essentials; ++i) {
        const double b = birth_dist(rng);
        finite.emplace_back(b, b + persistence_dist(rng));
    }
    for (int i = 0; i < essentials; ++i) essential_births.push_back(birth_dist(rng));
    return PersistenceDiagram(std::move(finite), std::move(essential_births));
}

// Connected components of a complex's vertex/edge skeleton, by union-find;
// independent of the persistence machinery.
inline int component_count(const SimplicialComplex& complex) {
    std::vector<int> parent(static_cast<std::size_t>(complex.vertex_count()));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::set<int> live;
    for (const Simplex& s : complex.simplices()) {
        if (s.size() == 1) live.insert(s[0]);
        if (s.size() == 2) {
            const int ra = find(s[0]);
            const int rb = find(s[1]);
            if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
        }
    }
    std::set<int> roots;
    for (int v : live) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

} // namespace topocorr::testing
