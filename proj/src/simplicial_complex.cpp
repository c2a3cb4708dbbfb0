#include "topocorr/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "topocorr/errors.hpp"

namespace topocorr {

bool canonical_simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int SimplicialComplex::dimension() const {
    if (simplices_.empty()) return -1;
    // Canonical order puts the largest simplices last.
    return static_cast<int>(simplices_.back().size()) - 1;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s,
                              canonical_simplex_less);
}

SimplicialComplex build_complex(const std::vector<Simplex>& simplices,
                                int vertex_count) {
    std::set<Simplex> closed;
    int max_vertex = -1;

    for (const Simplex& raw : simplices) {
        Simplex s = raw;
        for (int v : s) {
            if (v < 0) {
                throw MalformedSimplexError("simplex contains negative vertex index " +
                                            std::to_string(v));
            }
            max_vertex = std::max(max_vertex, v);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw MalformedSimplexError("simplex repeats a vertex");
        }
        if (s.empty()) continue;
        if (s.size() > 30) {
            throw MalformedSimplexError("simplex dimension too large");
        }

        // All non-empty subsets; subsets of a sorted simplex stay sorted.
        const std::size_t k = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
            }
            closed.insert(std::move(face));
        }
    }

    if (vertex_count >= 0 && max_vertex >= vertex_count) {
        throw MalformedSimplexError("vertex index " + std::to_string(max_vertex) +
                                    " out of range for vertex count " +
                                    std::to_string(vertex_count));
    }

    SimplicialComplex complex;
    complex.vertex_count_ = vertex_count >= 0 ? vertex_count : max_vertex + 1;
    complex.simplices_.assign(closed.begin(), closed.end());
    std::sort(complex.simplices_.begin(), complex.simplices_.end(),
              canonical_simplex_less);
    return complex;
}

int euler_characteristic(const SimplicialComplex& complex) {
    int chi = 0;
    for (const Simplex& s : complex.simplices()) {
        chi += (s.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

} // namespace topocorr
