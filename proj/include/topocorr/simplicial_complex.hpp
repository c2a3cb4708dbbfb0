#pragma once

#include <cstddef>
#include <vector>

namespace topocorr {

// A simplex is the strictly increasing list of its vertex indices.
using Simplex = std::vector<int>;

// Canonical order: by dimension, then lexicographically by vertex indices.
bool canonical_simplex_less(const Simplex& a, const Simplex& b);

/// A finite simplicial complex: a face-closed set of simplices over vertices
/// 0..vertex_count-1, stored in canonical order. Immutable after
/// construction; build instances through build_complex().
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    int vertex_count() const { return vertex_count_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    // Largest simplex dimension, -1 for the empty complex.
    int dimension() const;

    bool contains(const Simplex& s) const;

private:
    friend SimplicialComplex build_complex(const std::vector<Simplex>& simplices,
                                           int vertex_count);

    int vertex_count_ = 0;
    std::vector<Simplex> simplices_; // canonical order
};

/// Face closure of the given simplices, canonically ordered. Input simplices
/// need not be sorted and may repeat; a vertex repeated inside one simplex is
/// a MalformedSimplexError. vertex_count < 0 means "infer as max index + 1".
SimplicialComplex build_complex(const std::vector<Simplex>& simplices,
                                int vertex_count = -1);

int euler_characteristic(const SimplicialComplex& complex);

} // namespace topocorr
