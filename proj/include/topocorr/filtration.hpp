#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "topocorr/scalar_field.hpp"
#include "topocorr/simplicial_complex.hpp"

namespace topocorr {

struct FiltrationEntry {
    Simplex simplex;
    double value;
};

/// Simplices in order of appearance: values non-decreasing, every simplex
/// after all of its faces. Ties are broken by (dimension, lexicographic
/// vertex order), so the order is a deterministic function of the input.
class Filtration {
public:
    Filtration() = default;

    const std::vector<FiltrationEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Largest simplex dimension present, -1 when empty.
    int max_dimension() const { return max_dimension_; }

    // Position of a simplex in the order; throws if absent.
    std::size_t position_of(const Simplex& s) const;

private:
    friend Filtration lower_star_filtration(const SimplicialComplex& complex,
                                            const ScalarField& field);

    struct SimplexHash {
        std::size_t operator()(const Simplex& s) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (int v : s) {
                h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    std::vector<FiltrationEntry> entries_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> positions_;
    int max_dimension_ = -1;
};

/// Sublevel filtration of the complex: each simplex enters at the maximum of
/// its vertices' field values.
Filtration lower_star_filtration(const SimplicialComplex& complex,
                                 const ScalarField& field);

} // namespace topocorr
