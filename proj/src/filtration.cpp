#include "topocorr/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "topocorr/errors.hpp"

namespace topocorr {

std::size_t Filtration::position_of(const Simplex& s) const {
    auto it = positions_.find(s);
    if (it == positions_.end()) {
        throw std::out_of_range("simplex not present in filtration");
    }
    return it->second;
}

Filtration lower_star_filtration(const SimplicialComplex& complex,
                                 const ScalarField& field) {
    if (field.size() != static_cast<std::size_t>(complex.vertex_count())) {
        throw DimensionMismatchError("field length does not match vertex count");
    }

    Filtration filtration;
    filtration.entries_.reserve(complex.size());
    for (const Simplex& s : complex.simplices()) {
        double value = field[static_cast<std::size_t>(s.front())];
        for (int v : s) {
            value = std::max(value, field[static_cast<std::size_t>(v)]);
        }
        filtration.entries_.push_back({s, value});
    }

    std::stable_sort(filtration.entries_.begin(), filtration.entries_.end(),
                     [](const FiltrationEntry& a, const FiltrationEntry& b) {
                         if (a.value != b.value) return a.value < b.value;
                         return canonical_simplex_less(a.simplex, b.simplex);
                     });

    filtration.positions_.reserve(filtration.entries_.size());
    for (std::size_t i = 0; i < filtration.entries_.size(); ++i) {
        filtration.positions_.emplace(filtration.entries_[i].simplex, i);
    }
    filtration.max_dimension_ = complex.dimension();
    return filtration;
}

} // namespace topocorr
