#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "topocorr/filtration.hpp"

namespace topocorr {

/// Degree-k persistence of a filtration: finite (birth, death) pairs plus
/// births of essential classes (classes alive at the end; their death stays
/// symbolic, never a floating sentinel). Zero-persistence pairs are dropped
/// at construction. Contents are kept sorted so diagrams compare as
/// multisets.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;

    PersistenceDiagram(std::vector<std::pair<double, double>> finite_pairs,
                       std::vector<double> essential_births);

    const std::vector<std::pair<double, double>>& finite_pairs() const {
        return finite_pairs_;
    }
    const std::vector<double>& essential_births() const { return essential_births_; }

    std::size_t total_points() const {
        return finite_pairs_.size() + essential_births_.size();
    }
    bool empty() const { return total_points() == 0; }

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<std::pair<double, double>> finite_pairs_;
    std::vector<double> essential_births_;
};

/// Persistence diagrams of every degree 0..dim(K), by boundary-matrix column
/// reduction over Z/2. Deterministic given the filtration order.
std::vector<PersistenceDiagram> compute_persistence_all(const Filtration& filtration);

/// Degree-k diagram; degrees beyond the maximum simplex dimension give an
/// empty diagram.
PersistenceDiagram compute_persistence(const Filtration& filtration, int degree);

/// Independent degree-0 oracle: union-find over the vertex/edge skeleton with
/// the elder rule (the component with the earlier birth survives a merge,
/// ties broken by earlier filtration position). Must agree with
/// compute_persistence(f, 0) as a multiset.
PersistenceDiagram persistence_oracle_h0(const Filtration& filtration);

} // namespace topocorr
