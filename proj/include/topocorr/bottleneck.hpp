#pragma once

#include <stdexcept>

#include "topocorr/persistence.hpp"

namespace topocorr {

/// A non-negative distance that may be infinite (diagrams with different
/// essential counts admit no finite-cost matching).
class ExtendedDistance {
public:
    static ExtendedDistance finite(double value) {
        if (!(value >= 0.0)) {
            throw std::invalid_argument("finite distance must be non-negative");
        }
        return ExtendedDistance(value, false);
    }
    static ExtendedDistance infinite() { return ExtendedDistance(0.0, true); }

    bool is_infinite() const { return infinite_; }

    // Finite value; throws when infinite so the sentinel never enters
    // arithmetic.
    double value() const {
        if (infinite_) {
            throw IncomparableDiagramsError("bottleneck distance is infinite");
        }
        return value_;
    }

    friend bool operator==(const ExtendedDistance&, const ExtendedDistance&) = default;

private:
    ExtendedDistance(double value, bool infinite) : value_(value), infinite_(infinite) {}

    double value_;
    bool infinite_;
};

/// Exact bottleneck distance. Finite points match each other at L-infinity
/// cost or the diagonal at half their persistence; essential points match
/// essential points at |birth - birth| cost, and a mismatch in essential
/// counts makes the distance infinite. The optimum is found by binary search
/// over the finite set of candidate costs with bipartite-matching
/// feasibility checks, so the result is a member of that set (or zero).
/// Inputs must not contain zero-persistence pairs.
ExtendedDistance bottleneck_distance(const PersistenceDiagram& d1,
                                     const PersistenceDiagram& d2);

/// Brute force over all explicit matchings; instances with more than 8
/// combined points are rejected with OracleSizeError.
ExtendedDistance bottleneck_oracle(const PersistenceDiagram& d1,
                                   const PersistenceDiagram& d2);

} // namespace topocorr
