#include "topocorr/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topocorr/errors.hpp"

namespace topocorr {

PersistenceDiagram::PersistenceDiagram(
    std::vector<std::pair<double, double>> finite_pairs,
    std::vector<double> essential_births)
    : finite_pairs_(std::move(finite_pairs)),
      essential_births_(std::move(essential_births)) {
    for (const auto& [birth, death] : finite_pairs_) {
        if (!std::isfinite(birth) || !std::isfinite(death)) {
            throw NonFiniteValueError("diagram point is not finite");
        }
        if (death < birth) {
            throw std::invalid_argument("diagram pair has death < birth");
        }
    }
    for (double birth : essential_births_) {
        if (!std::isfinite(birth)) {
            throw NonFiniteValueError("essential birth is not finite");
        }
    }
    std::erase_if(finite_pairs_, [](const std::pair<double, double>& p) {
        return p.first == p.second;
    });
    std::sort(finite_pairs_.begin(), finite_pairs_.end());
    std::sort(essential_births_.begin(), essential_births_.end());
}

namespace {

std::vector<std::size_t> boundary_positions(const Filtration& filtration,
                                            const Simplex& s) {
    std::vector<std::size_t> column;
    if (s.size() <= 1) return column;
    column.reserve(s.size());
    Simplex facet(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != drop) facet[w++] = s[i];
        }
        column.push_back(filtration.position_of(facet));
    }
    std::sort(column.begin(), column.end());
    return column;
}

struct Pairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // (birth, death) positions
    std::vector<char> paired;                               // per position
};

// Column reduction over Z/2 restricted to columns of dimension in
// [low_dim, high_dim]. Dimensions are processed downwards with clearing: a
// position that served as a pivot is a birth, so its own column would reduce
// to zero and is skipped. The pairing is the same as for the plain
// left-to-right reduction.
Pairing reduce_range(const Filtration& filtration, int low_dim, int high_dim) {
    const auto& entries = filtration.entries();
    const std::size_t n = entries.size();

    Pairing result;
    result.paired.assign(n, 0);

    constexpr std::ptrdiff_t kNoOwner = -1;
    std::vector<std::ptrdiff_t> pivot_owner(n, kNoOwner);
    std::vector<std::vector<std::size_t>> reduced(n);

    for (int d = high_dim; d >= std::max(low_dim, 1); --d) {
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(entries[j].simplex.size()) - 1 != d) continue;
            if (result.paired[j]) continue; // cleared
            std::vector<std::size_t> column =
                boundary_positions(filtration, entries[j].simplex);
            while (!column.empty()) {
                const std::size_t low = column.back();
                const std::ptrdiff_t owner = pivot_owner[low];
                if (owner == kNoOwner) break;
                std::vector<std::size_t> merged;
                const auto& other = reduced[static_cast<std::size_t>(owner)];
                merged.reserve(column.size() + other.size());
                std::set_symmetric_difference(column.begin(), column.end(),
                                              other.begin(), other.end(),
                                              std::back_inserter(merged));
                column = std::move(merged);
            }
            if (!column.empty()) {
                const std::size_t low = column.back();
                pivot_owner[low] = static_cast<std::ptrdiff_t>(j);
                reduced[j] = std::move(column);
                result.paired[low] = result.paired[j] = 1;
                result.pairs.emplace_back(low, j);
            }
        }
    }
    return result;
}

PersistenceDiagram assemble_degree(const Filtration& filtration, const Pairing& pairing,
                                   int degree) {
    const auto& entries = filtration.entries();
    std::vector<std::pair<double, double>> finite;
    std::vector<double> essential;
    for (const auto& [birth, death] : pairing.pairs) {
        if (static_cast<int>(entries[birth].simplex.size()) - 1 == degree) {
            finite.emplace_back(entries[birth].value, entries[death].value);
        }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!pairing.paired[i] &&
            static_cast<int>(entries[i].simplex.size()) - 1 == degree) {
            essential.push_back(entries[i].value);
        }
    }
    return PersistenceDiagram(std::move(finite), std::move(essential));
}

} // namespace

std::vector<PersistenceDiagram> compute_persistence_all(const Filtration& filtration) {
    if (filtration.empty()) return {};
    const int max_dim = filtration.max_dimension();
    const Pairing pairing = reduce_range(filtration, 0, max_dim);
    std::vector<PersistenceDiagram> diagrams;
    diagrams.reserve(static_cast<std::size_t>(max_dim + 1));
    for (int d = 0; d <= max_dim; ++d) {
        diagrams.push_back(assemble_degree(filtration, pairing, d));
    }
    return diagrams;
}

PersistenceDiagram compute_persistence(const Filtration& filtration, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    if (filtration.empty()) return PersistenceDiagram{};
    const int max_dim = filtration.max_dimension();
    if (degree > max_dim) return PersistenceDiagram{};
    // Only the columns of dimensions degree and degree+1 decide the
    // degree-k pairing; lower and higher dimensions cannot interfere.
    const Pairing pairing =
        reduce_range(filtration, degree, std::min(degree + 1, max_dim));
    return assemble_degree(filtration, pairing, degree);
}

PersistenceDiagram persistence_oracle_h0(const Filtration& filtration) {
    const auto& entries = filtration.entries();

    // Union-find keyed by the filtration position of the creating vertex.
    // Each root remembers its birth (value, position); at a merge the
    // younger component dies. Positions are value-sorted, so comparing
    // positions is the elder rule with its tie-break.
    std::unordered_map<int, std::size_t> vertex_position;
    std::vector<std::size_t> parent(entries.size());

    auto find_root = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]]; // path halving
            x = parent[x];
        }
        return x;
    };

    std::vector<std::pair<double, double>> finite_pairs;
    std::vector<double> essential_births;

    for (std::size_t p = 0; p < entries.size(); ++p) {
        const auto& [simplex, value] = entries[p];
        if (simplex.size() == 1) {
            parent[p] = p;
            vertex_position.emplace(simplex[0], p);
        } else if (simplex.size() == 2) {
            const std::size_t ra = find_root(vertex_position.at(simplex[0]));
            const std::size_t rb = find_root(vertex_position.at(simplex[1]));
            if (ra == rb) continue;
            const std::size_t elder = std::min(ra, rb);
            const std::size_t younger = std::max(ra, rb);
            finite_pairs.emplace_back(entries[younger].value, value);
            parent[younger] = elder;
        }
    }

    for (const auto& [vertex, position] : vertex_position) {
        (void)vertex;
        if (find_root(position) == position) {
            essential_births.push_back(entries[position].value);
        }
    }

    return PersistenceDiagram(std::move(finite_pairs), std::move(essential_births));
}

} // namespace topocorr
