#include "topocorr/betti.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "topocorr/errors.hpp"

namespace topocorr {

namespace {

// Column rank of a GF(2) matrix given as sorted row-index columns.
int gf2_rank(std::vector<std::vector<int>> columns, int n_rows) {
    std::vector<int> pivot_owner(static_cast<std::size_t>(n_rows), -1);
    std::vector<std::vector<int>> reduced(columns.size());
    int rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        std::vector<int> col = std::move(columns[j]);
        while (!col.empty()) {
            const int low = col.back();
            const int owner = pivot_owner[static_cast<std::size_t>(low)];
            if (owner < 0) break;
            // col += reduced[owner] over GF(2)
            std::vector<int> merged;
            merged.reserve(col.size() + reduced[static_cast<std::size_t>(owner)].size());
            std::set_symmetric_difference(
                col.begin(), col.end(),
                reduced[static_cast<std::size_t>(owner)].begin(),
                reduced[static_cast<std::size_t>(owner)].end(),
                std::back_inserter(merged));
            col = std::move(merged);
        }
        if (!col.empty()) {
            pivot_owner[static_cast<std::size_t>(col.back())] = static_cast<int>(j);
            reduced[j] = std::move(col);
            ++rank;
        }
    }
    return rank;
}

} // namespace

SimplicialComplex sublevel_complex(const SimplicialComplex& complex,
                                   const Bifunction& phi, double u, double v) {
    if (phi.size() != static_cast<std::size_t>(complex.vertex_count())) {
        throw DimensionMismatchError("bifunction length does not match vertex count");
    }
    const std::size_t n = phi.size();
    std::vector<char> inside(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        inside[i] = (phi.first()[i] <= u && phi.second()[i] <= v) ? 1 : 0;
    }
    std::vector<Simplex> kept;
    for (const Simplex& s : complex.simplices()) {
        bool all_in = true;
        for (int w : s) {
            if (!inside[static_cast<std::size_t>(w)]) {
                all_in = false;
                break;
            }
        }
        if (all_in) kept.push_back(s);
    }
    return build_complex(kept, complex.vertex_count());
}

int betti_at(const SimplicialComplex& complex, const Bifunction& phi,
             double u, double v, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");

    const SimplicialComplex sub = sublevel_complex(complex, phi, u, v);

    // Simplices of dimensions degree-1, degree, degree+1, in canonical order.
    std::vector<Simplex> below, at, above;
    for (const Simplex& s : sub.simplices()) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d == degree - 1) below.push_back(s);
        else if (d == degree) at.push_back(s);
        else if (d == degree + 1) above.push_back(s);
    }
    if (at.empty()) return 0;

    auto row_index = [](const std::vector<Simplex>& rows, const Simplex& s) {
        auto it = std::lower_bound(rows.begin(), rows.end(), s, canonical_simplex_less);
        return static_cast<int>(it - rows.begin());
    };
    auto boundary_columns = [&](const std::vector<Simplex>& cols,
                                const std::vector<Simplex>& rows) {
        std::vector<std::vector<int>> columns(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Simplex& s = cols[j];
            Simplex facet(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != drop) facet[w++] = s[i];
                }
                columns[j].push_back(row_index(rows, facet));
            }
            std::sort(columns[j].begin(), columns[j].end());
        }
        return columns;
    };

    const int rank_at = degree == 0
        ? 0
        : gf2_rank(boundary_columns(at, below), static_cast<int>(below.size()));
    const int rank_above =
        gf2_rank(boundary_columns(above, at), static_cast<int>(at.size()));

    return static_cast<int>(at.size()) - rank_at - rank_above;
}

} // namespace topocorr
