#pragma once

// Homology Leray-Serre spectral sequence of L_*M x_{S^1} ES^1 -> BS^1 for one
// component of the free loop space.  E^2_{p,q} = Z_2{u^p} (x) H_q with u the
// degree-2 class of BS^1 and q the loop degree; d2(u^p (x) y) = u^{p-1} (x) Delta(y).
// A cell (p, q) sits in topological degree 2p + q + (2n+1).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "loopbv/bv.hpp"
#include "loopbv/gf2.hpp"
#include "loopbv/series.hpp"

namespace loopbv {

struct SSConfig {
    BvAlgebra algebra;
    Component component = Component::e;
    /// Largest topological degree reported.
    int max_top_degree = 0;
};

struct Bidegree {
    int p = 0; ///< exponent of u
    int q = 0; ///< loop degree
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

class Page {
public:
    Page() = default;
    Page(int index, int max_top_degree) : index_(index), max_top_degree_(max_top_degree) {}

    int index() const { return index_; }
    int max_top_degree() const { return max_top_degree_; }
    /// 0 for absent cells.
    std::int64_t dim(int p, int q) const;
    /// Zero dimensions are not stored.
    void set(int p, int q, std::int64_t dim);
    const std::map<Bidegree, std::int64_t>& entries() const { return entries_; }

    friend bool operator==(const Page&, const Page&) = default;

private:
    int index_ = 2;
    int max_top_degree_ = 0;
    std::map<Bidegree, std::int64_t> entries_;
};

/// Lowest loop degree carrying homology: -(2n+1).
int min_loop_degree(const AlgebraConfig& cfg);

Page e2_page(const SSConfig& cfg);

/// Delta from the degree-q basis of the component to its degree-(q+1) basis:
/// row i holds the coordinates of Delta(basis_q[i]).  Throws std::logic_error
/// if an image leaves the component.
Gf2Matrix d2_matrix(const BvAlgebra& algebra, Component comp, int q);
int d2_rank(const BvAlgebra& algebra, Component comp, int q);

/// dim E^3_{p,q} = dim ker(Delta_q) - rank(Delta_{q-1}) for p >= 1 and
/// dim E^2_{0,q} - rank(Delta_{q-1}) on the bottom row.
Page e3_page(const SSConfig& cfg);

/// Coefficient of t^k is the total dimension of cells with 2p + q + (2n+1) = k,
/// for k = 0..page.max_top_degree().
TruncatedSeries page_series(const Page& page, const AlgebraConfig& cfg);

struct CollapseReport {
    int max_top_degree = 0;
    TruncatedSeries e3_trivial;     ///< E^3 series of the e-component
    TruncatedSeries e3_nontrivial;  ///< E^3 series of the g-component
    TruncatedSeries sum;
    TruncatedSeries target;         ///< expansion of the total equivariant series
    bool trivial_page_stable = false; ///< E^3(e) == E^2(e) entrywise
    std::optional<int> first_mismatch;
    std::int64_t computed_at_mismatch = 0;
    std::int64_t expected_at_mismatch = 0;

    bool pass() const { return !first_mismatch.has_value(); }
};

/// Compares E^3(e) + E^3(g) with the expansion of westerland_total(n) through
/// the cutoff.  Agreement leaves no room for higher differentials.
CollapseReport verify_collapse(const BvAlgebra& algebra, int max_top_degree);

} // namespace loopbv
