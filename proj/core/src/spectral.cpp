#include "loopbv/spectral.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "loopbv/errors.hpp"

namespace loopbv {

std::int64_t Page::dim(int p, int q) const
{
    auto it = entries_.find(Bidegree{p, q});
    return it == entries_.end() ? 0 : it->second;
}

void Page::set(int p, int q, std::int64_t dim)
{
    if (dim < 0)
        throw std::logic_error("negative page dimension");
    if (dim == 0)
        entries_.erase(Bidegree{p, q});
    else
        entries_[Bidegree{p, q}] = dim;
}

int min_loop_degree(const AlgebraConfig& cfg)
{
    return -cfg.manifold_dim();
}

namespace {

void require_cutoff(int max_top_degree)
{
    if (max_top_degree < 0)
        throw InputError("max topological degree must be >= 0, got " + std::to_string(max_top_degree));
}

// Largest loop degree with a cell of topological degree <= N (the p = 0 column).
int max_loop_degree(const AlgebraConfig& cfg, int max_top_degree)
{
    return max_top_degree - cfg.manifold_dim();
}

} // namespace

Page e2_page(const SSConfig& ss)
{
    require_cutoff(ss.max_top_degree);
    const AlgebraConfig& cfg = ss.algebra.config();
    Page page(2, ss.max_top_degree);
    for (int q = min_loop_degree(cfg); q <= max_loop_degree(cfg, ss.max_top_degree); ++q) {
        const int dim = dimension(cfg, ss.component, q);
        for (int p = 0; 2 * p + q + cfg.manifold_dim() <= ss.max_top_degree; ++p)
            page.set(p, q, dim);
    }
    return page;
}

Gf2Matrix d2_matrix(const BvAlgebra& algebra, Component comp, int q)
{
    const AlgebraConfig& cfg = algebra.config();
    const auto source = basis(cfg, comp, q);
    const auto target = basis(cfg, comp, q + 1);
    Gf2Matrix m(source.size(), target.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (const Monomial& t : algebra.delta(source[i])) {
            std::size_t j = 0;
            while (j < target.size() && target[j] != t)
                ++j;
            if (j == target.size())
                throw std::logic_error("Delta(" + to_string(source[i]) + ") has term " + to_string(t) +
                                       " outside the " + std::string(to_string(comp)) + "-component basis");
            m.flip(i, j);
        }
    }
    return m;
}

int d2_rank(const BvAlgebra& algebra, Component comp, int q)
{
    return static_cast<int>(d2_matrix(algebra, comp, q).rank());
}

Page e3_page(const SSConfig& ss)
{
    require_cutoff(ss.max_top_degree);
    const AlgebraConfig& cfg = ss.algebra.config();
    const int q_min = min_loop_degree(cfg);
    const int q_max = max_loop_degree(cfg, ss.max_top_degree);

    // d2 does not depend on p, so one rank per loop degree serves every column.
    // rank[q - q_min + 1] = rank(Delta_q), q from q_min - 1 to q_max.
    std::vector<int> rank;
    for (int q = q_min - 1; q <= q_max; ++q)
        rank.push_back(q < q_min ? 0 : d2_rank(ss.algebra, ss.component, q));
    auto rank_at = [&](int q) { return rank[static_cast<std::size_t>(q - q_min + 1)]; };

    Page page(3, ss.max_top_degree);
    for (int q = q_min; q <= q_max; ++q) {
        const int dim = dimension(cfg, ss.component, q);
        const int incoming = rank_at(q - 1);
        const int kernel = dim - rank_at(q);
        for (int p = 0; 2 * p + q + cfg.manifold_dim() <= ss.max_top_degree; ++p)
            page.set(p, q, (p == 0 ? dim : kernel) - incoming);
    }
    return page;
}

TruncatedSeries page_series(const Page& page, const AlgebraConfig& cfg)
{
    TruncatedSeries out;
    out.coefficients.assign(static_cast<std::size_t>(page.max_top_degree()) + 1, 0);
    for (const auto& [cell, dim] : page.entries()) {
        const int k = 2 * cell.p + cell.q + cfg.manifold_dim();
        if (k < 0 || k > page.max_top_degree())
            throw std::logic_error("page cell outside the reported degree range");
        out.coefficients[static_cast<std::size_t>(k)] += dim;
    }
    return out;
}

CollapseReport verify_collapse(const BvAlgebra& algebra, int max_top_degree)
{
    require_cutoff(max_top_degree);
    const AlgebraConfig& cfg = algebra.config();
    CollapseReport report;
    report.max_top_degree = max_top_degree;

    const SSConfig trivial{algebra, Component::e, max_top_degree};
    const SSConfig nontrivial{algebra, Component::g, max_top_degree};
    const Page e3_e = e3_page(trivial);
    report.trivial_page_stable = (e3_e.entries() == e2_page(trivial).entries());
    report.e3_trivial = page_series(e3_e, cfg);
    report.e3_nontrivial = page_series(e3_page(nontrivial), cfg);
    report.sum = report.e3_trivial + report.e3_nontrivial;
    report.target = expand(westerland_total(cfg.n()), max_top_degree);

    for (int k = 0; k <= max_top_degree; ++k) {
        if (report.sum.at(k) != report.target.at(k)) {
            report.first_mismatch = k;
            report.computed_at_mismatch = report.sum.at(k);
            report.expected_at_mismatch = report.target.at(k);
            break;
        }
    }
    return report;
}

} // namespace loopbv
