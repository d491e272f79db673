#include "loopbv/axioms.hpp"

#include <random>

namespace loopbv {

AxiomCheckOptions default_axiom_options(const AlgebraConfig& cfg, std::uint64_t seed)
{
    AxiomCheckOptions options;
    options.min_degree = -cfg.manifold_dim();
    options.max_degree = 12 * cfg.n();
    options.seed = seed;
    return options;
}

namespace {

constexpr std::size_t kMaxExamples = 5;

void note(AxiomReport& report, std::string text)
{
    if (report.examples.size() < kMaxExamples)
        report.examples.push_back(std::move(text));
}

} // namespace

AxiomReport check_bv_axioms(const BvAlgebra& algebra, const AxiomCheckOptions& options)
{
    const AlgebraConfig& cfg = algebra.config();
    const auto pool = basis_window(cfg, std::nullopt, options.min_degree, options.max_degree);
    AxiomReport report;
    report.monomials = pool.size();
    if (pool.empty())
        return report;

    for (const Monomial& m : pool) {
        if (!algebra.delta(algebra.delta(m)).is_zero()) {
            ++report.delta_squared;
            note(report, "Delta^2(" + to_string(m) + ") != 0");
        }
    }

    auto check_pair = [&](const Monomial& a, const Monomial& b) {
        ++report.pairs;
        const AlgebraElement ea(a);
        const AlgebraElement eb(b);
        const AlgebraElement ab = multiply(a, b, cfg);
        const AlgebraElement bracket = algebra.bracket(a, b);
        const AlgebraElement bv = algebra.delta(ab) + algebra.multiply(algebra.delta(ea), eb) +
                                  algebra.multiply(ea, algebra.delta(eb)) + bracket;
        if (!bv.is_zero()) {
            ++report.bv_formula;
            note(report, "BV formula fails for a=" + to_string(a) + ", b=" + to_string(b) + ": residue " +
                             to_string(bv));
        }
        if (bracket != algebra.bracket(b, a)) {
            ++report.symmetry;
            note(report, "{a,b} != {b,a} for a=" + to_string(a) + ", b=" + to_string(b));
        }
    };

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    if (options.exhaustive_pairs) {
        for (const Monomial& a : pool)
            for (const Monomial& b : pool)
                check_pair(a, b);
    } else {
        for (std::size_t i = 0; i < options.samples; ++i) {
            const Monomial& a = pool[pick(rng)];
            const Monomial& b = pool[pick(rng)];
            check_pair(a, b);
        }
    }

    for (std::size_t i = 0; i < options.samples; ++i) {
        const AlgebraElement a(pool[pick(rng)]);
        const AlgebraElement b(pool[pick(rng)]);
        const AlgebraElement c(pool[pick(rng)]);
        ++report.triples;
        const std::string where = " for a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c);

        const AlgebraElement jacobi = algebra.bracket(a, algebra.bracket(b, c)) +
                                      algebra.bracket(algebra.bracket(a, b), c) +
                                      algebra.bracket(b, algebra.bracket(a, c));
        if (!jacobi.is_zero()) {
            ++report.jacobi;
            note(report, "Jacobi fails" + where);
        }

        const AlgebraElement poisson = algebra.bracket(a, algebra.multiply(b, c)) +
                                       algebra.multiply(algebra.bracket(a, b), c) +
                                       algebra.multiply(b, algebra.bracket(a, c));
        if (!poisson.is_zero()) {
            ++report.poisson;
            note(report, "Poisson rule fails" + where);
        }
    }
    return report;
}

std::vector<Monomial> delta_nonvanishing_on_trivial(const BvAlgebra& algebra, int min_degree, int max_degree)
{
    std::vector<Monomial> out;
    for (const Monomial& m : basis_window(algebra.config(), Component::e, min_degree, max_degree))
        if (!algebra.delta(m).is_zero())
            out.push_back(m);
    return out;
}

} // namespace loopbv
