#pragma once

// Property checks of the BV structure on a window of basis monomials.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "loopbv/bv.hpp"

namespace loopbv {

struct AxiomCheckOptions {
    int min_degree = 0;
    int max_degree = 0;
    /// Pairs and triples drawn per identity.
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    /// Check every pair instead of sampling.
    bool exhaustive_pairs = false;
};

/// Loop degrees [-(2n+1), 12n], 1000 samples.
AxiomCheckOptions default_axiom_options(const AlgebraConfig& cfg, std::uint64_t seed = 20240229);

struct AxiomReport {
    std::size_t monomials = 0;
    std::size_t pairs = 0;
    std::size_t triples = 0;

    std::size_t delta_squared = 0; ///< Delta(Delta(m)) != 0
    std::size_t bv_formula = 0;    ///< Delta(ab) != Delta(a)b + a Delta(b) + {a,b}
    std::size_t symmetry = 0;      ///< {a,b} != {b,a}
    std::size_t jacobi = 0;        ///< {a,{b,c}} != {{a,b},c} + {b,{a,c}}
    std::size_t poisson = 0;       ///< {a,bc} != {a,b}c + b{a,c}

    /// The first few violations, rendered.
    std::vector<std::string> examples;

    std::size_t violations() const { return delta_squared + bv_formula + symmetry + jacobi + poisson; }
    bool ok() const { return violations() == 0; }
};

AxiomReport check_bv_axioms(const BvAlgebra& algebra, const AxiomCheckOptions& options);

/// Basis monomials of the e-component in the window with nonzero Delta.
std::vector<Monomial> delta_nonvanishing_on_trivial(const BvAlgebra& algebra, int min_degree, int max_degree);

} // namespace loopbv
