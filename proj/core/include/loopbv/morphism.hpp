#pragma once

// Generator changes x -> x~, v -> v~, w -> w~ of the loop homology ring and
// checks of the relations they must satisfy.

#include <string>
#include <vector>

#include "loopbv/bv.hpp"
#include "loopbv/ring.hpp"

namespace loopbv {

/// Coefficients of
///   x~ = x + a1 xv + a2 x^{2n+1} w + a3 x^{2n+1} vw
///   v~ = v + b1 + b2 x~^{2n} w + b3 x~^{2n} vw
///   w~ = c0 w + c1 v~ w + c2 x~^{2n} w^2 + c3 x~^{2n} v~ w^2
struct MorphismCoefficients {
    bool a1 = false, a2 = false, a3 = false;
    bool b1 = false, b2 = false, b3 = false;
    bool c0 = true, c1 = false, c2 = false, c3 = false;
};

class GeneratorMorphism {
public:
    /// Images given in x, v, w coordinates.  Throws InputError unless they are
    /// homogeneous of loop degrees -1, 0 and 2n respectively.
    GeneratorMorphism(AlgebraElement image_x, AlgebraElement image_v, AlgebraElement image_w,
                      const AlgebraConfig& cfg);

    static GeneratorMorphism identity(const AlgebraConfig& cfg);
    static GeneratorMorphism from_coefficients(const MorphismCoefficients& k, const AlgebraConfig& cfg);

    const AlgebraElement& image(Generator g) const;

private:
    AlgebraElement x_, v_, w_;
};

/// Substitutes the generator images into every monomial of u and renormalizes.
AlgebraElement apply_morphism(const GeneratorMorphism& phi, const AlgebraElement& u, const AlgebraConfig& cfg);

struct MorphismReport {
    bool top_power_vanishes = false; ///< x~^{2n+2} = 0
    bool quadratic_relation = false; ///< v~^2 + b1 - (n+1) sigma(b1,c1) x~^{2n} v~^{b1 c1} w~ = 0
    bool power_law = false;          ///< x~^k = x^k, or x^k (1+v) for odd k when a1 = 1
    bool degreewise_independent = false;
    int min_degree = 0;
    int max_degree = 0;
    std::vector<std::string> failures;

    bool ok() const { return top_power_vanishes && quadratic_relation && power_law && degreewise_independent; }
};

/// The coefficients a1, b1, c1 entering the relations are read back from the
/// images (coefficient of xv in x~, of 1 in v~, of vw in w~).  Independence of
/// the substituted basis is checked by F_2 rank in every loop degree of
/// [-(2n+1), 4n].
MorphismReport verify_morphism_relations(const GeneratorMorphism& phi, const AlgebraConfig& cfg);

} // namespace loopbv
