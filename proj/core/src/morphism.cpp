#include "loopbv/morphism.hpp"

#include <map>
#include <string>

#include "loopbv/errors.hpp"
#include "loopbv/gf2.hpp"

namespace loopbv {

GeneratorMorphism::GeneratorMorphism(AlgebraElement image_x, AlgebraElement image_v, AlgebraElement image_w,
                                     const AlgebraConfig& cfg)
    : x_(std::move(image_x)), v_(std::move(image_v)), w_(std::move(image_w))
{
    const std::pair<const AlgebraElement*, int> checks[] = {{&x_, -1}, {&v_, 0}, {&w_, cfg.w_degree()}};
    const char* names[] = {"x", "v", "w"};
    for (int i = 0; i < 3; ++i) {
        const auto [image, degree] = checks[i];
        for (const Monomial& m : *image)
            if (!is_normal(m, cfg))
                throw InputError(std::string("image of ") + names[i] + " has non-normal term " + to_string(m));
        if (!is_homogeneous(*image, degree, cfg))
            throw InputError(std::string("image of ") + names[i] + " is not homogeneous of loop degree " +
                             std::to_string(degree) + ": " + to_string(*image));
    }
}

GeneratorMorphism GeneratorMorphism::identity(const AlgebraConfig& cfg)
{
    return GeneratorMorphism(AlgebraElement(Monomial{1, 0, 0}), AlgebraElement(Monomial{0, 1, 0}),
                             AlgebraElement(Monomial{0, 0, 1}), cfg);
}

GeneratorMorphism GeneratorMorphism::from_coefficients(const MorphismCoefficients& k, const AlgebraConfig& cfg)
{
    const int two_n = 2 * cfg.n();
    const AlgebraElement w(Monomial{0, 0, 1});
    const AlgebraElement w2(Monomial{0, 0, 2});

    AlgebraElement x_t(Monomial{1, 0, 0});
    if (k.a1)
        x_t += Monomial{1, 1, 0};
    if (k.a2)
        x_t += Monomial{two_n + 1, 0, 1};
    if (k.a3)
        x_t += Monomial{two_n + 1, 1, 1};

    const AlgebraElement x_t_2n = power(x_t, two_n, cfg);

    AlgebraElement v_t(Monomial{0, 1, 0});
    if (k.b1)
        v_t += Monomial{};
    if (k.b2)
        v_t += multiply(x_t_2n, w, cfg);
    if (k.b3)
        v_t += multiply(x_t_2n, AlgebraElement(Monomial{0, 1, 1}), cfg);

    AlgebraElement w_t;
    if (k.c0)
        w_t += w;
    if (k.c1)
        w_t += multiply(v_t, w, cfg);
    if (k.c2)
        w_t += multiply(x_t_2n, w2, cfg);
    if (k.c3)
        w_t += multiply(multiply(x_t_2n, v_t, cfg), w2, cfg);

    return GeneratorMorphism(std::move(x_t), std::move(v_t), std::move(w_t), cfg);
}

const AlgebraElement& GeneratorMorphism::image(Generator g) const
{
    switch (g) {
    case Generator::x:
        return x_;
    case Generator::v:
        return v_;
    case Generator::w:
        return w_;
    }
    return x_;
}

AlgebraElement apply_morphism(const GeneratorMorphism& phi, const AlgebraElement& u, const AlgebraConfig& cfg)
{
    AlgebraElement out;
    for (const Monomial& m : u) {
        AlgebraElement term = power(phi.image(Generator::x), m.a, cfg);
        term = multiply(term, power(phi.image(Generator::v), m.b, cfg), cfg);
        term = multiply(term, power(phi.image(Generator::w), m.c, cfg), cfg);
        out += term;
    }
    return out;
}

MorphismReport verify_morphism_relations(const GeneratorMorphism& phi, const AlgebraConfig& cfg)
{
    MorphismReport report;
    const int n = cfg.n();
    const int two_n = 2 * n;
    const AlgebraElement& x_t = phi.image(Generator::x);
    const AlgebraElement& v_t = phi.image(Generator::v);
    const AlgebraElement& w_t = phi.image(Generator::w);

    const bool a1 = x_t.contains(Monomial{1, 1, 0});
    const bool b1 = v_t.contains(Monomial{0, 0, 0});
    const bool c1 = w_t.contains(Monomial{0, 1, 1});

    report.top_power_vanishes = power(x_t, two_n + 2, cfg).is_zero();
    if (!report.top_power_vanishes)
        report.failures.push_back("x~^{2n+2} = " + to_string(power(x_t, two_n + 2, cfg)));

    // sigma(b1, c1) = 0 exactly when b1 = 0 and c1 = 1.
    const bool sigma = !( !b1 && c1);
    AlgebraElement relation = power(v_t, 2, cfg);
    if (b1)
        relation += AlgebraElement::one();
    if ((n + 1) % 2 == 1 && sigma) {
        AlgebraElement tail = multiply(power(x_t, two_n, cfg), w_t, cfg);
        if (b1 && c1)
            tail = multiply(tail, v_t, cfg);
        relation += tail;
    }
    report.quadratic_relation = relation.is_zero();
    if (!report.quadratic_relation)
        report.failures.push_back("quadratic relation leaves " + to_string(relation));

    report.power_law = true;
    for (int k = 2; k <= two_n + 2; ++k) {
        AlgebraElement expected = normalize(k, 0, 0, cfg);
        if (k % 2 == 1 && a1)
            expected += normalize(k, 1, 0, cfg);
        const AlgebraElement got = power(x_t, k, cfg);
        if (got != expected) {
            report.power_law = false;
            report.failures.push_back("x~^" + std::to_string(k) + " = " + to_string(got) + ", expected " +
                                      to_string(expected));
        }
    }

    report.min_degree = -(two_n + 1);
    report.max_degree = 2 * two_n;
    report.degreewise_independent = true;
    for (int k = report.min_degree; k <= report.max_degree; ++k) {
        const auto source = basis(cfg, std::nullopt, k);
        std::map<Monomial, std::size_t> column;
        for (std::size_t i = 0; i < source.size(); ++i)
            column.emplace(source[i], i);
        Gf2Matrix images(source.size(), source.size());
        bool leaked = false;
        for (std::size_t i = 0; i < source.size(); ++i) {
            for (const Monomial& m : apply_morphism(phi, AlgebraElement(source[i]), cfg)) {
                auto it = column.find(m);
                if (it == column.end()) {
                    leaked = true;
                    continue;
                }
                images.flip(i, it->second);
            }
        }
        if (leaked || images.rank() != source.size()) {
            report.degreewise_independent = false;
            report.failures.push_back("substituted basis is dependent in loop degree " + std::to_string(k));
        }
    }
    return report;
}

} // namespace loopbv
