#include "loopbv/bv.hpp"

#include <string>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {

int exponent_of(const Monomial& m, Generator g)
{
    switch (g) {
    case Generator::x:
        return m.a;
    case Generator::v:
        return m.b;
    case Generator::w:
        return m.c;
    }
    return 0;
}

Monomial lowered(Monomial m, Generator g)
{
    switch (g) {
    case Generator::x:
        --m.a;
        break;
    case Generator::v:
        --m.b;
        break;
    case Generator::w:
        --m.c;
        break;
    }
    return m;
}

Monomial times(const Monomial& l, const Monomial& r)
{
    return Monomial{l.a + r.a, l.b + r.b, l.c + r.c};
}

} // namespace

std::string_view to_string(Generator g)
{
    switch (g) {
    case Generator::x:
        return "x";
    case Generator::v:
        return "v";
    case Generator::w:
        return "w";
    }
    return "?";
}

Generator parse_generator(std::string_view text)
{
    for (Generator g : kGenerators)
        if (to_string(g) == text)
            return g;
    throw InputError("unknown generator '" + std::string(text) + "' (expected x, v or w)");
}

Monomial as_monomial(Generator g)
{
    switch (g) {
    case Generator::x:
        return {1, 0, 0};
    case Generator::v:
        return {0, 1, 0};
    case Generator::w:
        return {0, 0, 1};
    }
    return {};
}

std::size_t BracketTable::slot(Generator g1, Generator g2)
{
    auto i = static_cast<std::size_t>(g1);
    auto j = static_cast<std::size_t>(g2);
    if (i > j)
        std::swap(i, j);
    // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
    static constexpr std::size_t offsets[3] = {0, 3, 5};
    return offsets[i] + (j - i);
}

BracketTable BracketTable::for_case(const AlgebraConfig& cfg)
{
    const int two_n = 2 * cfg.n();
    const Monomial v{0, 1, 0};
    const Monomial w{0, 0, 1};

    BracketTable t;
    switch (cfg.bv_case()) {
    case BvCase::A_v:
        t.set(Generator::x, Generator::v, AlgebraElement(v));
        break;
    case BvCase::A_vxw:
        t.set(Generator::x, Generator::v, AlgebraElement{v, Monomial{two_n, 1, 1}});
        break;
    case BvCase::B_w:
        t.set(Generator::x, Generator::v, AlgebraElement(v));
        t.set(Generator::x, Generator::w, AlgebraElement(w));
        break;
    case BvCase::B_wxvw:
        t.set(Generator::x, Generator::v, AlgebraElement(v));
        t.set(Generator::x, Generator::w, AlgebraElement{w, Monomial{two_n, 1, 2}});
        break;
    }
    return t;
}

BvAlgebra::BvAlgebra(AlgebraConfig cfg) : cfg_(cfg), table_(BracketTable::for_case(cfg)) {}

BvAlgebra::BvAlgebra(AlgebraConfig cfg, BracketTable table) : cfg_(cfg), table_(std::move(table)) {}

AlgebraElement BvAlgebra::bracket(const Monomial& lhs, const Monomial& rhs) const
{
    // {g_1...g_k, h_1...h_l} = sum_{i,j} {g_i, h_j} (prod_{i' != i} g) (prod_{j' != j} h)
    AlgebraElement out;
    for (Generator g : kGenerators) {
        const int kg = exponent_of(lhs, g);
        if (kg % 2 == 0)
            continue;
        for (Generator h : kGenerators) {
            const int kh = exponent_of(rhs, h);
            if (kh % 2 == 0)
                continue;
            const AlgebraElement& gh = table_.get(g, h);
            if (gh.is_zero())
                continue;
            const Monomial rest = times(lowered(lhs, g), lowered(rhs, h));
            out += loopbv::multiply(gh, AlgebraElement(rest), cfg_);
        }
    }
    return out;
}

AlgebraElement BvAlgebra::bracket(const AlgebraElement& lhs, const AlgebraElement& rhs) const
{
    AlgebraElement out;
    for (const Monomial& l : lhs)
        for (const Monomial& r : rhs)
            out += bracket(l, r);
    return out;
}

AlgebraElement BvAlgebra::delta(const Monomial& m) const
{
    // Pairs of distinct factors: same generator -> C(k, 2), different -> k_g k_h,
    // each taken mod 2.
    AlgebraElement out;
    for (std::size_t i = 0; i < kGenerators.size(); ++i) {
        const Generator g = kGenerators[i];
        const int kg = exponent_of(m, g);
        for (std::size_t j = i; j < kGenerators.size(); ++j) {
            const Generator h = kGenerators[j];
            const int kh = exponent_of(m, h);
            const long pairs = (i == j) ? static_cast<long>(kg) * (kg - 1) / 2 : static_cast<long>(kg) * kh;
            if (pairs % 2 == 0)
                continue;
            const AlgebraElement& gh = table_.get(g, h);
            if (gh.is_zero())
                continue;
            const Monomial rest = lowered(lowered(m, g), h);
            out += loopbv::multiply(gh, AlgebraElement(rest), cfg_);
        }
    }
    return out;
}

AlgebraElement BvAlgebra::delta(const AlgebraElement& u) const
{
    AlgebraElement out;
    for (const Monomial& m : u)
        out += delta(m);
    return out;
}

AlgebraElement BvAlgebra::oracle_bracket_with_generator(Generator g, const Monomial& m) const
{
    // {g, h * m'} = {g, h} m' + h {g, m'}
    for (Generator h : kGenerators) {
        if (exponent_of(m, h) == 0)
            continue;
        const Monomial rest = lowered(m, h);
        const AlgebraElement hm(as_monomial(h));
        AlgebraElement out = loopbv::multiply(table_.get(g, h), AlgebraElement(rest), cfg_);
        out += loopbv::multiply(hm, oracle_bracket_with_generator(g, rest), cfg_);
        return out;
    }
    return {};
}

AlgebraElement BvAlgebra::delta_oracle(const Monomial& m) const
{
    // Delta(g m') = Delta(g) m' + g Delta(m') + {g, m'}, with Delta(g) = 0.
    for (Generator g : kGenerators) {
        if (exponent_of(m, g) == 0)
            continue;
        const Monomial rest = lowered(m, g);
        AlgebraElement out = loopbv::multiply(AlgebraElement(as_monomial(g)), delta_oracle(rest), cfg_);
        out += oracle_bracket_with_generator(g, rest);
        return out;
    }
    return {};
}

AlgebraElement BvAlgebra::delta_oracle(const AlgebraElement& u) const
{
    AlgebraElement out;
    for (const Monomial& m : u)
        out += delta_oracle(m);
    return out;
}

DeltaTable delta_table(const BvAlgebra& algebra, std::optional<Component> comp, int min_degree, int max_degree)
{
    const AlgebraConfig& cfg = algebra.config();
    DeltaTable rows;
    for (int k = min_degree; k <= max_degree; ++k)
        for (const Monomial& m : basis(cfg, comp, k))
            rows.push_back(DeltaRow{m, k, component(m, cfg), algebra.delta(m)});
    return rows;
}

} // namespace loopbv
