#pragma once

// BV operator and Gerstenhaber bracket on the loop homology ring.
//
// All four candidate structures have Delta(x) = Delta(v) = Delta(w) = 0, so the
// whole structure is fixed by the brackets of generators.  Over F_2 the BV
// formula Delta(ab) = Delta(a) b + a Delta(b) + {a, b} then forces
//
//     Delta(g_1 ... g_k) = sum_{i<j} {g_i, g_j} * prod_{l != i,j} g_l,
//
// which is what BvAlgebra::delta evaluates.  delta_oracle reaches the same
// value by literal one-generator-at-a-time recursion and exists only for
// cross-checking.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "loopbv/ring.hpp"

namespace loopbv {

enum class Generator { x, v, w };

inline constexpr std::array<Generator, 3> kGenerators{Generator::x, Generator::v, Generator::w};

std::string_view to_string(Generator g);
/// Accepts "x", "v" or "w"; anything else is an InputError.
Generator parse_generator(std::string_view text);
Monomial as_monomial(Generator g);

/// Brackets of generator pairs; symmetric.
class BracketTable {
public:
    BracketTable() = default;

    /// The table of the configured case:
    ///   A_v:    {x,v} = v,               {x,w} = 0
    ///   A_vxw:  {x,v} = v + x^{2n}vw,    {x,w} = 0
    ///   B_w:    {x,v} = v,               {x,w} = w
    ///   B_wxvw: {x,v} = v,               {x,w} = w + x^{2n}vw^2
    /// and {x,x} = {v,v} = {w,w} = {v,w} = 0 throughout.
    static BracketTable for_case(const AlgebraConfig& cfg);

    const AlgebraElement& get(Generator g1, Generator g2) const { return entries_[slot(g1, g2)]; }
    void set(Generator g1, Generator g2, AlgebraElement value) { entries_[slot(g1, g2)] = std::move(value); }

    friend bool operator==(const BracketTable&, const BracketTable&) = default;

private:
    static std::size_t slot(Generator g1, Generator g2);
    std::array<AlgebraElement, 6> entries_{};
};

class BvAlgebra {
public:
    explicit BvAlgebra(AlgebraConfig cfg);
    /// Arbitrary bracket table, e.g. a deliberately corrupted one for
    /// negative controls.
    BvAlgebra(AlgebraConfig cfg, BracketTable table);

    const AlgebraConfig& config() const { return cfg_; }
    const BracketTable& brackets() const { return table_; }

    AlgebraElement generator_bracket(Generator g1, Generator g2) const { return table_.get(g1, g2); }
    /// Biderivation extension of the generator table.  Symmetric over F_2.
    AlgebraElement bracket(const Monomial& lhs, const Monomial& rhs) const;
    AlgebraElement bracket(const AlgebraElement& lhs, const AlgebraElement& rhs) const;

    AlgebraElement delta(const Monomial& m) const;
    AlgebraElement delta(const AlgebraElement& u) const;

    /// Independent recursive evaluation of Delta; must agree with delta().
    AlgebraElement delta_oracle(const Monomial& m) const;
    AlgebraElement delta_oracle(const AlgebraElement& u) const;

    AlgebraElement multiply(const AlgebraElement& lhs, const AlgebraElement& rhs) const
    {
        return loopbv::multiply(lhs, rhs, cfg_);
    }

private:
    AlgebraElement oracle_bracket_with_generator(Generator g, const Monomial& m) const;

    AlgebraConfig cfg_;
    BracketTable table_;
};

struct DeltaRow {
    Monomial source;
    int loop_degree = 0;
    Component component = Component::e;
    AlgebraElement image;
};

using DeltaTable = std::vector<DeltaRow>;

/// Delta on every basis monomial of the component (both if unset) with loop
/// degree in [min_degree, max_degree], in degree then basis order.
DeltaTable delta_table(const BvAlgebra& algebra, std::optional<Component> comp, int min_degree, int max_degree);

} // namespace loopbv
