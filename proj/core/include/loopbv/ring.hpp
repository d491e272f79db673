#pragma once

// Exact arithmetic in the loop homology ring of RP^{2n+1} over F_2:
//
//     Z_2[x, v, w] / (x^{2n+2}, v^2 - (n+1) w x^{2n}),   |x| = -1, |v| = 0, |w| = 2n
//
// (loop grading, i.e. topological degree shifted down by 2n+1).  Every value
// here is immutable once built; all functions are pure.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace loopbv {

/// The four candidate BV structures.  The letter fixes the component that
/// contains w (A: trivial component e, B: non-contractible component g); the
/// suffix names the non-trivial bracket.
enum class BvCase { A_v, A_vxw, B_w, B_wxvw };

inline constexpr std::array<BvCase, 4> kAllCases{BvCase::A_v, BvCase::A_vxw, BvCase::B_w, BvCase::B_wxvw};

std::string_view to_string(BvCase c);
BvCase parse_bv_case(std::string_view text);
/// True for the A_* cases, where w lives in the trivial component.
bool w_in_trivial_component(BvCase c);

/// Component of the free loop space; the labels form Z_2 under composition.
enum class Component { e, g };

Component operator+(Component lhs, Component rhs);
std::string_view to_string(Component c);
Component parse_component(std::string_view text);

class AlgebraConfig {
public:
    /// Throws InputError unless n >= 1.
    AlgebraConfig(int n, BvCase bv_case);

    int n() const { return n_; }
    BvCase bv_case() const { return case_; }
    /// dim M = 2n+1; also the shift between loop and topological degree.
    int manifold_dim() const { return 2 * n_ + 1; }
    int max_x_exponent() const { return 2 * n_ + 1; }
    int w_degree() const { return 2 * n_; }

    friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;

private:
    int n_;
    BvCase case_;
};

/// x^a v^b w^c.  Ordered lexicographically on (c, a, b), the canonical
/// output order.
struct Monomial {
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& l, const Monomial& r)
    {
        return std::tie(l.c, l.a, l.b) <=> std::tie(r.c, r.a, r.b);
    }
};

/// Finite F_2-linear combination of normal-form monomials.  Addition is the
/// symmetric difference of term sets; the empty set is zero.
class AlgebraElement {
public:
    using container = std::set<Monomial>;

    AlgebraElement() = default;
    explicit AlgebraElement(Monomial m) { terms_.insert(m); }
    AlgebraElement(std::initializer_list<Monomial> ms);

    static AlgebraElement one() { return AlgebraElement(Monomial{}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Monomial& m) const { return terms_.contains(m); }
    const container& terms() const { return terms_; }
    container::const_iterator begin() const { return terms_.begin(); }
    container::const_iterator end() const { return terms_.end(); }

    AlgebraElement& operator+=(const Monomial& m);
    AlgebraElement& operator+=(const AlgebraElement& other);
    friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    container terms_;
};

bool is_normal(const Monomial& m, const AlgebraConfig& cfg);

/// Normal form of x^a v^b w^c: v^2 is rewritten first (to x^{2n} w when n is
/// even, to 0 when n is odd), then anything with x-exponent >= 2n+2 vanishes.
AlgebraElement normalize(int a, int b, int c, const AlgebraConfig& cfg);

AlgebraElement multiply(const Monomial& lhs, const Monomial& rhs, const AlgebraConfig& cfg);
AlgebraElement multiply(const AlgebraElement& lhs, const AlgebraElement& rhs, const AlgebraConfig& cfg);
AlgebraElement power(const AlgebraElement& base, int exponent, const AlgebraConfig& cfg);
inline AlgebraElement add(const AlgebraElement& lhs, const AlgebraElement& rhs) { return lhs + rhs; }

int loop_degree(const Monomial& m, const AlgebraConfig& cfg);
int top_degree(const Monomial& m, const AlgebraConfig& cfg);
/// True when every term has the given loop degree (vacuously for zero).
bool is_homogeneous(const AlgebraElement& u, int degree, const AlgebraConfig& cfg);

Component component(const Monomial& m, const AlgebraConfig& cfg);

/// Normal-form monomials of loop degree k, sorted by (a, b, c).  A missing
/// component pools both.
std::vector<Monomial> basis(const AlgebraConfig& cfg, std::optional<Component> comp, int k);
int dimension(const AlgebraConfig& cfg, std::optional<Component> comp, int k);
/// Concatenated bases for loop degrees min_degree..max_degree.
std::vector<Monomial> basis_window(const AlgebraConfig& cfg, std::optional<Component> comp,
                                   int min_degree, int max_degree);

/// "x^a*v^b*w^c" with zero exponents elided and unit exponents written bare;
/// the unit monomial is "1".
std::string to_string(const Monomial& m);
/// Terms joined by " + " in canonical order; zero is "0".
std::string to_string(const AlgebraElement& u);

} // namespace loopbv
