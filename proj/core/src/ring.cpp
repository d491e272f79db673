#include "loopbv/ring.hpp"

#include <algorithm>
#include <string>

#include "loopbv/errors.hpp"

namespace loopbv {

std::string_view to_string(BvCase c)
{
    switch (c) {
    case BvCase::A_v:
        return "A_v";
    case BvCase::A_vxw:
        return "A_vxw";
    case BvCase::B_w:
        return "B_w";
    case BvCase::B_wxvw:
        return "B_wxvw";
    }
    return "?";
}

BvCase parse_bv_case(std::string_view text)
{
    for (BvCase c : kAllCases)
        if (to_string(c) == text)
            return c;
    throw InputError("unknown BV case '" + std::string(text) + "' (expected A_v, A_vxw, B_w or B_wxvw)");
}

bool w_in_trivial_component(BvCase c)
{
    return c == BvCase::A_v || c == BvCase::A_vxw;
}

Component operator+(Component lhs, Component rhs)
{
    return lhs == rhs ? Component::e : Component::g;
}

std::string_view to_string(Component c)
{
    return c == Component::e ? "e" : "g";
}

Component parse_component(std::string_view text)
{
    if (text == "e")
        return Component::e;
    if (text == "g")
        return Component::g;
    throw InputError("unknown component '" + std::string(text) + "' (expected e or g)");
}

AlgebraConfig::AlgebraConfig(int n, BvCase bv_case) : n_(n), case_(bv_case)
{
    if (n < 1)
        throw InputError("n must be >= 1, got " + std::to_string(n));
}

AlgebraElement::AlgebraElement(std::initializer_list<Monomial> ms)
{
    for (const Monomial& m : ms)
        *this += m;
}

AlgebraElement& AlgebraElement::operator+=(const Monomial& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
    return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    for (const Monomial& m : other.terms_)
        *this += m;
    return *this;
}

bool is_normal(const Monomial& m, const AlgebraConfig& cfg)
{
    return m.a >= 0 && m.a <= cfg.max_x_exponent() && (m.b == 0 || m.b == 1) && m.c >= 0;
}

AlgebraElement normalize(int a, int b, int c, const AlgebraConfig& cfg)
{
    if (a < 0 || b < 0 || c < 0)
        throw InputError("negative exponent in x^" + std::to_string(a) + " v^" + std::to_string(b) +
                         " w^" + std::to_string(c));
    // v^2 = (n+1) x^{2n} w: the coefficient vanishes mod 2 when n is odd.
    if (b >= 2) {
        if (cfg.n() % 2 == 1)
            return {};
        const int reductions = b / 2;
        a += reductions * 2 * cfg.n();
        c += reductions;
        b %= 2;
    }
    if (a > cfg.max_x_exponent())
        return {};
    return AlgebraElement(Monomial{a, b, c});
}

AlgebraElement multiply(const Monomial& lhs, const Monomial& rhs, const AlgebraConfig& cfg)
{
    return normalize(lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c, cfg);
}

AlgebraElement multiply(const AlgebraElement& lhs, const AlgebraElement& rhs, const AlgebraConfig& cfg)
{
    AlgebraElement out;
    for (const Monomial& l : lhs)
        for (const Monomial& r : rhs)
            out += multiply(l, r, cfg);
    return out;
}

AlgebraElement power(const AlgebraElement& base, int exponent, const AlgebraConfig& cfg)
{
    if (exponent < 0)
        throw InputError("negative power");
    AlgebraElement result = AlgebraElement::one();
    for (int i = 0; i < exponent; ++i)
        result = multiply(result, base, cfg);
    return result;
}

int loop_degree(const Monomial& m, const AlgebraConfig& cfg)
{
    return -m.a + cfg.w_degree() * m.c;
}

int top_degree(const Monomial& m, const AlgebraConfig& cfg)
{
    return loop_degree(m, cfg) + cfg.manifold_dim();
}

bool is_homogeneous(const AlgebraElement& u, int degree, const AlgebraConfig& cfg)
{
    return std::all_of(u.begin(), u.end(), [&](const Monomial& m) { return loop_degree(m, cfg) == degree; });
}

Component component(const Monomial& m, const AlgebraConfig& cfg)
{
    const int parity = w_in_trivial_component(cfg.bv_case()) ? m.b : m.b + m.c;
    return parity % 2 == 0 ? Component::e : Component::g;
}

std::vector<Monomial> basis(const AlgebraConfig& cfg, std::optional<Component> comp, int k)
{
    std::vector<Monomial> out;
    const int wd = cfg.w_degree();
    for (int a = 0; a <= cfg.max_x_exponent(); ++a) {
        // -a + 2n c = k
        const int num = k + a;
        if (num < 0 || num % wd != 0)
            continue;
        for (int b = 0; b <= 1; ++b) {
            const Monomial m{a, b, num / wd};
            if (!comp || component(m, cfg) == *comp)
                out.push_back(m);
        }
    }
    return out;
}

int dimension(const AlgebraConfig& cfg, std::optional<Component> comp, int k)
{
    return static_cast<int>(basis(cfg, comp, k).size());
}

std::vector<Monomial> basis_window(const AlgebraConfig& cfg, std::optional<Component> comp,
                                   int min_degree, int max_degree)
{
    std::vector<Monomial> out;
    for (int k = min_degree; k <= max_degree; ++k) {
        auto part = basis(cfg, comp, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

void append_power(std::string& out, char symbol, int exponent)
{
    if (exponent == 0)
        return;
    if (!out.empty())
        out += '*';
    out += symbol;
    if (exponent != 1)
        out += '^' + std::to_string(exponent);
}

} // namespace

std::string to_string(const Monomial& m)
{
    std::string out;
    append_power(out, 'x', m.a);
    append_power(out, 'v', m.b);
    append_power(out, 'w', m.c);
    return out.empty() ? "1" : out;
}

std::string to_string(const AlgebraElement& u)
{
    if (u.is_zero())
        return "0";
    std::string out;
    for (const Monomial& m : u) {
        if (!out.empty())
            out += " + ";
        out += to_string(m);
    }
    return out;
}

} // namespace loopbv
