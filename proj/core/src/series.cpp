#include "loopbv/series.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "loopbv/errors.hpp"

namespace loopbv {

Polynomial::Polynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

Polynomial Polynomial::monomial(std::int64_t coefficient, int exponent)
{
    if (exponent < 0)
        throw InputError("negative exponent in polynomial");
    std::vector<std::int64_t> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = coefficient;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_power(int j)
{
    if (j < 1)
        throw InputError("factor 1 - t^j needs j >= 1");
    return Polynomial::monomial(1, 0) - Polynomial::monomial(1, j);
}

std::int64_t Polynomial::operator[](int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<std::int64_t> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

std::int64_t TruncatedSeries::at(int k) const
{
    const int i = k - offset;
    if (i < 0 || i >= static_cast<int>(coefficients.size()))
        return 0;
    return coefficients[static_cast<std::size_t>(i)];
}

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    if (lhs.coefficients.empty())
        return rhs;
    if (rhs.coefficients.empty())
        return lhs;
    TruncatedSeries out;
    out.offset = std::min(lhs.offset, rhs.offset);
    const int top = std::max(lhs.max_degree(), rhs.max_degree());
    out.coefficients.resize(static_cast<std::size_t>(top - out.offset + 1), 0);
    for (int k = out.offset; k <= top; ++k)
        out.coefficients[static_cast<std::size_t>(k - out.offset)] = lhs.at(k) + rhs.at(k);
    return out;
}

RationalSeries::RationalSeries(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_[0] == 0)
        throw InputError("denominator must have a nonzero constant term");
}

RationalSeries RationalSeries::with_factors(Polynomial numerator, std::vector<int> factors)
{
    Polynomial den = Polynomial::monomial(1, 0);
    for (int j : factors)
        den = den * Polynomial::one_minus_power(j);
    RationalSeries r(std::move(numerator), std::move(den));
    r.factors_ = std::move(factors);
    return r;
}

namespace {

std::optional<std::vector<int>> merged_factors(const RationalSeries& lhs, const RationalSeries& rhs)
{
    const auto& l = lhs.denominator_factors();
    const auto& r = rhs.denominator_factors();
    if (!l || !r)
        return std::nullopt;
    std::vector<int> out = *l;
    out.insert(out.end(), r->begin(), r->end());
    return out;
}

RationalSeries assemble(Polynomial num, Polynomial den, std::optional<std::vector<int>> factors)
{
    if (factors)
        return RationalSeries::with_factors(std::move(num), std::move(*factors));
    return RationalSeries(std::move(num), std::move(den));
}

} // namespace

RationalSeries operator+(const RationalSeries& lhs, const RationalSeries& rhs)
{
    return assemble(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_, merged_factors(lhs, rhs));
}

RationalSeries operator-(const RationalSeries& lhs, const RationalSeries& rhs)
{
    return assemble(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_, merged_factors(lhs, rhs));
}

RationalSeries operator*(const RationalSeries& lhs, const RationalSeries& rhs)
{
    return assemble(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_, merged_factors(lhs, rhs));
}

TruncatedSeries expand(const RationalSeries& r, int max_degree)
{
    TruncatedSeries out;
    if (max_degree < 0)
        return out;
    const Polynomial& num = r.numerator();
    const Polynomial& den = r.denominator();
    const std::int64_t d0 = den[0];
    out.coefficients.resize(static_cast<std::size_t>(max_degree) + 1, 0);
    // den * out = num  =>  d0 out_k = num_k - sum_{i>=1} den_i out_{k-i}
    for (int k = 0; k <= max_degree; ++k) {
        std::int64_t acc = num[k];
        for (int i = 1; i <= std::min(k, den.degree()); ++i)
            acc -= den[i] * out.coefficients[static_cast<std::size_t>(k - i)];
        if (acc % d0 != 0)
            throw InputError("expansion has a non-integral coefficient at t^" + std::to_string(k));
        out.coefficients[static_cast<std::size_t>(k)] = acc / d0;
    }
    return out;
}

bool eq_exact(const RationalSeries& lhs, const RationalSeries& rhs)
{
    return lhs.numerator() * rhs.denominator() == rhs.numerator() * lhs.denominator();
}

namespace {

void require_n(int n)
{
    if (n < 1)
        throw InputError("n must be >= 1, got " + std::to_string(n));
}

} // namespace

RationalSeries lg_series(int n)
{
    require_n(n);
    return RationalSeries::with_factors(Polynomial::one_minus_power(2 * n + 2), {2 * n, 2});
}

RationalSeries le_series(int n)
{
    require_n(n);
    const Polynomial one_plus_t({1, 1});
    return RationalSeries::with_factors(Polynomial::one_minus_power(2 * n + 2) * one_plus_t, {2 * n, 2, 2});
}

RationalSeries westerland_total(int n)
{
    require_n(n);
    // 1 + (1 + t)/(1 - t^2) = (2 + t - t^2) / (1 - t^2)
    const Polynomial bracket({2, 1, -1});
    return RationalSeries::with_factors(Polynomial::one_minus_power(2 * n + 2) * bracket, {2 * n, 2, 2});
}

std::int64_t betti(const RationalSeries& r, int k)
{
    if (k < 0)
        throw InputError("Betti index must be >= 0");
    return expand(r, k).at(k);
}

Rational average_alternating(const RationalSeries& r)
{
    long period = 1;
    if (const auto& factors = r.denominator_factors()) {
        for (int j : *factors)
            period = std::lcm(period, static_cast<long>(j));
    } else if (r.denominator().degree() != 0) {
        throw InputError("average_alternating needs a denominator given as a product of (1 - t^j) factors");
    }
    const long window = 2 * period;
    const long m0 = std::max(0, r.numerator().degree()) + r.denominator().degree();
    const long top = m0 + 2 * window;
    const TruncatedSeries coeffs = expand(r, static_cast<int>(top));

    auto partial = [&](long m) {
        BigInt s = 0;
        for (long k = 0; k <= m; ++k)
            s += (k % 2 == 0 ? 1 : -1) * BigInt(coeffs.at(static_cast<int>(k)));
        return s;
    };
    const BigInt s0 = partial(m0);
    const BigInt s1 = partial(m0 + window);
    const BigInt s2 = partial(m0 + 2 * window);
    if (s1 - s0 != s2 - s1)
        throw NonQuasilinearError("alternating partial sums are not quasi-linear: window increments " +
                                  BigInt(s1 - s0).str() + " and " + BigInt(s2 - s1).str() + " over length " +
                                  std::to_string(window));
    return Rational(s2 - s1, BigInt(window));
}

} // namespace loopbv
