#pragma once

// Exact Poincare-series arithmetic: integer polynomials, rational functions in
// t with integer coefficients, their truncated expansions, and the Cesaro
// average of alternating partial sums.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "loopbv/rational.hpp"

namespace loopbv {

class Polynomial {
public:
    Polynomial() = default;
    /// Ascending coefficients; trailing zeros are dropped.
    explicit Polynomial(std::vector<std::int64_t> coefficients);

    static Polynomial monomial(std::int64_t coefficient, int exponent);
    /// 1 - t^j
    static Polynomial one_minus_power(int j);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int k) const;
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// Window of exact coefficients c_offset .. c_{offset+size-1}.  A negative
/// offset is allowed for loop-graded intermediates.
struct TruncatedSeries {
    int offset = 0;
    std::vector<std::int64_t> coefficients;

    /// 0 outside the window.
    std::int64_t at(int k) const;
    int max_degree() const { return offset + static_cast<int>(coefficients.size()) - 1; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Coefficientwise sum over the union of both windows.
TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// numerator / denominator with denominator(0) != 0.  When the denominator was
/// built as a product of (1 - t^j) factors, the exponents j are remembered;
/// average_alternating needs them.
class RationalSeries {
public:
    /// Throws InputError when denominator(0) == 0.
    RationalSeries(Polynomial numerator, Polynomial denominator);
    /// numerator / prod_j (1 - t^j)
    static RationalSeries with_factors(Polynomial numerator, std::vector<int> factors);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    const std::optional<std::vector<int>>& denominator_factors() const { return factors_; }

    friend RationalSeries operator+(const RationalSeries& lhs, const RationalSeries& rhs);
    friend RationalSeries operator-(const RationalSeries& lhs, const RationalSeries& rhs);
    friend RationalSeries operator*(const RationalSeries& lhs, const RationalSeries& rhs);

private:
    Polynomial num_;
    Polynomial den_;
    std::optional<std::vector<int>> factors_;
};

class NonQuasilinearError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power-series coefficients of r through t^max_degree (long division).
TruncatedSeries expand(const RationalSeries& r, int max_degree);

/// num1 * den2 == num2 * den1 as polynomials.
bool eq_exact(const RationalSeries& lhs, const RationalSeries& rhs);

/// (1 - t^{2n+2}) / ((1 - t^{2n}) (1 - t^2))
RationalSeries lg_series(int n);
/// (1 / (1 - t^{2n})) ((1 - t^{2n+2}) / (1 - t^2)) ((1 + t) / (1 - t^2))
RationalSeries le_series(int n);
/// ((1 - t^{2n+2}) / ((1 - t^{2n}) (1 - t^2))) (1 + (1 + t) / (1 - t^2))
RationalSeries westerland_total(int n);

/// k-th expansion coefficient.
std::int64_t betti(const RationalSeries& r, int k);

/// lim_m (1/m) sum_{k=0}^m (-1)^k beta_k, exactly.  With L = 2 lcm(j) over the
/// denominator factors and m0 = deg(num) + deg(den), returns
/// (S(m0 + 2L) - S(m0 + L)) / L after checking it equals (S(m0 + L) - S(m0)) / L;
/// a mismatch throws NonQuasilinearError.  Needs the factor form of the
/// denominator (or a constant denominator); otherwise InputError.
Rational average_alternating(const RationalSeries& r);

} // namespace loopbv
