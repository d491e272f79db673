#pragma once

// Resonance identity for non-contractible closed geodesics on RP^{2n+1}: the
// weighted sum of mean Euler numbers over the prime geodesics equals the
// average S^1-equivariant Betti number (n+1)/(2n) of the non-trivial
// component.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopbv/rational.hpp"

namespace loopbv {

struct GeodesicRecord {
    std::string label;
    /// Morse index i(c) of the prime geodesic.
    int initial_index = 0;
    /// Mean index, must be positive.
    Rational mean_index{1};
    /// Analytical period, even and positive.
    int period = 2;
    /// (m, l) -> k_l(c^{2m-1}) for m = 1..period/2 and l = 0..4n.  Missing
    /// entries are 0.
    std::map<std::pair<int, int>, std::int64_t> type_numbers;
    /// Declared nondegeneracy, if the input states it.
    std::optional<bool> nondegenerate;
    /// Nullities of iterates; carried along, never used in computations.
    std::vector<int> nullities;

    std::int64_t type_number(int m, int l) const;
    /// Sum of all type numbers.
    std::int64_t mass() const;
};

/// Throws InputError naming the record when a field is out of range.
void validate(const GeodesicRecord& rec, int n);

/// (1/period) sum_m sum_l (-1)^{l + i(c)} k_l(c^{2m-1})
Rational mean_euler(const GeodesicRecord& rec, int n);

/// (n+1)/(2n)
Rational resonance_target(int n);

struct ResonanceReport {
    int n = 1;
    std::vector<std::string> labels;
    std::vector<Rational> mean_euler; ///< per record
    std::vector<Rational> weighted;   ///< mean Euler number over mean index
    Rational sum{0};
    Rational target{0};
    /// target agreed with average_alternating(lg_series(n)).
    bool target_matches_series = false;
    /// No records: the identity cannot hold.
    bool vacuous = false;
    bool pass = false;

    Rational diff() const { return sum - target; }
};

ResonanceReport resonance_check(const std::vector<GeodesicRecord>& records, int n);

/// Period 2, k_0(c) = 1 and no other type numbers.
bool is_nondegenerate(const GeodesicRecord& rec);

struct NondegenerateReport {
    int n = 1;
    std::vector<std::string> labels;
    Rational sum{0};    ///< sum (-1)^{i(c)} / mean index
    Rational target{0}; ///< (n+1)/n
    /// sum is exactly twice the resonance_check sum.
    bool consistent_with_full = false;
    bool vacuous = false;
    bool pass = false;

    Rational diff() const { return sum - target; }
};

/// Throws InputError naming the first record that is not nondegenerate.
NondegenerateReport nondegenerate_check(const std::vector<GeodesicRecord>& records, int n);

struct IndexModel {
    enum class Kind { rounded_linear, explicit_list };
    Kind kind = Kind::rounded_linear;
    /// explicit_list: values[j] = i(c^{2j+1}).
    std::vector<int> values;
};

/// i(c^N) under the model for odd N.  Rounded-linear gives i(c) at N = 1 and
/// otherwise the integer nearest N * mean_index with the parity of i(c), ties
/// going down.  Every value must have that parity and lie within 2n of
/// N * mean_index; a violation is an InputError naming the iterate.
int iterate_index(const GeodesicRecord& rec, int n, const IndexModel& model, int iterate);

/// i(c^1), i(c^3), ..., i(c^{2 count - 1}).
std::vector<int> index_sequence(const GeodesicRecord& rec, int n, const IndexModel& model, std::size_t count);

struct MorseTruncation {
    int q = 0;
    /// w_0 .. w_q
    std::vector<std::int64_t> morse_numbers;
    /// sum_{h <= q} (-1)^h w_h
    std::int64_t alternating_sum = 0;
    /// alternating_sum / q, unset for q = 0.
    std::optional<Rational> average;
};

/// Morse type numbers of the non-trivial component through degree q, using
/// k_l(c^{2m-1+s*period}) = k_l(c^{2m-1}) and the rounded-linear index model.
MorseTruncation morse_truncation(const std::vector<GeodesicRecord>& records, int n, int q);
/// As above with one index model per record.
MorseTruncation morse_truncation(const std::vector<GeodesicRecord>& records, int n, int q,
                                 const std::vector<IndexModel>& models);

} // namespace loopbv
