#include "loopbv/resonance.hpp"

#include <stdexcept>

#include "loopbv/errors.hpp"
#include "loopbv/series.hpp"

namespace loopbv {

std::int64_t GeodesicRecord::type_number(int m, int l) const
{
    auto it = type_numbers.find({m, l});
    return it == type_numbers.end() ? 0 : it->second;
}

std::int64_t GeodesicRecord::mass() const
{
    std::int64_t total = 0;
    for (const auto& [key, k] : type_numbers)
        total += k;
    return total;
}

namespace {

void require_n(int n)
{
    if (n < 1)
        throw InputError("n must be >= 1, got " + std::to_string(n));
}

std::string name(const GeodesicRecord& rec)
{
    return "geodesic '" + rec.label + "'";
}

BigInt floor_of(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt quotient = num / den;
    if (num % den != 0 && num < 0)
        --quotient;
    return quotient;
}

Rational abs_of(const Rational& r)
{
    return r < 0 ? Rational(-r) : r;
}

} // namespace

void validate(const GeodesicRecord& rec, int n)
{
    require_n(n);
    if (rec.initial_index < 0)
        throw InputError(name(rec) + ": initial index must be >= 0");
    if (rec.mean_index <= 0)
        throw InputError(name(rec) + ": mean index must be positive, got " + to_string(rec.mean_index));
    if (rec.period <= 0 || rec.period % 2 != 0)
        throw InputError(name(rec) + ": period must be even and positive, got " + std::to_string(rec.period));
    for (const auto& [key, k] : rec.type_numbers) {
        const auto [m, l] = key;
        const std::string where = name(rec) + ": type number (m=" + std::to_string(m) + ", l=" + std::to_string(l) + ")";
        if (m < 1 || m > rec.period / 2)
            throw InputError(where + " has m outside 1.." + std::to_string(rec.period / 2));
        if (l < 0 || l > 4 * n)
            throw InputError(where + " has l outside 0.." + std::to_string(4 * n));
        if (k < 0)
            throw InputError(where + " is negative");
    }
}

Rational mean_euler(const GeodesicRecord& rec, int n)
{
    validate(rec, n);
    BigInt total = 0;
    for (const auto& [key, k] : rec.type_numbers) {
        const int l = key.second;
        if ((l + rec.initial_index) % 2 == 0)
            total += k;
        else
            total -= k;
    }
    return Rational(total, BigInt(rec.period));
}

Rational resonance_target(int n)
{
    require_n(n);
    return Rational(BigInt(n + 1), BigInt(2 * n));
}

ResonanceReport resonance_check(const std::vector<GeodesicRecord>& records, int n)
{
    ResonanceReport report;
    report.n = n;
    report.target = resonance_target(n);
    report.target_matches_series = (report.target == average_alternating(lg_series(n)));
    if (!report.target_matches_series)
        throw std::logic_error("resonance target disagrees with the average Betti number of lg_series");
    for (const GeodesicRecord& rec : records) {
        const Rational chi = mean_euler(rec, n);
        report.labels.push_back(rec.label);
        report.mean_euler.push_back(chi);
        report.weighted.push_back(chi / rec.mean_index);
        report.sum += report.weighted.back();
    }
    report.vacuous = records.empty();
    report.pass = !report.vacuous && report.sum == report.target;
    return report;
}

bool is_nondegenerate(const GeodesicRecord& rec)
{
    if (rec.period != 2)
        return false;
    for (const auto& [key, k] : rec.type_numbers) {
        const bool is_base = key == std::pair{1, 0};
        if (k != (is_base ? 1 : 0))
            return false;
    }
    return rec.type_number(1, 0) == 1;
}

NondegenerateReport nondegenerate_check(const std::vector<GeodesicRecord>& records, int n)
{
    require_n(n);
    NondegenerateReport report;
    report.n = n;
    report.target = Rational(BigInt(n + 1), BigInt(n));
    for (const GeodesicRecord& rec : records) {
        validate(rec, n);
        if (rec.nondegenerate == false || !is_nondegenerate(rec))
            throw InputError(name(rec) + " is not nondegenerate (needs period 2, k_0 = 1 and no other type numbers)");
        report.labels.push_back(rec.label);
        report.sum += Rational(rec.initial_index % 2 == 0 ? 1 : -1) / rec.mean_index;
    }
    report.consistent_with_full = (report.sum == 2 * resonance_check(records, n).sum);
    report.vacuous = records.empty();
    report.pass = !report.vacuous && report.sum == report.target;
    return report;
}

int iterate_index(const GeodesicRecord& rec, int n, const IndexModel& model, int iterate)
{
    if (iterate < 1 || iterate % 2 == 0)
        throw InputError("iterate must be odd and positive, got " + std::to_string(iterate));
    const Rational linear = Rational(iterate) * rec.mean_index;
    const int parity = rec.initial_index % 2;

    int value = 0;
    if (model.kind == IndexModel::Kind::explicit_list) {
        const auto slot = static_cast<std::size_t>(iterate / 2);
        if (slot >= model.values.size())
            throw InputError(name(rec) + ": no explicit index for iterate " + std::to_string(iterate));
        value = model.values[slot];
    } else if (iterate == 1) {
        value = rec.initial_index;
    } else {
        // Largest integer of the right parity not above N * mean_index, or the
        // next one up when that is strictly closer.
        BigInt below = floor_of(linear);
        if (static_cast<int>(below % 2 != 0) != parity)
            --below;
        const Rational gap_below = linear - Rational(below);
        const Rational gap_above = Rational(below + 2) - linear;
        value = static_cast<int>(gap_above < gap_below ? below + 2 : below);
    }

    const std::string where = name(rec) + ": index of iterate " + std::to_string(iterate);
    if ((value % 2 + 2) % 2 != parity)
        throw InputError(where + " = " + std::to_string(value) + " has the wrong parity");
    if (abs_of(Rational(value) - linear) > 2 * n)
        throw InputError(where + " = " + std::to_string(value) + " deviates from " + to_string(linear) +
                         " by more than 2n");
    return value;
}

std::vector<int> index_sequence(const GeodesicRecord& rec, int n, const IndexModel& model, std::size_t count)
{
    validate(rec, n);
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        out.push_back(iterate_index(rec, n, model, static_cast<int>(2 * j + 1)));
    return out;
}

MorseTruncation morse_truncation(const std::vector<GeodesicRecord>& records, int n, int q)
{
    return morse_truncation(records, n, q, std::vector<IndexModel>(records.size()));
}

MorseTruncation morse_truncation(const std::vector<GeodesicRecord>& records, int n, int q,
                                 const std::vector<IndexModel>& models)
{
    require_n(n);
    if (q < 0)
        throw InputError("truncation degree must be >= 0, got " + std::to_string(q));
    if (models.size() != records.size())
        throw InputError("need one index model per record");

    MorseTruncation out;
    out.q = q;
    out.morse_numbers.assign(static_cast<std::size_t>(q) + 1, 0);
    for (std::size_t j = 0; j < records.size(); ++j) {
        const GeodesicRecord& rec = records[j];
        validate(rec, n);
        for (int m = 1; m <= rec.period / 2; ++m) {
            for (int s = 0;; ++s) {
                const int iterate = 2 * m - 1 + s * rec.period;
                // Every index from here on exceeds q.
                if (Rational(iterate) * rec.mean_index - 2 * n > q)
                    break;
                const int index = iterate_index(rec, n, models[j], iterate);
                for (int l = 0; l <= 4 * n; ++l) {
                    const int h = index + l;
                    if (h >= 0 && h <= q)
                        out.morse_numbers[static_cast<std::size_t>(h)] += rec.type_number(m, l);
                }
            }
        }
    }
    for (int h = 0; h <= q; ++h)
        out.alternating_sum += (h % 2 == 0 ? 1 : -1) * out.morse_numbers[static_cast<std::size_t>(h)];
    if (q > 0)
        out.average = Rational(BigInt(out.alternating_sum), BigInt(q));
    return out;
}

} // namespace loopbv
