#pragma once

// JSON and CSV rendering of reports, plus the resonance input loader.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopbv/bv.hpp"
#include "loopbv/resonance.hpp"
#include "loopbv/spectral.hpp"

namespace loopbv::cli {

using Json = nlohmann::json;

/// {"component", "page", "entries": [{"p","q","dim"}], "series": [...]}
Json page_to_json(const Page& page, const AlgebraConfig& cfg, Component comp);
/// Inverse of page_to_json; the cutoff is recovered from the series length.
Page page_from_json(const Json& j);
/// "p,q,dim" header, rows sorted by (p, q).
std::string page_to_csv(const Page& page);

Json delta_table_to_json(const DeltaTable& table);
std::string delta_table_to_csv(const DeltaTable& table);

Json resonance_to_json(const ResonanceReport& report);
Json nondegenerate_to_json(const NondegenerateReport& report);
Json morse_to_json(const MorseTruncation& morse, const Rational& limit);

struct ResonanceInput {
    int n = 1;
    std::vector<GeodesicRecord> records;
};

/// Parses the resonance input schema.  Malformed JSON is an InputError with
/// line and column; schema violations are InputErrors naming the field.
ResonanceInput parse_resonance_input(std::string_view text, std::string_view source = "<input>");
ResonanceInput load_resonance_input(const std::string& path);

} // namespace loopbv::cli
