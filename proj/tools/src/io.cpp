#include "loopbv/cli/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "loopbv/errors.hpp"

namespace loopbv::cli {

Json page_to_json(const Page& page, const AlgebraConfig& cfg, Component comp)
{
    Json entries = Json::array();
    for (const auto& [cell, dim] : page.entries())
        entries.push_back({{"p", cell.p}, {"q", cell.q}, {"dim", dim}});
    return {{"component", std::string(to_string(comp))},
            {"page", page.index()},
            {"entries", std::move(entries)},
            {"series", page_series(page, cfg).coefficients}};
}

Page page_from_json(const Json& j)
{
    const auto& series = j.at("series");
    if (!series.is_array() || series.empty())
        throw InputError("page JSON needs a non-empty series");
    Page page(j.at("page").get<int>(), static_cast<int>(series.size()) - 1);
    for (const auto& e : j.at("entries"))
        page.set(e.at("p").get<int>(), e.at("q").get<int>(), e.at("dim").get<std::int64_t>());
    return page;
}

std::string page_to_csv(const Page& page)
{
    std::ostringstream out;
    out << "p,q,dim\n";
    for (const auto& [cell, dim] : page.entries())
        out << cell.p << ',' << cell.q << ',' << dim << '\n';
    return out.str();
}

Json delta_table_to_json(const DeltaTable& table)
{
    Json rows = Json::array();
    for (const DeltaRow& row : table)
        rows.push_back({{"monomial", to_string(row.source)},
                        {"component", std::string(to_string(row.component))},
                        {"loop_degree", row.loop_degree},
                        {"delta", to_string(row.image)}});
    return rows;
}

std::string delta_table_to_csv(const DeltaTable& table)
{
    std::ostringstream out;
    out << "monomial,component,loop_degree,delta\n";
    for (const DeltaRow& row : table)
        out << to_string(row.source) << ',' << to_string(row.component) << ',' << row.loop_degree << ','
            << to_string(row.image) << '\n';
    return out.str();
}

Json resonance_to_json(const ResonanceReport& report)
{
    Json geodesics = Json::array();
    for (std::size_t i = 0; i < report.labels.size(); ++i)
        geodesics.push_back({{"label", report.labels[i]},
                             {"mean_euler", to_string(report.mean_euler[i])},
                             {"weighted", to_string(report.weighted[i])}});
    return {{"check", "full"},
            {"n", report.n},
            {"geodesics", std::move(geodesics)},
            {"sum", to_string(report.sum)},
            {"target", to_string(report.target)},
            {"diff", to_string(report.diff())},
            {"target_matches_series", report.target_matches_series},
            {"vacuous", report.vacuous},
            {"pass", report.pass}};
}

Json nondegenerate_to_json(const NondegenerateReport& report)
{
    return {{"check", "nondegenerate"},
            {"n", report.n},
            {"geodesics", report.labels},
            {"sum", to_string(report.sum)},
            {"target", to_string(report.target)},
            {"diff", to_string(report.diff())},
            {"consistent_with_full", report.consistent_with_full},
            {"vacuous", report.vacuous},
            {"pass", report.pass}};
}

Json morse_to_json(const MorseTruncation& morse, const Rational& limit)
{
    Json j = {{"q", morse.q}, {"alternating_sum", morse.alternating_sum}, {"limit", to_string(limit)}};
    if (morse.average) {
        j["average"] = to_string(*morse.average);
        j["abs_error_approx"] = to_double(*morse.average - limit < 0 ? Rational(limit - *morse.average)
                                                                        : Rational(*morse.average - limit));
    }
    return j;
}

namespace {

std::string position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

template <class T>
T field(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(where + ": field '" + key + "' has the wrong type");
    }
}

Rational mean_index_field(const Json& rec, const std::string& where)
{
    if (!rec.contains("mean_index"))
        throw InputError(where + ": missing field 'mean_index'");
    const Json& v = rec.at("mean_index");
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw InputError(where + ": mean_index must be a \"p/q\" string or an integer");
}

GeodesicRecord parse_record(const Json& rec, std::size_t i)
{
    std::string where = "geodesics[" + std::to_string(i) + "]";
    GeodesicRecord out;
    out.label = field<std::string>(rec, "label", where);
    where += " ('" + out.label + "')";
    out.initial_index = field<int>(rec, "initial_index", where);
    out.mean_index = mean_index_field(rec, where);
    out.period = field<int>(rec, "period", where);
    const auto types = field<Json>(rec, "type_numbers", where);
    if (!types.is_array())
        throw InputError(where + ": type_numbers must be an array");
    for (std::size_t t = 0; t < types.size(); ++t) {
        const std::string at = where + ".type_numbers[" + std::to_string(t) + "]";
        const int m = field<int>(types[t], "m", at);
        const int l = field<int>(types[t], "l", at);
        const auto k = field<std::int64_t>(types[t], "k", at);
        if (!out.type_numbers.emplace(std::pair{m, l}, k).second)
            throw InputError(at + ": duplicate entry for (m=" + std::to_string(m) + ", l=" + std::to_string(l) + ")");
    }
    if (rec.contains("nondegenerate"))
        out.nondegenerate = field<bool>(rec, "nondegenerate", where);
    if (rec.contains("nullities"))
        out.nullities = field<std::vector<int>>(rec, "nullities", where);
    return out;
}

} // namespace

ResonanceInput parse_resonance_input(std::string_view text, std::string_view source)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw InputError(std::string(source) + ": malformed JSON at " + position(text, byte) + ": " + e.what());
    }
    ResonanceInput input;
    input.n = field<int>(doc, "n", std::string(source));
    const auto geodesics = field<Json>(doc, "geodesics", std::string(source));
    if (!geodesics.is_array())
        throw InputError(std::string(source) + ": geodesics must be an array");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < geodesics.size(); ++i) {
        input.records.push_back(parse_record(geodesics[i], i));
        if (!labels.insert(input.records.back().label).second)
            throw InputError(std::string(source) + ": duplicate label '" + input.records.back().label + "'");
    }
    return input;
}

ResonanceInput load_resonance_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_resonance_input(buffer.str(), path);
}

} // namespace loopbv::cli
