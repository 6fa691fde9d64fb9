#include "centerkit/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace centerkit {

using nlohmann::json;

namespace {

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected an integer or a \"p/q\" string");
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LineArrangement parse_arrangement(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("arrangement: expected a JSON object");
    if (!doc.contains("lines") || !doc["lines"].is_array()) throw InputError("lines: missing or not an array");
    if (!doc.contains("multiplicities") || !doc["multiplicities"].is_array())
        throw InputError("multiplicities: missing or not an array");
    std::vector<Line> lines;
    for (std::size_t i = 0; i < doc["lines"].size(); ++i) {
        const json& l = doc["lines"][i];
        const std::string where = "lines[" + std::to_string(i) + "]";
        if (!l.is_array() || l.size() != 3) throw InputError(where + ": expected [a, b, c]");
        lines.push_back({rational_field(l[0], where + "[0]"), rational_field(l[1], where + "[1]"),
                         rational_field(l[2], where + "[2]")});
    }
    std::vector<long> mult;
    for (std::size_t i = 0; i < doc["multiplicities"].size(); ++i) {
        const json& m = doc["multiplicities"][i];
        if (!m.is_number_integer()) throw InputError("multiplicities[" + std::to_string(i) + "]: expected an integer");
        mult.push_back(m.get<long>());
    }
    return {std::move(lines), std::move(mult)};
}

LineArrangement read_arrangement(const std::filesystem::path& path) { return parse_arrangement(read_text_file(path)); }

FoliationForm parse_form(std::string_view text, std::optional<std::size_t> expected_degree) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw InputError("coefficients: missing or not an array");
    const auto& coeffs = doc["coefficients"];
    std::size_t degree = 0;
    while (2 * monomial_count(degree) < coeffs.size()) ++degree;
    if (2 * monomial_count(degree) != coeffs.size())
        throw InputError("coefficients: length " + std::to_string(coeffs.size()) + " is not (d+1)(d+2)");
    if (doc.contains("degree") && (!doc["degree"].is_number_unsigned() || doc["degree"].get<std::size_t>() != degree))
        throw InputError("degree: does not match the coefficient count");
    if (expected_degree && *expected_degree != degree)
        throw InputError("coefficients: form degree " + std::to_string(degree) + ", arrangement needs " +
                         std::to_string(*expected_degree));
    FoliationForm form = FoliationForm::zero(degree);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        form.coefficients[k] = rational_field(coeffs[k], "coefficients[" + std::to_string(k) + "]");
    return form;
}

FoliationForm read_form(const std::filesystem::path& path, std::optional<std::size_t> expected_degree) {
    return parse_form(read_text_file(path), expected_degree);
}

std::string arrangement_to_json(const LineArrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines()) lines.push_back({to_string(l.a), to_string(l.b), to_string(l.c)});
    return json{{"lines", lines}, {"multiplicities", arr.multiplicities()}}.dump();
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    return s;
}

}  // namespace centerkit
