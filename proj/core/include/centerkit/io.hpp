#pragma once

// Input parsing. Arrangement files:
//   {"lines": [[a, b, c], ...], "multiplicities": [n_1, ...]}
// with each coefficient an integer or a "p/q" string. One-form files:
//   {"degree": d, "coefficients": [...]}   (degree optional)
// with the coefficient vector in the FoliationForm ordering.

#include "centerkit/arrangement.hpp"
#include "centerkit/tangent.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace centerkit {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);

/// Parses without validating; malformed fields raise InputError naming the field.
LineArrangement parse_arrangement(std::string_view json_text);
LineArrangement read_arrangement(const std::filesystem::path& path);

FoliationForm parse_form(std::string_view json_text, std::optional<std::size_t> expected_degree = std::nullopt);
FoliationForm read_form(const std::filesystem::path& path, std::optional<std::size_t> expected_degree = std::nullopt);

/// Canonical arrangement JSON (rationals as strings), stable across runs.
std::string arrangement_to_json(const LineArrangement& arr);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace centerkit
