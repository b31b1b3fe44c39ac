#pragma once

// JSON file formats for fans, divisors, bundle specs, equations and reports.
// Readers throw InputError with the source name and line/column (syntax) or
// field path (structure) of the problem.

#include <filesystem>
#include <string>
#include <vector>

#include "toricwhb/bundle.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/fan.hpp"
#include "toricwhb/primitive.hpp"
#include "toricwhb/whb.hpp"

namespace toricwhb::io {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"dim", "rays", "max_cones"}; keys in any order, cone indices zero-based.
fan::Fan parse_fan(const std::string& text, const std::string& source = "<fan>");
fan::Fan read_fan(const std::filesystem::path& path);
std::string format_fan(const fan::Fan& fan);

/// JSON array of integers, one per ray.
divisor::TorusDivisor parse_divisor(const std::string& text, const std::string& source = "<divisor>");
std::string format_divisor(const divisor::TorusDivisor& d);

/// {"base": path or inline fan, "summands": [[...], ...]}. Relative base paths
/// are resolved against `base_dir`.
bundle::BundleSpec parse_bundle_spec(const std::string& text, const std::filesystem::path& base_dir,
                                     const std::string& source = "<bundle>");
bundle::BundleSpec read_bundle_spec(const std::filesystem::path& path);
std::string format_bundle_spec(const bundle::BundleSpec& spec);

/// {"char": p, "terms": [{"exponents": [...], "coeff": c}]}.
cox::CoxForm parse_equation(const std::string& text, const std::string& source = "<equation>");
std::string format_equation(const cox::CoxForm& form);

/// Array of {collection, target, coeffs, degree, extremal}.
std::string format_relations(const std::vector<primitive::PrimitiveRelation>& rels);

/// One {"prime", "admissible", "relations"} object per prime, as an array.
std::string format_verdicts(const std::vector<whb::PrimeVerdict>& verdicts);

}  // namespace toricwhb::io
