#pragma once

// Named regression checks over the catalog constructions, grouped by the
// Picard-2 bundle family ("4I"), the Picard-3 family ("4II") and the Fano
// examples ("5").

#include <string>
#include <vector>

namespace toricwhb::reproduce {

enum class Kind { base_relations, total_relations, pic_identity, intersection, splitting, criterion, equation };

std::string to_string(Kind k);

struct Check {
    std::string section;
    Kind kind = Kind::criterion;
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<std::string> sections();

/// Throws InputError for an unknown section.
std::vector<Check> run_section(const std::string& section);

/// Fixed-width pass/fail table.
std::string format_table(const std::vector<Check>& checks);

}  // namespace toricwhb::reproduce
