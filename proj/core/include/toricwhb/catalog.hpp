#pragma once

// Named fans, bundle constructions and equations, with their reference
// primitive-relation lists.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricwhb/bundle.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/fan.hpp"
#include "toricwhb/primitive.hpp"

namespace toricwhb::catalog {

using fan::Fan;
using fan::RaySet;

Fan projective_space(std::size_t d);
Fan product_of_p1(std::size_t d);
/// P(O + O(alpha)) over P^{d-1}; rays x_1..x_{d+2} with x_1 + ... + x_d = alpha x_{d+1}.
Fan kleinschmidt(std::size_t d, long alpha);
/// Picard-3 fan with relations x_1+...+x_{d-1} = (2a-1)x_d + (2b-1)x_{d+2},
/// x_d + x_{d+1} = 0, x_{d+2} + x_{d+3} = 0.
Fan w_fan(std::size_t d, long a, long b);
/// k = 6 or 7.
Fan del_pezzo_surface(int k);
/// "M1", "pseudo_del_pezzo" or "del_pezzo".
Fan fano4(const std::string& name);
/// P(O + O(a_1) + ... + O(a_r)) over P^n, as a fan.
Fan projective_bundle_over_projective_space(std::size_t n, const std::vector<long>& twists);

/// A primitive relation in reference form: collection and target with coefficients.
struct ExpectedRelation {
    RaySet collection;
    std::map<std::size_t, Integer> target;
    friend bool operator==(const ExpectedRelation&, const ExpectedRelation&) = default;
    friend auto operator<=>(const ExpectedRelation& a, const ExpectedRelation& b) {
        return a.collection <=> b.collection;
    }
};

ExpectedRelation to_expected(const primitive::PrimitiveRelation& rel);
std::vector<ExpectedRelation> to_expected(const std::vector<primitive::PrimitiveRelation>& rels);

/// Parses "x1+x2=x3+2y1" style text (one relation). `resolve` maps a letter
/// and 1-based index to a ray index.
ExpectedRelation parse_relation(const std::string& text, const std::function<std::size_t(char, std::size_t)>& resolve);

/// Reference relations of a fan (base names x_i).
std::vector<ExpectedRelation> reference_relations(const std::string& name, std::size_t d = 0, long a = 0, long b = 0);

/// Sorted set comparison; returns an explanation of the first difference or
/// an empty string when equal.
std::string compare_relations(std::vector<ExpectedRelation> computed, std::vector<ExpectedRelation> expected);

struct NamedBundle {
    std::string id;
    bundle::BundleSpec spec;
    divisor::TorusDivisor line_bundle;  // L
    long p = 2;
    std::string equation_text;
    bundle::TotalSpaceFan total;
    cox::CoxForm equation;
    /// Reference total-space relations (x for lifted base rays, y for fiber rays).
    std::vector<ExpectedRelation> reference_total_relations;
};

/// id is one of caseI, caseII, S7, S6, M1, pseudoV4, V4. Throws InputError
/// for unknown ids or invalid parameters.
NamedBundle named_bundle(const std::string& id, std::size_t d = 0, long a = 0, long b = 0);

struct CatalogInfo {
    std::string name;
    std::string parameters;
    std::string description;
};

std::vector<CatalogInfo> list();

/// Fan by catalog name with optional parameters (d, a, b).
Fan get(const std::string& name, std::size_t d = 0, long a = 0, long b = 0);

}  // namespace toricwhb::catalog
