#pragma once

// Primitive collections, primitive relations and torus-invariant curves.

#include <cstddef>
#include <vector>

#include "toricwhb/fan.hpp"

namespace toricwhb::primitive {

using fan::Fan;
using fan::RaySet;

struct PrimitiveRelation {
    RaySet collection;
    /// Generators of the cone containing the sum of the collection in its
    /// relative interior (empty when the sum is zero).
    RaySet target;
    std::vector<Integer> coeffs;
    Integer degree;
    /// +1 on the collection, -b_i on the target, 0 elsewhere.
    IntVector relation_vector;
    bool extremal = false;

    std::size_t m() const { return collection.size(); }
    std::size_t n() const { return target.size(); }
};

/// Intersection numbers (D_i . C) for every ray.
struct CurveClass {
    IntVector intersection_vector;
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Minimal non-faces, sorted lexicographically.
std::vector<RaySet> primitive_collections(const Fan& fan);

PrimitiveRelation primitive_relation(const Fan& fan, const RaySet& collection);

/// m - sum(b), cross-checked against the anticanonical pairing.
Integer degree(const PrimitiveRelation& rel);

/// Flags each relation whose vector spans an extremal ray of the cone
/// generated by all of them.
std::vector<PrimitiveRelation> mark_extremal(std::vector<PrimitiveRelation> rels);

/// All primitive relations with extremal flags, in collection order.
std::vector<PrimitiveRelation> primitive_relations(const Fan& fan);

bool is_fano(const Fan& fan);
bool is_fano(const std::vector<PrimitiveRelation>& rels);

CurveClass curve_class_of_wall(const Fan& fan, const fan::Wall& w);
CurveClass curve_class_of_relation(const PrimitiveRelation& rel);

/// True iff a . rel_vector lies in the kernel of the transposed ray matrix.
bool in_relation_space(const Fan& fan, const IntVector& v);

/// Degrees {1 x (m-2), 0 x (d-m-n+1), -b_1, ..., -b_n}, sorted descending.
std::vector<Integer> normal_bundle_splitting(const Fan& fan, const PrimitiveRelation& rel);

/// {2} together with the normal bundle degrees, sorted descending.
std::vector<Integer> tangent_splitting(const Fan& fan, const PrimitiveRelation& rel);

}  // namespace toricwhb::primitive
