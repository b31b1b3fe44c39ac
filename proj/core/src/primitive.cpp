#include "toricwhb/primitive.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toricwhb/errors.hpp"

namespace toricwhb::primitive {

namespace {

bool all_facets_are_faces(const std::set<RaySet>& faces, const RaySet& s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        RaySet sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        if (!faces.count(sub)) return false;
    }
    return true;
}

void sort_desc(std::vector<Integer>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

std::vector<RaySet> primitive_collections(const Fan& fan) {
    std::vector<RaySet> out;
    std::set<RaySet> level{RaySet{}};
    while (!level.empty()) {
        std::set<RaySet> next;
        for (const auto& f : level) {
            const std::size_t start = f.empty() ? 0 : f.back() + 1;
            for (std::size_t j = start; j < fan.num_rays(); ++j) {
                RaySet s = f;
                s.push_back(j);
                if (!all_facets_are_faces(level, s)) continue;
                if (fan::is_face(fan, s))
                    next.insert(std::move(s));
                else
                    out.push_back(std::move(s));
            }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimitiveRelation primitive_relation(const Fan& fan, const RaySet& collection) {
    if (collection.empty()) throw InputError("primitive_relation: empty collection");
    if (fan::is_face(fan, collection))
        throw InputError("primitive_relation: " + fan::to_string(collection) + " is a face");
    for (std::size_t k = 0; k < collection.size(); ++k) {
        RaySet sub = collection;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        if (!fan::is_face(fan, sub))
            throw InputError("primitive_relation: " + fan::to_string(collection) + " is not minimal");
    }

    IntVector sum(fan.dim());
    for (std::size_t i : collection) sum = lattice::add(sum, fan.ray(i));
    const auto cc = fan::find_containing_cone(fan, sum);

    PrimitiveRelation rel;
    rel.collection = collection;
    rel.target = cc.support;
    rel.relation_vector.assign(fan.num_rays(), Integer(0));
    for (std::size_t i : collection) rel.relation_vector[i] = 1;
    IntVector check(fan.dim());
    for (std::size_t k = 0; k < cc.support.size(); ++k) {
        const Rational& c = cc.support_coeffs[k];
        if (c.get_den() != 1) throw InternalError("primitive_relation: non-integral coefficient " + c.get_str());
        rel.coeffs.push_back(c.get_num());
        rel.relation_vector[cc.support[k]] -= c.get_num();
        check = lattice::add(check, lattice::scale(c.get_num(), fan.ray(cc.support[k])));
    }
    if (check != sum) throw InternalError("primitive_relation: relation identity failed");
    rel.degree = degree(rel);
    return rel;
}

Integer degree(const PrimitiveRelation& rel) {
    Integer d = static_cast<unsigned long>(rel.collection.size());
    for (const auto& b : rel.coeffs) d -= b;
    Integer pairing = 0;
    for (const auto& x : rel.relation_vector) pairing += x;
    if (!rel.relation_vector.empty() && pairing != d)
        throw InternalError("degree: anticanonical pairing disagrees with m - sum(b)");
    return d;
}

std::vector<PrimitiveRelation> mark_extremal(std::vector<PrimitiveRelation> rels) {
    std::vector<IntVector> gens;
    gens.reserve(rels.size());
    for (const auto& r : rels) gens.push_back(r.relation_vector);
    for (std::size_t i = 0; i < rels.size(); ++i) rels[i].extremal = lattice::is_extremal_generator(gens, i);
    return rels;
}

std::vector<PrimitiveRelation> primitive_relations(const Fan& fan) {
    std::vector<PrimitiveRelation> rels;
    for (const auto& pc : primitive_collections(fan)) rels.push_back(primitive_relation(fan, pc));
    return mark_extremal(std::move(rels));
}

bool is_fano(const std::vector<PrimitiveRelation>& rels) {
    return std::all_of(rels.begin(), rels.end(), [](const PrimitiveRelation& r) { return r.degree > 0; });
}

bool is_fano(const Fan& fan) {
    std::vector<PrimitiveRelation> rels;
    for (const auto& pc : primitive_collections(fan)) rels.push_back(primitive_relation(fan, pc));
    return is_fano(rels);
}

CurveClass curve_class_of_wall(const Fan& fan, const fan::Wall& w) {
    const IntVector sum = lattice::add(fan.ray(w.opposite_rays[0]), fan.ray(w.opposite_rays[1]));
    const auto lambda = lattice::solve_in_span(fan.cone_rays(w.generators), sum);
    if (!lambda) throw InputError("curve_class_of_wall: opposite rays do not close up over the wall");
    CurveClass c;
    c.intersection_vector.assign(fan.num_rays(), Integer(0));
    c.intersection_vector[w.opposite_rays[0]] = 1;
    c.intersection_vector[w.opposite_rays[1]] = 1;
    for (std::size_t k = 0; k < w.generators.size(); ++k) {
        if ((*lambda)[k].get_den() != 1)
            throw InputError("curve_class_of_wall: non-integral wall relation (fan not smooth)");
        c.intersection_vector[w.generators[k]] = -(*lambda)[k].get_num();
    }
    return c;
}

CurveClass curve_class_of_relation(const PrimitiveRelation& rel) { return CurveClass{rel.relation_vector}; }

bool in_relation_space(const Fan& fan, const IntVector& v) {
    if (v.size() != fan.num_rays()) return false;
    IntVector acc(fan.dim());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc = lattice::add(acc, lattice::scale(v[i], fan.ray(i)));
    return lattice::is_zero(acc);
}

std::vector<Integer> normal_bundle_splitting(const Fan& fan, const PrimitiveRelation& rel) {
    if (!rel.extremal) throw InputError("normal_bundle_splitting: relation is not extremal");
    const long d = static_cast<long>(fan.dim());
    const long m = static_cast<long>(rel.m());
    const long n = static_cast<long>(rel.n());
    const long zeros = d - m - n + 1;
    if (zeros < 0) throw InputError("normal_bundle_splitting: d - m - n + 1 < 0");
    std::vector<Integer> out;
    for (long i = 0; i < m - 2; ++i) out.emplace_back(1);
    for (long i = 0; i < zeros; ++i) out.emplace_back(0);
    for (const auto& b : rel.coeffs) out.push_back(-b);
    sort_desc(out);
    return out;
}

std::vector<Integer> tangent_splitting(const Fan& fan, const PrimitiveRelation& rel) {
    auto out = normal_bundle_splitting(fan, rel);
    out.emplace_back(2);
    sort_desc(out);
    return out;
}

}  // namespace toricwhb::primitive
