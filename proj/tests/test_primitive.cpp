#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricwhb/catalog.hpp"
#include "toricwhb/divisor.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/primitive.hpp"

using namespace toricwhb;
using fan::RaySet;

TEST(Primitive, ProjectiveSpaceHasOneRelation) {
    const auto rels = primitive::primitive_relations(catalog::projective_space(3));
    ASSERT_EQ(rels.size(), 1u);
    EXPECT_EQ(rels[0].collection, (RaySet{0, 1, 2, 3}));
    EXPECT_TRUE(rels[0].target.empty());
    EXPECT_EQ(rels[0].degree, 4);
    EXPECT_TRUE(rels[0].extremal);
}

TEST(Primitive, ProductOfLines) {
    const auto rels = primitive::primitive_relations(catalog::product_of_p1(4));
    ASSERT_EQ(rels.size(), 4u);
    for (const auto& r : rels) {
        EXPECT_EQ(r.m(), 2u);
        EXPECT_EQ(r.n(), 0u);
        EXPECT_EQ(r.degree, 2);
        EXPECT_TRUE(r.extremal);
    }
}

TEST(Primitive, HirzebruchTwoIsNotFano) {
    const auto f = catalog::kleinschmidt(2, 2);
    const auto rels = primitive::primitive_relations(f);
    ASSERT_EQ(rels.size(), 2u);
    EXPECT_EQ(rels[0].collection, (RaySet{0, 1}));
    EXPECT_EQ(rels[0].target, (RaySet{2}));
    EXPECT_EQ(rels[0].coeffs, (std::vector<Integer>{2}));
    EXPECT_EQ(rels[0].degree, 0);
    EXPECT_FALSE(primitive::is_fano(f));
    EXPECT_TRUE(primitive::is_fano(catalog::kleinschmidt(2, 1)));
}

TEST(Primitive, KleinschmidtFanoIffTwistBelowDimension) {
    for (std::size_t d = 2; d <= 5; ++d)
        for (long alpha = 0; alpha <= 6; ++alpha)
            EXPECT_EQ(primitive::is_fano(catalog::kleinschmidt(d, alpha)), alpha < static_cast<long>(d))
                << "d=" << d << " alpha=" << alpha;
}

TEST(Primitive, CollectionsAreMinimalNonFaces) {
    const auto f = catalog::del_pezzo_surface(6);
    const auto pcs = primitive::primitive_collections(f);
    EXPECT_EQ(pcs.size(), 9u);
    EXPECT_TRUE(std::is_sorted(pcs.begin(), pcs.end()));
    for (const auto& p : pcs) {
        EXPECT_FALSE(fan::is_face(f, p));
        for (std::size_t drop = 0; drop < p.size(); ++drop) {
            RaySet sub;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (i != drop) sub.push_back(p[i]);
            EXPECT_TRUE(fan::is_face(f, sub));
        }
    }
}

TEST(Primitive, RelationRejectsFacesAndNonMinimalSets) {
    const auto f = catalog::del_pezzo_surface(7);
    EXPECT_THROW(primitive::primitive_relation(f, {0, 2}), InputError);
    EXPECT_THROW(primitive::primitive_relation(f, {0, 1, 4}), InputError);
}

TEST(Primitive, RelationVectorIsALinearRelation) {
    for (const char* name : {"S6", "S7", "M1", "V4"}) {
        const auto f = catalog::get(name);
        for (const auto& r : primitive::primitive_relations(f)) {
            IntVector total(f.dim());
            for (std::size_t i = 0; i < f.num_rays(); ++i)
                total = lattice::add(total, lattice::scale(r.relation_vector[i], f.ray(i)));
            EXPECT_TRUE(lattice::is_zero(total)) << name;
            EXPECT_TRUE(primitive::in_relation_space(f, r.relation_vector));
        }
    }
}

TEST(Primitive, ExtremalityMatchesFacetEnumeration) {
    for (const auto& info : catalog::list()) {
        const auto f = catalog::get(info.name, info.name == "w_fan" ? 4 : 3, 1, 2);
        const auto rels = primitive::primitive_relations(f);
        oracle::IntRows gens;
        for (const auto& r : rels) gens.push_back(r.relation_vector);
        const auto expected = oracle::extremal_by_facets(gens);
        for (std::size_t i = 0; i < rels.size(); ++i)
            EXPECT_EQ(rels[i].extremal, expected[i]) << info.name << " relation " << fan::to_string(rels[i].collection);
    }
}

TEST(Primitive, S7ExtremalRelations) {
    // Blow-up of P^2 in two points: the three (-1)-curves span the Mori cone.
    const auto rels = primitive::primitive_relations(catalog::del_pezzo_surface(7));
    std::size_t extremal = 0;
    for (const auto& r : rels) {
        extremal += r.extremal;
        EXPECT_EQ(r.extremal, r.degree == 1) << fan::to_string(r.collection);
    }
    EXPECT_EQ(extremal, 3u);
}

TEST(Primitive, WallCurvesMatchRelationCurves) {
    const auto f = catalog::kleinschmidt(3, 1);
    const auto rels = primitive::primitive_relations(f);
    std::vector<primitive::CurveClass> wall_classes;
    for (const auto& w : fan::walls(f)) wall_classes.push_back(primitive::curve_class_of_wall(f, w));
    for (const auto& r : rels) {
        const auto c = primitive::curve_class_of_relation(r);
        EXPECT_NE(std::find(wall_classes.begin(), wall_classes.end(), c), wall_classes.end())
            << fan::to_string(r.collection);
    }
}

TEST(Primitive, DegreePairsWithAnticanonical) {
    const auto f = catalog::fano4("M1");
    const auto k = divisor::anticanonical(f);
    for (const auto& r : primitive::primitive_relations(f))
        EXPECT_EQ(divisor::intersect(k, primitive::curve_class_of_relation(r)), r.degree);
}

TEST(Primitive, NormalBundleSplitting) {
    const auto f = catalog::kleinschmidt(4, 3);
    for (const auto& r : primitive::primitive_relations(f)) {
        const auto normal = primitive::normal_bundle_splitting(f, r);
        const auto tangent = primitive::tangent_splitting(f, r);
        EXPECT_EQ(tangent.size(), normal.size() + 1);
        if (r.m() == 4) EXPECT_EQ(normal, (std::vector<Integer>{1, 1, -3}));
        if (r.m() == 2) EXPECT_EQ(normal, (std::vector<Integer>{0, 0, 0}));
        Integer sum = 0;
        for (const auto& x : tangent) sum += x;
        EXPECT_EQ(sum, r.degree);
    }
}
