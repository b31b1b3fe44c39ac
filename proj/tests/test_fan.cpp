#include <gtest/gtest.h>

#include "toricwhb/catalog.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/fan.hpp"

using namespace toricwhb;
using fan::Fan;
using fan::RaySet;

namespace {

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

Fan hirzebruch(long k) { return catalog::kleinschmidt(2, k); }

}  // namespace

TEST(Fan, ConstructorRejectsMalformedInput) {
    EXPECT_THROW(Fan(0, {}, {}), InputError);
    EXPECT_THROW(Fan(2, {v({1, 0}), v({1})}, {}), InputError);
    EXPECT_THROW(Fan(2, {v({1, 0}), v({1, 0})}, {}), InputError);
    EXPECT_THROW(Fan(2, {v({1, 0}), v({0, 1})}, {{0, 0}}), InputError);
    EXPECT_THROW(Fan(2, {v({1, 0}), v({0, 1})}, {{0}}), InputError);
    EXPECT_THROW(Fan(2, {v({1, 0}), v({0, 1})}, {{0, 2}}), InputError);
}

TEST(Fan, ConesAreStoredSorted) {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{1, 0}, {2, 1}, {0, 2}});
    for (const auto& c : f.max_cones()) EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_TRUE(fan::validate(f).ok());
}

TEST(Fan, CatalogFansValidate) {
    for (const auto& info : catalog::list()) {
        const std::size_t d = info.name == "w_fan" ? 4 : 3;
        const Fan f = catalog::get(info.name, d, 1, 2);
        const auto rep = fan::validate(f);
        EXPECT_TRUE(rep.ok()) << info.name << ": " << (rep.problems.empty() ? "" : rep.problems.front());
    }
}

TEST(Fan, PicardNumbers) {
    EXPECT_EQ(fan::picard_number(catalog::projective_space(2)), 1u);
    EXPECT_EQ(fan::picard_number(catalog::del_pezzo_surface(7)), 3u);
    EXPECT_EQ(fan::picard_number(catalog::del_pezzo_surface(6)), 4u);
    for (std::size_t d = 3; d <= 5; ++d) EXPECT_EQ(fan::picard_number(catalog::w_fan(d, 2, 1)), 3u);
    EXPECT_EQ(fan::picard_number(catalog::fano4("del_pezzo")), 6u);
}

TEST(Fan, DetectsNonPrimitiveRay) {
    const Fan f(2, {v({2, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    const auto rep = fan::validate(f);
    EXPECT_FALSE(rep.primitive);
    EXPECT_THROW(fan::require_valid(f), InputError);
}

TEST(Fan, DetectsSingularCone) {
    // Weighted projective plane P(1,1,2).
    const Fan f(2, {v({1, 0}), v({0, 1}), v({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
    const auto rep = fan::validate(f);
    EXPECT_TRUE(rep.primitive);
    EXPECT_FALSE(rep.smooth);
}

TEST(Fan, DetectsOverlappingCones) {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({-1, -1}), v({1, 1})}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    const auto rep = fan::validate(f);
    EXPECT_FALSE(rep.intersections);
}

TEST(Fan, DetectsIncompleteFan) {
    const Fan f(2, {v({1, 0}), v({0, 1}), v({-1, 0})}, {{0, 1}, {1, 2}});
    const auto rep = fan::validate(f);
    EXPECT_TRUE(rep.smooth);
    EXPECT_FALSE(rep.complete);
}

TEST(Fan, Faces) {
    const Fan f = catalog::projective_space(2);
    EXPECT_TRUE(fan::is_face(f, {}));
    EXPECT_TRUE(fan::is_face(f, {0, 1}));
    EXPECT_FALSE(fan::is_face(f, {0, 1, 2}));
    EXPECT_THROW(fan::is_face(f, {5}), InputError);
}

TEST(Fan, WallsOfCompleteFans) {
    for (const Fan& f : {catalog::projective_space(3), catalog::del_pezzo_surface(6), catalog::w_fan(3, 1, 1)}) {
        const auto ws = fan::walls(f);
        EXPECT_EQ(ws.size(), f.dim() * f.max_cones().size() / 2);
        for (const auto& w : ws) {
            EXPECT_EQ(w.generators.size(), f.dim() - 1);
            EXPECT_NE(w.adjacent[0], w.adjacent[1]);
        }
    }
}

TEST(Fan, ContainingCone) {
    const Fan f = hirzebruch(1);  // rays (1,0), (-1,1), (0,1), (0,-1)
    const auto origin = fan::find_containing_cone(f, v({0, 0}));
    EXPECT_FALSE(origin.max_cone);
    EXPECT_TRUE(origin.support.empty());

    const auto c = fan::find_containing_cone(f, v({1, 0}) /* x1 */);
    EXPECT_EQ(c.support, RaySet{0});
    const auto sum = fan::find_containing_cone(f, v({0, 1}));
    EXPECT_EQ(sum.support, RaySet{2});
    EXPECT_THROW(fan::find_containing_cone(f, v({1})), InputError);

    const Fan incomplete(2, {v({1, 0}), v({0, 1})}, {{0, 1}});
    EXPECT_THROW(fan::find_containing_cone(incomplete, v({-1, -1})), InputError);
}

TEST(Fan, RaySetHelpers) {
    EXPECT_EQ(fan::make_ray_set({3, 1, 2}), (RaySet{1, 2, 3}));
    EXPECT_THROW(fan::make_ray_set({1, 1}), InputError);
    EXPECT_EQ(fan::from_mask(fan::to_mask({0, 5, 63})), (RaySet{0, 5, 63}));
    EXPECT_EQ(fan::to_string(RaySet{0, 2}), "{0,2}");
}
