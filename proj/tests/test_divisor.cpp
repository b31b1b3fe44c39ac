#include <gtest/gtest.h>

#include "toricwhb/catalog.hpp"
#include "toricwhb/divisor.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/primitive.hpp"

using namespace toricwhb;
using divisor::prime_divisor;

TEST(Divisor, ClassGroupRankIsPicardNumber) {
    for (const auto& info : catalog::list()) {
        const auto f = catalog::get(info.name, 4, 1, 1);
        EXPECT_EQ(divisor::class_group_rank(f), fan::picard_number(f)) << info.name;
    }
}

TEST(Divisor, PrincipalDivisorsAreTrivial) {
    const auto f = catalog::del_pezzo_surface(6);
    for (std::size_t i = 0; i < f.dim(); ++i) {
        IntVector m(f.dim());
        m[i] = 1;
        EXPECT_TRUE(divisor::class_of(f, divisor::principal_divisor(f, m)).is_zero());
    }
}

TEST(Divisor, ClassArithmetic) {
    const auto f = catalog::del_pezzo_surface(7);
    const auto a = divisor::class_of(f, prime_divisor(f, 0));
    const auto b = divisor::class_of(f, prime_divisor(f, 2));
    EXPECT_EQ(a + b, divisor::class_of(f, lattice::add(prime_divisor(f, 0), prime_divisor(f, 2))));
    EXPECT_EQ(a - a, divisor::class_of(f, IntVector(f.num_rays())));
    EXPECT_EQ(Integer(3) * a, divisor::class_of(f, prime_divisor(f, 0, 3)));
    EXPECT_THROW(divisor::class_of(f, IntVector(2)), InputError);
}

TEST(Divisor, TorsionIsReduced) {
    // Rays spanning an index-2 sublattice give a Z/2 summand.
    const fan::Fan f(2, {make_int_vector({1, 0}), make_int_vector({1, 2}), make_int_vector({-1, -2})}, {{0, 1}});
    const auto c = divisor::class_of(f, prime_divisor(f, 0));
    bool has_torsion = false;
    for (const auto& m : c.moduli) has_torsion = has_torsion || m == 2;
    EXPECT_TRUE(has_torsion);
    const auto twice = Integer(2) * c;
    for (std::size_t k = 0; k < twice.coords.size(); ++k)
        if (twice.moduli[k] > 0) {
            EXPECT_GE(twice.coords[k], 0);
            EXPECT_LT(twice.coords[k], twice.moduli[k]);
        }
}

TEST(Divisor, KleinschmidtPicIdentities) {
    for (std::size_t d = 2; d <= 5; ++d)
        for (long a = 1; a <= 3; ++a) {
            const auto f = catalog::kleinschmidt(d, 2 * a - 1);
            for (std::size_t i = 1; i < d; ++i)
                EXPECT_TRUE(divisor::linearly_equivalent(f, prime_divisor(f, 0), prime_divisor(f, i)));
            EXPECT_TRUE(divisor::linearly_equivalent(
                f, prime_divisor(f, d + 1), lattice::add(prime_divisor(f, 0, 2 * a - 1), prime_divisor(f, d))));
            EXPECT_FALSE(divisor::linearly_equivalent(f, prime_divisor(f, 0), prime_divisor(f, d)));
        }
}

TEST(Divisor, KleinschmidtIntersectionTable) {
    for (std::size_t d = 2; d <= 5; ++d)
        for (long a = 1; a <= 3; ++a) {
            const auto f = catalog::kleinschmidt(d, 2 * a - 1);
            std::optional<primitive::CurveClass> c1, c2;
            for (const auto& r : primitive::primitive_relations(f)) {
                if (r.collection.front() == 0) c1 = primitive::curve_class_of_relation(r);
                if (r.collection.front() == d) c2 = primitive::curve_class_of_relation(r);
            }
            ASSERT_TRUE(c1 && c2);
            EXPECT_EQ(divisor::intersect(prime_divisor(f, 0), *c1), 1);
            EXPECT_EQ(divisor::intersect(prime_divisor(f, d), *c1), -(2 * a - 1));
            EXPECT_EQ(divisor::intersect(prime_divisor(f, 0), *c2), 0);
            EXPECT_EQ(divisor::intersect(prime_divisor(f, d), *c2), 1);
        }
}

TEST(Divisor, AnticanonicalPairsToDegreeOnS6) {
    const auto f = catalog::del_pezzo_surface(6);
    const auto k = divisor::anticanonical(f);
    for (const auto& r : primitive::primitive_relations(f))
        EXPECT_EQ(divisor::intersect(k, primitive::curve_class_of_relation(r)), r.degree);
}

TEST(Divisor, IntersectionsAreClassFunctions) {
    const auto f = catalog::fano4("pseudo_del_pezzo");
    const auto rels = primitive::primitive_relations(f);
    IntVector m = make_int_vector({1, -2, 0, 3});
    const auto principal = divisor::principal_divisor(f, m);
    for (const auto& r : rels) EXPECT_EQ(divisor::intersect(principal, primitive::curve_class_of_relation(r)), 0);
}
