#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricwhb/bundle.hpp"
#include "toricwhb/catalog.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/errors.hpp"

using namespace toricwhb;
using cox::CoxForm;
using cox::Outcome;
using cox::Term;

namespace {

long eval_mod2(const CoxForm& f, const std::vector<int>& x) {
    long s = 0;
    for (const auto& t : f.terms()) {
        long m = t.coeff & 1;
        for (std::size_t i = 0; i < x.size() && m; ++i)
            if (t.exponents[i] > 0 && x[i] == 0) m = 0;
        s ^= m;
    }
    return s;
}

// Brute force over F_2-points of Cox space with a face as zero set.
bool singular_over_f2(const fan::Fan& fan, const CoxForm& f) {
    const auto n = fan.num_rays();
    const auto parts = cox::partials(f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> x(n);
        fan::RaySet zeros;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<int>(mask >> i & 1);
            if (!x[i]) zeros.push_back(i);
        }
        if (!fan::is_face(fan, zeros)) continue;
        if (eval_mod2(f, x)) continue;
        bool all = true;
        for (const auto& d : parts) all = all && eval_mod2(d, x) == 0;
        if (all) return true;
    }
    return false;
}

const std::vector<std::string> kSmallIds{"S7", "S6"};

}  // namespace

TEST(Cox, FormNormalization) {
    const CoxForm f(2, 3, {{{1, 0}, 4}, {{1, 0}, 2}, {{0, 1}, 3}, {{0, 2}, -1}});
    ASSERT_EQ(f.terms().size(), 1u);
    EXPECT_EQ(f.terms()[0], (Term{{0, 2}, 2}));
    EXPECT_TRUE(CoxForm(1, 2, {{{1}, 2}}).is_zero());
    EXPECT_THROW(CoxForm(2, 2, {{{1}, 1}}), InputError);
}

TEST(Cox, PartialsFollowPowerRule) {
    const CoxForm f(2, 5, {{{3, 1}, 1}, {{0, 5}, 1}});
    const auto d = cox::partials(f);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], CoxForm(2, 5, {{{2, 1}, 3}}));
    EXPECT_EQ(d[1], CoxForm(2, 5, {{{3, 0}, 1}}));  // y^5 dies in characteristic 5
}

TEST(Cox, ParsesBundleForms) {
    const auto pb = catalog::named_bundle("S7");
    const auto& t = pb.total;
    const auto f = cox::parse_bundle_form(t, "X3*X4*Y1^2 + 3*X2*Y3^2", 2);
    EXPECT_EQ(f.terms().size(), 2u);
    EXPECT_EQ(cox::parse_bundle_form(t, cox::format_bundle_form(t, pb.equation), 2), pb.equation);
    EXPECT_THROW(cox::parse_bundle_form(t, "X9*Y1", 2), InputError);
    EXPECT_THROW(cox::parse_bundle_form(t, "X1 +", 2), InputError);
    EXPECT_THROW(cox::parse_bundle_form(t, "Z1", 2), InputError);
}

TEST(Cox, CatalogEquationsAreHomogeneousInTheHypersurfaceClass) {
    for (const char* id : {"S7", "S6", "M1", "pseudoV4", "V4"}) {
        const auto pb = catalog::named_bundle(id);
        const auto cls = cox::is_homogeneous(pb.total.fan, pb.equation);
        ASSERT_TRUE(cls) << id;
        EXPECT_EQ(*cls, bundle::hypersurface_class(pb.total, pb.p, pb.line_bundle)) << id;
    }
    const auto pb = catalog::named_bundle("S7");
    const auto mixed = cox::parse_bundle_form(pb.total, "X1*Y1^2 + Y2^2", 2);
    EXPECT_FALSE(cox::is_homogeneous(pb.total.fan, mixed));
    EXPECT_THROW(cox::is_homogeneous(pb.total.fan, CoxForm(pb.total.fan.num_rays(), 2, {})), InputError);
}

TEST(Cox, CatalogEquationsAreSmoothAndWild) {
    for (const char* id : {"S7", "S6", "M1", "pseudoV4", "V4"}) {
        const auto pb = catalog::named_bundle(id);
        const auto v = cox::decide_smooth_monomial_partials(pb.total, pb.equation);
        EXPECT_EQ(v.outcome, Outcome::smooth) << id << ": " << v.reason;
        EXPECT_TRUE(cox::is_wild_fiberwise(pb.total, pb.equation, 2)) << id;
    }
}

TEST(Cox, TermDeletionIsCaught) {
    for (const char* id : {"S7", "S6", "M1", "pseudoV4", "V4"}) {
        const auto pb = catalog::named_bundle(id);
        for (std::size_t k = 0; k < pb.equation.terms().size(); ++k) {
            const auto mutant = pb.equation.without_term(k);
            const auto v = cox::decide_smooth_monomial_partials(pb.total, mutant);
            EXPECT_EQ(v.outcome, Outcome::singular) << id << " without term " << k;
            ASSERT_TRUE(v.vanishing_set) << id;
            EXPECT_TRUE(cox::verify_vanishing_set(pb.total.fan, mutant, *v.vanishing_set)) << id;
        }
    }
}

TEST(Cox, SearchAgreesWithBruteForceOverF2) {
    for (const auto& id : kSmallIds) {
        const auto pb = catalog::named_bundle(id);
        const auto& f = pb.total.fan;
        EXPECT_FALSE(singular_over_f2(f, pb.equation)) << id;
        EXPECT_FALSE(cox::singular_point_search(f, pb.equation, 2)) << id;
        for (std::size_t k = 0; k < pb.equation.terms().size(); ++k) {
            const auto mutant = pb.equation.without_term(k);
            const auto w = cox::singular_point_search(f, mutant, 2);
            EXPECT_EQ(w.has_value(), singular_over_f2(f, mutant)) << id << " " << k;
            if (w) EXPECT_TRUE(cox::verify_witness(f, mutant, *w));
        }
    }
}

TEST(Cox, SearchOverF4FindsMutations) {
    const auto pb = catalog::named_bundle("S7");
    EXPECT_FALSE(cox::singular_point_search(pb.total.fan, pb.equation, 4));
    for (std::size_t k = 0; k < pb.equation.terms().size(); ++k) {
        const auto mutant = pb.equation.without_term(k);
        const auto w1 = cox::singular_point_search(pb.total.fan, mutant, 4, 1u << 20, 1);
        const auto w3 = cox::singular_point_search(pb.total.fan, mutant, 4, 1u << 20, 3);
        ASSERT_TRUE(w1);
        ASSERT_TRUE(w3);
        EXPECT_EQ(w1->chart, w3->chart);
        EXPECT_TRUE(cox::verify_witness(pb.total.fan, mutant, *w1));
    }
}

TEST(Cox, SearchBudget) {
    const auto pb = catalog::named_bundle("V4");
    EXPECT_THROW(cox::singular_point_search(pb.total.fan, pb.equation, 16, 1000), ResourceError);
    EXPECT_THROW(cox::singular_point_search(pb.total.fan, pb.equation, 6), InputError);
}

TEST(Cox, WitnessVerificationRejectsBadPoints) {
    const auto pb = catalog::named_bundle("S7");
    const auto mutant = pb.equation.without_term(0);
    auto w = cox::singular_point_search(pb.total.fan, mutant, 2);
    ASSERT_TRUE(w);
    auto bad = *w;
    bad.point.assign(bad.point.size(), 0);  // zero set is everything, not a face
    EXPECT_FALSE(cox::verify_witness(pb.total.fan, mutant, bad));
    EXPECT_FALSE(cox::verify_vanishing_set(pb.total.fan, pb.equation, {}));
}

TEST(Cox, WildnessNeedsPthPowers) {
    const auto pb = catalog::named_bundle("S7");
    const auto& t = pb.total;
    EXPECT_FALSE(cox::is_wild_fiberwise(t, cox::parse_bundle_form(t, "X3*X4*Y1*Y2 + X1*X5*Y2^2 + X2*Y3^2", 2), 2));
    // Coefficients X1 and X2 share the zero X1 = X2 = 0 only if {1,2} is a face.
    const auto f = cox::parse_bundle_form(t, "X3*X4*Y1^2 + X1*X5*Y2^2 + X2*Y3^2", 2);
    EXPECT_TRUE(cox::is_wild_fiberwise(t, f, 2));
    EXPECT_FALSE(cox::is_wild_fiberwise(t, cox::parse_bundle_form(t, "X3*X4*Y1^2 + X1*X5*Y2^2", 2), 2));
}

TEST(Cox, FrobeniusSquareRootOverF4) {
    // In characteristic 2, sum g_j(x) y_j^2 = (sum sqrt(g_j(x)) y_j)^2 pointwise.
    const auto pb = catalog::named_bundle("S7");
    const auto& t = pb.total;
    const auto n = t.fan.num_rays();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> elem(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> x(n);
        for (auto& v : x) v = elem(rng);
        int lhs = 0, root = 0;
        for (const auto& term : pb.equation.terms()) {
            int mono = 1, base = 1, fiber = 1;
            for (std::size_t i = 0; i < n; ++i) {
                const int pw = oracle::GF4::pow(x[i], term.exponents[i]);
                mono = oracle::GF4::mul(mono, pw);
                const bool is_fiber = std::find(t.fiber_rays.begin(), t.fiber_rays.end(), i) != t.fiber_rays.end();
                if (is_fiber) {
                    ASSERT_EQ(term.exponents[i] % 2, 0u);
                    fiber = oracle::GF4::mul(fiber, oracle::GF4::pow(x[i], term.exponents[i] / 2));
                } else {
                    base = oracle::GF4::mul(base, pw);
                }
            }
            lhs = oracle::GF4::add(lhs, mono);
            root = oracle::GF4::add(root, oracle::GF4::mul(oracle::GF4::sqrt(base), fiber));
        }
        EXPECT_EQ(lhs, oracle::GF4::mul(root, root));
    }
}
