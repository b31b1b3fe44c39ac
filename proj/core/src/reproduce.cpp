#include "toricwhb/reproduce.hpp"

#include <iomanip>
#include <sstream>

#include "toricwhb/catalog.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/divisor.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/primitive.hpp"
#include "toricwhb/whb.hpp"

namespace toricwhb::reproduce {

namespace {

using divisor::TorusDivisor;

std::string join(const std::vector<Integer>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "}";
}

std::string join(const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string params(std::size_t d, long a) { return "d=" + std::to_string(d) + ",a=" + std::to_string(a); }

std::string params(std::size_t d, long a, long b) { return params(d, a) + ",b=" + std::to_string(b); }

class Recorder {
public:
    explicit Recorder(std::string section) : section_(std::move(section)) {}

    Recorder& as(Kind k) {
        kind_ = k;
        return *this;
    }

    void add(const std::string& name, bool passed, std::string detail = {}) {
        out_.push_back({section_, kind_, name, passed, std::move(detail)});
    }

    // Runs `body`, turning an exception into a failed check.
    template <class F>
    void guarded(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, std::string("error: ") + e.what());
        }
    }

    std::vector<Check> take() { return std::move(out_); }

private:
    std::string section_;
    Kind kind_ = Kind::criterion;
    std::vector<Check> out_;
};

void relation_round_trip(Recorder& rec, Kind kind, const std::string& name, const fan::Fan& f,
                         const std::vector<catalog::ExpectedRelation>& expected) {
    rec.as(kind).guarded(name, [&] {
        const auto diff = catalog::compare_relations(catalog::to_expected(primitive::primitive_relations(f)), expected);
        rec.add(name, diff.empty(), diff.empty() ? std::to_string(expected.size()) + " relations" : diff);
    });
}

void equivalence(Recorder& rec, const std::string& name, const fan::Fan& f, const TorusDivisor& lhs,
                 const TorusDivisor& rhs) {
    rec.as(Kind::pic_identity).guarded(name, [&] {
        const bool ok = divisor::linearly_equivalent(f, lhs, rhs);
        rec.add(name, ok,
                ok ? ""
                   : "classes " + divisor::to_string(divisor::class_of(f, lhs)) + " vs " +
                         divisor::to_string(divisor::class_of(f, rhs)));
    });
}

// Splitting of E^p (x) L on every extremal curve of the base agrees with the
// prediction of a case that holds for that curve.
void splittings_match(Recorder& rec, const std::string& label, const catalog::NamedBundle& pb) {
    const std::string name = label + ": E^2(x)L on extremal curves";
    rec.as(Kind::splitting).guarded(name, [&] {
        const auto& base = pb.spec.base;
        std::size_t curves = 0;
        for (const auto& rel : primitive::primitive_relations(base)) {
            if (!rel.extremal) continue;
            ++curves;
            const auto tangent = primitive::tangent_splitting(base, rel);
            const auto flags = whb::check_splitting_case(tangent, pb.p);
            const auto got =
                bundle::splitting_on_curve(pb.spec, pb.p, pb.line_bundle, primitive::curve_class_of_relation(rel));
            bool ok = false;
            if (flags.case_i && got == whb::expected_bundle_splitting(tangent, whb::SplitCase::i)) ok = true;
            if (flags.case_ii && got == whb::expected_bundle_splitting(tangent, whb::SplitCase::ii)) ok = true;
            if (!ok) {
                rec.add(
                    name, false,
                    "curve of " + fan::to_string(rel.collection) + ": got " + join(got) + ", tangent " + join(tangent));
                return;
            }
        }
        rec.add(name, true, std::to_string(curves) + " curves");
    });
}

void equation_checks(Recorder& rec, const std::string& label, const catalog::NamedBundle& pb) {
    rec.as(Kind::equation).guarded(label + ": equation homogeneous of class p*xi + L", [&] {
        const auto cls = cox::is_homogeneous(pb.total.fan, pb.equation);
        const auto want = bundle::hypersurface_class(pb.total, pb.p, pb.line_bundle);
        rec.add(label + ": equation homogeneous of class p*xi + L", cls && *cls == want,
                cls ? divisor::to_string(*cls) : "not homogeneous");
    });
    rec.guarded(label + ": equation smooth", [&] {
        const auto v = cox::decide_smooth_monomial_partials(pb.total, pb.equation);
        rec.add(label + ": equation smooth", v.outcome == cox::Outcome::smooth,
                cox::to_string(v.outcome) + (v.reason.empty() ? "" : " (" + v.reason + ")"));
    });
    rec.guarded(label + ": equation fiberwise wild", [&] {
        rec.add(label + ": equation fiberwise wild", cox::is_wild_fiberwise(pb.total, pb.equation, pb.p));
    });
}

void admissible_is(Recorder& rec, const std::string& name, const fan::Fan& f, const std::vector<long>& expected) {
    rec.as(Kind::criterion).guarded(name, [&] {
        const auto got = whb::admissible_set(whb::admissible_primes(f));
        rec.add(name, got == expected, "admissible " + join(got));
    });
}

std::vector<Check> section_pic2() {
    Recorder rec("4I");
    for (std::size_t d = 2; d <= 5; ++d)
        for (long a = 1; a <= 3; ++a) {
            const std::string at = "[" + params(d, a) + "] ";
            const long alpha = 2 * a - 1;
            const auto pb = catalog::named_bundle("caseI", d, a);
            const auto& base = pb.spec.base;
            const auto D = [&](std::size_t i) { return divisor::prime_divisor(base, i - 1); };

            relation_round_trip(rec, Kind::base_relations, at + "base relations (a),(b)", base,
                                catalog::reference_relations("kleinschmidt", d, alpha));
            for (std::size_t i = 2; i <= d; ++i) equivalence(rec, at + "D_1=D_" + std::to_string(i), base, D(1), D(i));
            equivalence(rec, at + "D_{d+2}=(2a-1)D_1+D_{d+1}", base, D(d + 2),
                        lattice::add(divisor::prime_divisor(base, 0, alpha), D(d + 1)));

            rec.as(Kind::intersection).guarded(at + "intersection numbers", [&] {
                std::optional<primitive::PrimitiveRelation> long_rel, fiber_rel;
                for (const auto& r : primitive::primitive_relations(base)) {
                    if (r.collection.size() == d && r.collection.front() == 0) long_rel = r;
                    if (r.collection == fan::RaySet{d, d + 1}) fiber_rel = r;
                }
                if (!long_rel || !fiber_rel) {
                    rec.add(at + "intersection numbers", false, "relations (a)/(b) not found");
                    return;
                }
                const auto c1 = primitive::curve_class_of_relation(*long_rel);
                const auto c2 = primitive::curve_class_of_relation(*fiber_rel);
                rec.add(at + "(D_1.C_1)=1", divisor::intersect(D(1), c1) == 1);
                rec.add(at + "(D_{d+1}.C_1)=-(2a-1)", divisor::intersect(D(d + 1), c1) == -alpha);
                rec.add(at + "(D_1.C_2)=0", divisor::intersect(D(1), c2) == 0);
                rec.add(at + "(D_{d+1}.C_2)=1", divisor::intersect(D(d + 1), c2) == 1);

                rec.as(Kind::splitting);
                const auto s1 = bundle::splitting_on_curve(pb.spec, 2, pb.line_bundle, c1);
                std::vector<Integer> want1(d, Integer(1));
                want1.emplace_back(-1);
                rec.add(at + "E^2(x)L|C_1 = {1 x d, -1}", s1 == want1, "got " + join(s1));
                const auto s2 = bundle::splitting_on_curve(pb.spec, 2, pb.line_bundle, c2);
                std::vector<Integer> want2{Integer(2)};
                want2.resize(d + 1, Integer(0));
                rec.add(at + "E^2(x)L|C_2 = {2, 0 x d}", s2 == want2, "got " + join(s2));
            });
            splittings_match(rec, at, pb);

            relation_round_trip(rec, Kind::total_relations, at + "total-space relations", pb.total.fan,
                                pb.reference_total_relations);
            const auto& tf = pb.total.fan;
            const auto Dt = [&](std::size_t i) { return divisor::prime_divisor(tf, pb.total.base_ray_map[i - 1]); };
            const auto F = [&](std::size_t j) { return divisor::prime_divisor(tf, pb.total.fiber_rays[j - 1]); };
            const auto sum = [](std::initializer_list<TorusDivisor> ds) {
                TorusDivisor out = *ds.begin();
                for (auto it = ds.begin() + 1; it != ds.end(); ++it) out = lattice::add(out, *it);
                return out;
            };
            const auto times = [](long k, const TorusDivisor& x) { return lattice::scale(Integer(k), x); };
            for (std::size_t i = 2; i <= d; ++i)
                equivalence(rec, at + "D~_1=D~_" + std::to_string(i), tf, Dt(1), Dt(i));
            equivalence(rec, at + "D~_{d+2}=(2a-1)D~_d+D~_{d+1}", tf, Dt(d + 2), sum({times(alpha, Dt(d)), Dt(d + 1)}));
            for (std::size_t j = 3; j <= d + 1; ++j)
                equivalence(rec, at + "F_2=F_" + std::to_string(j), tf, F(2), F(j));
            equivalence(rec, at + "F_{d+1}=(a-1)D~_1+D~_{d+1}+F_1", tf, F(d + 1),
                        sum({times(a - 1, Dt(1)), Dt(d + 1), F(1)}));
            rec.as(Kind::pic_identity).guarded(at + "X ~ 2F_{d+1}+D~_1", [&] {
                const auto x = bundle::hypersurface_class(pb.total, 2, pb.line_bundle);
                rec.add(at + "X ~ 2F_{d+1}+D~_1", x == divisor::class_of(tf, sum({times(2, F(d + 1)), Dt(1)})));
            });
            equivalence(rec, at + "2F_{d+1}+D~_1 = D~_{d+1}+D~_{d+2}+2F_1", tf, sum({times(2, F(d + 1)), Dt(1)}),
                        sum({Dt(d + 1), Dt(d + 2), times(2, F(1))}));
            admissible_is(rec, at + "admissible primes of the base = {2}", base, {2});
            equation_checks(rec, at.substr(0, at.size() - 1), pb);
        }
    rec.as(Kind::criterion).guarded("even twist d=3..5 has no admissible prime", [&] {
        for (std::size_t d = 3; d <= 5; ++d)
            for (long alpha = 0; alpha <= 4; alpha += 2) {
                const auto got = whb::admissible_set(whb::admissible_primes(catalog::kleinschmidt(d, alpha)));
                if (!got.empty()) {
                    rec.add("even twist d=3..5 has no admissible prime", false,
                            "d=" + std::to_string(d) + " twist " + std::to_string(alpha) + ": " + join(got));
                    return;
                }
            }
        rec.add("even twist d=3..5 has no admissible prime", true);
    });
    return rec.take();
}

std::vector<Check> section_pic3() {
    Recorder rec("4II");
    for (std::size_t d = 3; d <= 5; ++d)
        for (long a = 1; a <= 2; ++a)
            for (long b = 1; b <= 2; ++b) {
                const std::string at = "[" + params(d, a, b) + "] ";
                const auto pb = catalog::named_bundle("caseII", d, a, b);
                const auto& base = pb.spec.base;
                relation_round_trip(rec, Kind::base_relations, at + "base relations", base,
                                    catalog::reference_relations("w", d, a, b));
                splittings_match(rec, at, pb);
                relation_round_trip(rec, Kind::total_relations, at + "total-space relations", pb.total.fan,
                                    pb.reference_total_relations);

                const auto& tf = pb.total.fan;
                const auto Dt = [&](std::size_t i) { return divisor::prime_divisor(tf, pb.total.base_ray_map[i - 1]); };
                const auto F = [&](std::size_t j) { return divisor::prime_divisor(tf, pb.total.fiber_rays[j - 1]); };
                const auto times = [](long k, const TorusDivisor& x) { return lattice::scale(Integer(k), x); };
                using lattice::add;
                for (std::size_t i = 2; i < d; ++i)
                    equivalence(rec, at + "D~_1=D~_" + std::to_string(i), tf, Dt(1), Dt(i));
                equivalence(rec, at + "D~_{d+1}=(2a-1)D~_1+D~_d", tf, Dt(d + 1), add(times(2 * a - 1, Dt(1)), Dt(d)));
                equivalence(rec, at + "D~_{d+3}=(2b-1)D~_1+D~_{d+2}", tf, Dt(d + 3),
                            add(times(2 * b - 1, Dt(1)), Dt(d + 2)));
                for (std::size_t j = 4; j <= d + 1; ++j)
                    equivalence(rec, at + "F_3=F_" + std::to_string(j), tf, F(3), F(j));
                equivalence(rec, at + "F_{d+1}=(a-1)D~_1+D~_d+F_1", tf, F(d + 1),
                            add(add(times(a - 1, Dt(1)), Dt(d)), F(1)));
                equivalence(rec, at + "F_{d+1}=(b-1)D~_1+D~_{d+2}+F_2", tf, F(d + 1),
                            add(add(times(b - 1, Dt(1)), Dt(d + 2)), F(2)));
                const auto x = add(times(2, F(d + 1)), Dt(1));
                rec.as(Kind::pic_identity).guarded(at + "X ~ 2F_{d+1}+D~_1", [&] {
                    rec.add(at + "X ~ 2F_{d+1}+D~_1",
                            bundle::hypersurface_class(pb.total, 2, pb.line_bundle) == divisor::class_of(tf, x));
                });
                equivalence(rec, at + "X ~ D~_d+D~_{d+1}+2F_1", tf, x, add(add(Dt(d), Dt(d + 1)), times(2, F(1))));
                equivalence(rec, at + "X ~ D~_{d+2}+D~_{d+3}+2F_2", tf, x,
                            add(add(Dt(d + 2), Dt(d + 3)), times(2, F(2))));
                admissible_is(rec, at + "admissible primes of the base = {2}", base, {2});
                equation_checks(rec, at.substr(0, at.size() - 1), pb);
            }
    rec.as(Kind::criterion).guarded("five-collection family infeasible for d<=10", [&] {
        const auto sweep = whb::sweep_pic3_case_ii(10, 13);
        std::string detail = std::to_string(sweep.tuples) + " tuples, " + std::to_string(sweep.analyses) + " analyses";
        if (!sweep.feasible.empty()) {
            const auto& [data, p] = sweep.feasible.front();
            detail += ", " + std::to_string(sweep.feasible.size()) + " feasible; first: sizes (" +
                      std::to_string(data.p[0]) + "," + std::to_string(data.p[1]) + "," + std::to_string(data.p[2]) +
                      "," + std::to_string(data.p[3]) + "," + std::to_string(data.p[4]) + ") p=" + std::to_string(p);
        }
        rec.add("five-collection family infeasible for d<=10", sweep.feasible.empty(), detail);
    });
    return rec.take();
}

std::vector<Check> section_fano() {
    Recorder rec("5");
    const std::pair<const char*, const char*> examples[] = {
        {"S7", "S7"}, {"S6", "S6"}, {"M1", "M1"}, {"pseudoV4", "pseudoV4"}, {"V4", "V4"}};
    for (const auto& [id, name] : examples) {
        const std::string label = std::string("[") + id + "]";
        rec.as(Kind::total_relations).guarded(label + " construction", [&] {
            const auto pb = catalog::named_bundle(id);
            relation_round_trip(rec, Kind::base_relations, label + " base relations", pb.spec.base,
                                catalog::reference_relations(name));
            rec.as(Kind::criterion).add(label + " base is Fano", primitive::is_fano(pb.spec.base));
            admissible_is(rec, label + " admissible primes = {2}", pb.spec.base, {2});
            splittings_match(rec, label, pb);
            relation_round_trip(rec, Kind::total_relations, label + " total-space relations", pb.total.fan,
                                pb.reference_total_relations);
            equation_checks(rec, label, pb);
        });
    }
    const std::pair<std::string, fan::Fan> surfaces[] = {
        {"P^2", catalog::projective_space(2)},
        {"P^1xP^1", catalog::product_of_p1(2)},
        {"P(O+O(1)) over P^1", catalog::kleinschmidt(2, 1)},
        {"S6", catalog::del_pezzo_surface(6)},
        {"S7", catalog::del_pezzo_surface(7)},
    };
    for (const auto& [name, f] : surfaces) admissible_is(rec, "del Pezzo " + name + ": admissible = {2}", f, {2});
    for (std::size_t d = 2; d <= 4; ++d)
        admissible_is(rec, "(P^1)^" + std::to_string(d) + ": admissible = {2}", catalog::product_of_p1(d), {2});

    rec.as(Kind::criterion).guarded("Fano classification of the 4-fold examples", [&] {
        std::string detail;
        bool ok = true;
        for (const char* n : {"M1", "pseudoV4", "V4"}) {
            const auto c = whb::classify_fano(catalog::get(n));
            detail += std::string(detail.empty() ? "" : "; ") + n + ": " + whb::to_string(c.kind);
            ok = ok && c.kind == whb::FanoCase::small_contraction_type;
        }
        rec.add("Fano classification of the 4-fold examples", ok, detail);
    });
    return rec.take();
}

}  // namespace

std::string to_string(Kind k) {
    switch (k) {
        case Kind::base_relations:
            return "base relations";
        case Kind::total_relations:
            return "total-space relations";
        case Kind::pic_identity:
            return "Pic identity";
        case Kind::intersection:
            return "intersection number";
        case Kind::splitting:
            return "splitting";
        case Kind::criterion:
            return "criterion";
        case Kind::equation:
            return "equation";
    }
    return "?";
}

std::vector<std::string> sections() { return {"4I", "4II", "5"}; }

std::vector<Check> run_section(const std::string& section) {
    if (section == "4I") return section_pic2();
    if (section == "4II") return section_pic3();
    if (section == "5") return section_fano();
    throw InputError("unknown section '" + section + "' (expected 4I, 4II or 5)");
}

std::string format_table(const std::vector<Check>& checks) {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.passed;
        os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width)) << c.name;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << '\n';
    }
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace toricwhb::reproduce
