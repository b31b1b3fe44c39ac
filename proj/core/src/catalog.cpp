#include "toricwhb/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toricwhb/errors.hpp"

namespace toricwhb::catalog {

namespace {

IntVector unit(std::size_t d, std::size_t i, long s = 1) {
    IntVector v(d);
    v[i] = s;
    return v;
}

IntVector vec(std::initializer_list<long> xs) { return make_int_vector(xs); }

// Maximal cones of a complete simplicial fan whose minimal non-faces are known:
// the d-subsets containing none of them.
std::vector<RaySet> cones_avoiding(std::size_t num_rays, std::size_t d, const std::vector<RaySet>& collections) {
    std::vector<RaySet> out;
    std::vector<bool> pick(num_rays, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        RaySet s;
        for (std::size_t i = 0; i < num_rays; ++i)
            if (pick[i]) s.push_back(i);
        bool ok = true;
        for (const auto& c : collections)
            if (std::includes(s.begin(), s.end(), c.begin(), c.end())) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t base_index(char letter, std::size_t index) {
    if (letter != 'x') throw InputError(std::string("unknown relation variable ") + letter);
    return index - 1;
}

std::vector<ExpectedRelation> parse_all(const std::vector<std::string>& texts,
                                        const std::function<std::size_t(char, std::size_t)>& resolve) {
    std::vector<ExpectedRelation> out;
    for (const auto& t : texts) out.push_back(parse_relation(t, resolve));
    return out;
}

const std::vector<std::string>& s7_text() {
    static const std::vector<std::string> t{"x1+x2=x3", "x1+x5=0", "x2+x4=x5", "x3+x4=0", "x3+x5=x2"};
    return t;
}

const std::vector<std::string>& s6_text() {
    static const std::vector<std::string> t{"x1+x5=0",  "x3+x4=0",  "x2+x6=0",  "x3+x6=x1", "x3+x5=x2",
                                            "x1+x2=x3", "x5+x6=x4", "x2+x4=x5", "x1+x4=x6"};
    return t;
}

const std::vector<std::string>& m1_text() {
    static const std::vector<std::string> t{"x1+x8=0",        "x4+x5=0",        "x6+x7=0",       "x1+x2+x3=x4+x6",
                                            "x4+x6+x8=x2+x3", "x2+x3+x5=x6+x8", "x2+x3+x7=x4+x8"};
    return t;
}

const std::vector<std::string>& pseudo_v4_text() {
    static const std::vector<std::string> t{"x4+x9=0",        "x1+x5=0",        "x2+x6=0",        "x3+x7=0",
                                            "x1+x2+x9=x7+x8", "x1+x3+x9=x6+x8", "x2+x3+x9=x5+x8", "x1+x2+x3=x4+x8",
                                            "x4+x5+x8=x2+x3", "x4+x6+x8=x1+x3", "x4+x7+x8=x1+x2", "x5+x6+x8=x3+x9",
                                            "x5+x7+x8=x2+x9", "x6+x7+x8=x1+x9"};
    return t;
}

const std::vector<std::string>& v4_text() {
    static const std::vector<std::string> t{
        "x4+x10=0",        "x1+x5=0",         "x2+x6=0",         "x3+x7=0",         "x8+x9=0",
        "x1+x2+x10=x7+x8", "x1+x3+x10=x6+x8", "x2+x3+x10=x5+x8", "x1+x2+x3=x4+x8",  "x1+x9+x10=x6+x7",
        "x2+x9+x10=x5+x7", "x3+x9+x10=x5+x6", "x1+x2+x9=x4+x7",  "x1+x3+x9=x4+x6",  "x2+x3+x9=x4+x5",
        "x4+x5+x6=x3+x9",  "x4+x5+x7=x2+x9",  "x4+x6+x7=x1+x9",  "x5+x6+x7=x9+x10", "x4+x5+x8=x2+x3",
        "x4+x6+x8=x1+x3",  "x4+x7+x8=x1+x2",  "x5+x6+x8=x3+x10", "x5+x7+x8=x2+x10", "x6+x7+x8=x1+x10"};
    return t;
}

// Reference total-space relations; x stands for the lifted base rays.
const std::vector<std::string>& s7_total_text() {
    static const std::vector<std::string> t{"x1+x2=x3+y2+y3", "x1+x5=y2",       "x2+x4=x5+y1+y3",
                                            "x3+x4=y1",       "x3+x5=x2+y1+y2", "y1+y2+y3=0"};
    return t;
}

const std::vector<std::string>& s6_total_text() {
    static const std::vector<std::string> t{"x1+x5=y1",       "x3+x4=y2",       "x2+x6=y3",       "x3+x6=x1+y2+y3",
                                            "x3+x5=x2+y1+y2", "x1+x2=x3+y1+y3", "x5+x6=x4+y1+y3", "x2+x4=x5+y2+y3",
                                            "x1+x4=x6+y1+y2", "y1+y2+y3=0"};
    return t;
}

const std::vector<std::string>& m1_total_text() {
    static const std::vector<std::string> t{"x1+x8=y1",
                                            "x4+x5=y2",
                                            "x6+x7=y3",
                                            "x1+x2+x3=x4+x6+y1+y4+y5",
                                            "x4+x6+x8=x2+x3+y1+y2+y3",
                                            "x2+x3+x5=x6+x8+y2+y4+y5",
                                            "x2+x3+x7=x4+x8+y3+y4+y5",
                                            "y1+y2+y3+y4+y5=0"};
    return t;
}

const std::vector<std::string>& pseudo_v4_total_text() {
    static const std::vector<std::string> t{"x4+x9=y4",
                                            "x1+x5=y1",
                                            "x2+x6=y2",
                                            "x3+x7=y3",
                                            "x1+x2+x9=x7+x8+y1+y2+y4",
                                            "x1+x3+x9=x6+x8+y1+y3+y4",
                                            "x2+x3+x9=x5+x8+y2+y3+y4",
                                            "x1+x2+x3=x4+x8+y1+y2+y3",
                                            "x4+x5+x8=x2+x3+y1+y4+y5",
                                            "x4+x6+x8=x1+x3+y2+y4+y5",
                                            "x4+x7+x8=x1+x2+y3+y4+y5",
                                            "x5+x6+x8=x3+x9+y1+y2+y5",
                                            "x5+x7+x8=x2+x9+y1+y3+y5",
                                            "x6+x7+x8=x1+x9+y2+y3+y5",
                                            "y1+y2+y3+y4+y5=0"};
    return t;
}

const std::vector<std::string>& v4_total_text() {
    static const std::vector<std::string> t{"x4+x10=y4",
                                            "x1+x5=y1",
                                            "x2+x6=y2",
                                            "x3+x7=y3",
                                            "x8+x9=y5",
                                            "x1+x2+x10=x7+x8+y1+y2+y4",
                                            "x1+x3+x10=x6+x8+y1+y3+y4",
                                            "x2+x3+x10=x5+x8+y2+y3+y4",
                                            "x1+x2+x3=x4+x8+y1+y2+y3",
                                            "x1+x9+x10=x6+x7+y1+y4+y5",
                                            "x2+x9+x10=x5+x7+y2+y4+y5",
                                            "x3+x9+x10=x5+x6+y3+y4+y5",
                                            "x1+x2+x9=x4+x7+y1+y2+y5",
                                            "x1+x3+x9=x4+x6+y1+y3+y5",
                                            "x2+x3+x9=x4+x5+y2+y3+y5",
                                            "x4+x5+x6=x3+x9+y1+y2+y4",
                                            "x4+x5+x7=x2+x9+y1+y3+y4",
                                            "x4+x6+x7=x1+x9+y2+y3+y4",
                                            "x5+x6+x7=x9+x10+y1+y2+y3",
                                            "x4+x5+x8=x2+x3+y1+y4+y5",
                                            "x4+x6+x8=x1+x3+y2+y4+y5",
                                            "x4+x7+x8=x1+x2+y3+y4+y5",
                                            "x5+x6+x8=x3+x10+y1+y2+y5",
                                            "x5+x7+x8=x2+x10+y1+y3+y5",
                                            "x6+x7+x8=x1+x10+y2+y3+y5",
                                            "y1+y2+y3+y4+y5=0"};
    return t;
}

std::vector<RaySet> collections_of(const std::vector<std::string>& text) {
    std::vector<RaySet> out;
    for (const auto& r : parse_all(text, base_index)) out.push_back(r.collection);
    return out;
}

RaySet range_set(std::size_t from, std::size_t to) {  // [from, to)
    RaySet s;
    for (std::size_t i = from; i < to; ++i) s.push_back(i);
    return s;
}

void add_target(ExpectedRelation& r, std::size_t ray, const Integer& coeff) {
    if (coeff == 0) return;
    if (coeff < 0) throw InternalError("reference relation with a negative coefficient");
    r.target[ray] += coeff;
}

}  // namespace

Fan projective_space(std::size_t d) {
    if (d == 0) throw InputError("projective_space: d must be positive");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < d; ++i) rays.push_back(unit(d, i));
    rays.emplace_back(d, Integer(-1));
    std::vector<RaySet> cones;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        RaySet c;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan(d, std::move(rays), std::move(cones));
}

Fan product_of_p1(std::size_t d) {
    if (d == 0) throw InputError("product_of_p1: d must be positive");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < d; ++i) {
        rays.push_back(unit(d, i));
        rays.push_back(unit(d, i, -1));
    }
    std::vector<RaySet> cones;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        RaySet c;
        for (std::size_t i = 0; i < d; ++i) c.push_back(2 * i + ((mask >> i) & 1));
        cones.push_back(std::move(c));
    }
    return Fan(d, std::move(rays), std::move(cones));
}

Fan kleinschmidt(std::size_t d, long alpha) {
    if (d < 2) throw InputError("kleinschmidt: d must be at least 2");
    if (alpha < 0) throw InputError("kleinschmidt: twist must be nonnegative");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i + 1 < d; ++i) rays.push_back(unit(d, i));
    IntVector xd(d, Integer(-1));
    xd[d - 1] = alpha;
    rays.push_back(std::move(xd));
    rays.push_back(unit(d, d - 1));
    rays.push_back(unit(d, d - 1, -1));
    std::vector<RaySet> cones;
    for (std::size_t skip = 0; skip < d; ++skip)
        for (std::size_t fiber = d; fiber < d + 2; ++fiber) {
            RaySet c;
            for (std::size_t i = 0; i < d; ++i)
                if (i != skip) c.push_back(i);
            c.push_back(fiber);
            cones.push_back(std::move(c));
        }
    return Fan(d, std::move(rays), std::move(cones));
}

Fan w_fan(std::size_t d, long a, long b) {
    if (d < 3) throw InputError("w_fan: d must be at least 3");
    if (a < 1 || b < 1) throw InputError("w_fan: a and b must be positive");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i + 2 < d; ++i) rays.push_back(unit(d, i));
    IntVector last(d, Integer(-1));
    last[d - 2] = 2 * a - 1;
    last[d - 1] = 2 * b - 1;
    rays.push_back(std::move(last));
    rays.push_back(unit(d, d - 2));
    rays.push_back(unit(d, d - 2, -1));
    rays.push_back(unit(d, d - 1));
    rays.push_back(unit(d, d - 1, -1));
    std::vector<RaySet> cones;
    for (std::size_t skip = 0; skip + 1 < d; ++skip)
        for (std::size_t f1 = d - 1; f1 < d + 1; ++f1)
            for (std::size_t f2 = d + 1; f2 < d + 3; ++f2) {
                RaySet c;
                for (std::size_t i = 0; i + 1 < d; ++i)
                    if (i != skip) c.push_back(i);
                c.push_back(f1);
                c.push_back(f2);
                cones.push_back(std::move(c));
            }
    return Fan(d, std::move(rays), std::move(cones));
}

Fan del_pezzo_surface(int k) {
    if (k == 7)
        return Fan(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({-1, -1}), vec({-1, 0})},
                   {{0, 2}, {2, 1}, {1, 4}, {4, 3}, {3, 0}});
    if (k == 6)
        return Fan(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({-1, -1}), vec({-1, 0}), vec({0, -1})},
                   {{0, 2}, {2, 1}, {1, 4}, {4, 3}, {3, 5}, {5, 0}});
    throw InputError("del_pezzo_surface: only degrees 6 and 7 are in the catalog");
}

Fan fano4(const std::string& name) {
    std::vector<IntVector> rays;
    const std::vector<std::string>* text = nullptr;
    if (name == "M1") {
        rays = {vec({-1, -1, 1, 1}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0}),  vec({0, 0, 1, 0}),
                vec({0, 0, -1, 0}),  vec({0, 0, 0, 1}), vec({0, 0, 0, -1}), vec({1, 1, -1, -1})};
        text = &m1_text();
    } else if (name == "pseudo_del_pezzo") {
        rays = {vec({1, 0, 0, 0}),  vec({0, 1, 0, 0}),  vec({0, 0, 1, 0}), vec({0, 0, 0, -1}), vec({-1, 0, 0, 0}),
                vec({0, -1, 0, 0}), vec({0, 0, -1, 0}), vec({1, 1, 1, 1}), vec({0, 0, 0, 1})};
        text = &pseudo_v4_text();
    } else if (name == "del_pezzo") {
        rays = {vec({1, 0, 0, 0}),  vec({0, 1, 0, 0}),  vec({0, 0, 1, 0}), vec({0, 0, 0, -1}),    vec({-1, 0, 0, 0}),
                vec({0, -1, 0, 0}), vec({0, 0, -1, 0}), vec({1, 1, 1, 1}), vec({-1, -1, -1, -1}), vec({0, 0, 0, 1})};
        text = &v4_text();
    } else {
        throw InputError("fano4: unknown name '" + name + "'");
    }
    const std::size_t n = rays.size();
    return Fan(4, std::move(rays), cones_avoiding(n, 4, collections_of(*text)));
}

Fan projective_bundle_over_projective_space(std::size_t n, const std::vector<long>& twists) {
    const Fan base = projective_space(n);
    bundle::BundleSpec spec{base, {}};
    for (long a : twists) spec.summands.push_back(divisor::prime_divisor(base, 0, a));
    return bundle::projectivize(spec).fan;
}

ExpectedRelation to_expected(const primitive::PrimitiveRelation& rel) {
    ExpectedRelation e;
    e.collection = rel.collection;
    for (std::size_t k = 0; k < rel.target.size(); ++k) e.target[rel.target[k]] = rel.coeffs[k];
    return e;
}

std::vector<ExpectedRelation> to_expected(const std::vector<primitive::PrimitiveRelation>& rels) {
    std::vector<ExpectedRelation> out;
    for (const auto& r : rels) out.push_back(to_expected(r));
    return out;
}

ExpectedRelation parse_relation(const std::string& text, const std::function<std::size_t(char, std::size_t)>& resolve) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw InputError("parse_relation: missing '=' in '" + text + "'");

    auto parse_side = [&](const std::string& side, std::map<std::size_t, Integer>& out) {
        if (side == "0") return;
        std::size_t i = 0;
        while (i < side.size()) {
            Integer coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(side[i]))) {
                long v = 0;
                while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i])))
                    v = v * 10 + (side[i++] - '0');
                coeff = v;
                if (i < side.size() && side[i] == '*') ++i;
            }
            if (i >= side.size() || !std::isalpha(static_cast<unsigned char>(side[i])))
                throw InputError("parse_relation: expected a variable in '" + text + "'");
            const char letter = side[i++];
            if (i < side.size() && side[i] == '_') ++i;
            std::size_t index = 0;
            if (i >= side.size() || !std::isdigit(static_cast<unsigned char>(side[i])))
                throw InputError("parse_relation: expected an index in '" + text + "'");
            while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i])))
                index = index * 10 + static_cast<std::size_t>(side[i++] - '0');
            if (index == 0) throw InputError("parse_relation: indices start at 1");
            out[resolve(letter, index)] += coeff;
            if (i < side.size()) {
                if (side[i] != '+') throw InputError("parse_relation: expected '+' in '" + text + "'");
                if (++i == side.size()) throw InputError("parse_relation: dangling '+' in '" + text + "'");
            }
        }
    };
    std::map<std::size_t, Integer> lhs;
    ExpectedRelation r;
    parse_side(s.substr(0, eq), lhs);
    parse_side(s.substr(eq + 1), r.target);
    for (const auto& [k, v] : lhs) {
        if (v != 1) throw InputError("parse_relation: collection members must have coefficient 1");
        if (r.target.contains(k)) throw InputError("parse_relation: variable on both sides of '" + text + "'");
        r.collection.push_back(k);
    }
    return r;
}

std::vector<ExpectedRelation> reference_relations(const std::string& name, std::size_t d, long a, long b) {
    if (name == "S7") return parse_all(s7_text(), base_index);
    if (name == "S6") return parse_all(s6_text(), base_index);
    if (name == "M1") return parse_all(m1_text(), base_index);
    if (name == "pseudoV4") return parse_all(pseudo_v4_text(), base_index);
    if (name == "V4") return parse_all(v4_text(), base_index);
    if (name == "kleinschmidt") {
        // here `a` is the twist alpha
        ExpectedRelation long_rel{range_set(0, d), {}};
        add_target(long_rel, d, a);
        ExpectedRelation fiber{{d, d + 1}, {}};
        return {long_rel, fiber};
    }
    if (name == "w") {
        ExpectedRelation long_rel{range_set(0, d - 1), {}};
        add_target(long_rel, d - 1, 2 * a - 1);
        add_target(long_rel, d + 1, 2 * b - 1);
        return {long_rel, ExpectedRelation{{d - 1, d}, {}}, ExpectedRelation{{d + 1, d + 2}, {}}};
    }
    throw InputError("reference_relations: unknown name '" + name + "'");
}

std::string compare_relations(std::vector<ExpectedRelation> computed, std::vector<ExpectedRelation> expected) {
    std::sort(computed.begin(), computed.end());
    std::sort(expected.begin(), expected.end());
    auto show = [](const ExpectedRelation& r) {
        std::ostringstream os;
        os << fan::to_string(r.collection) << " -> ";
        if (r.target.empty()) os << '0';
        bool first = true;
        for (const auto& [k, v] : r.target) {
            if (!first) os << " + ";
            first = false;
            os << v.get_str() << "*r" << k;
        }
        return os.str();
    };
    if (computed.size() != expected.size()) {
        std::ostringstream os;
        os << "computed " << computed.size() << " relations, expected " << expected.size();
        return os.str();
    }
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (!(computed[i] == expected[i]))
            return "computed " + show(computed[i]) + " but expected " + show(expected[i]);
    return {};
}

NamedBundle named_bundle(const std::string& id, std::size_t d, long a, long b) {
    bundle::BundleSpec spec{projective_space(1), {}};
    divisor::TorusDivisor line_bundle;
    std::string equation_text;
    std::vector<std::string> total_text;
    auto D = [&](std::size_t i) { return divisor::prime_divisor(spec.base, i - 1); };
    auto zero = [&]() { return divisor::TorusDivisor(spec.base.num_rays()); };
    using lattice::add;
    using lattice::scale;
    using lattice::subtract;

    if (id == "caseI") {
        if (d < 2 || a < 1) throw InputError("named_bundle caseI: needs d >= 2 and a >= 1");
        spec.base = kleinschmidt(d, 2 * a - 1);
        spec.summands.push_back(add(scale(Integer(a - 1), D(1)), D(d + 1)));
        for (std::size_t j = 1; j < d; ++j) spec.summands.push_back(zero());
        line_bundle = D(1);
        std::ostringstream eq;
        eq << "X" << d + 1 << "*X" << d + 2 << "*Y1^2";
        for (std::size_t i = 1; i <= d; ++i) eq << " + X" << i << "*Y" << i + 1 << "^2";
        equation_text = eq.str();
    } else if (id == "caseII") {
        if (d < 3 || a < 1 || b < 1) throw InputError("named_bundle caseII: needs d >= 3 and a, b >= 1");
        spec.base = w_fan(d, a, b);
        spec.summands.push_back(add(scale(Integer(a - 1), D(1)), D(d)));
        spec.summands.push_back(add(scale(Integer(b - 1), D(1)), D(d + 2)));
        for (std::size_t j = 2; j < d; ++j) spec.summands.push_back(zero());
        line_bundle = D(1);
        std::ostringstream eq;
        eq << "X" << d << "*X" << d + 1 << "*Y1^2 + X" << d + 2 << "*X" << d + 3 << "*Y2^2";
        for (std::size_t i = 1; i + 1 <= d; ++i) eq << " + X" << i << "*Y" << i + 2 << "^2";
        equation_text = eq.str();
    } else if (id == "S7") {
        spec.base = del_pezzo_surface(7);
        spec.summands = {D(3), D(5)};
        line_bundle = D(2);
        equation_text = "X3*X4*Y1^2 + X1*X5*Y2^2 + X2*Y3^2";
        total_text = s7_total_text();
    } else if (id == "S6") {
        spec.base = del_pezzo_surface(6);
        spec.summands = {subtract(D(5), D(6)), subtract(D(4), D(2))};
        line_bundle = add(D(2), D(6));
        equation_text = "X1*X5*Y1^2 + X3*X4*Y2^2 + X2*X6*Y3^2";
        total_text = s6_total_text();
    } else if (id == "M1") {
        spec.base = fano4("M1");
        spec.summands = {D(8), D(4), D(6), zero()};
        line_bundle = D(3);
        equation_text = "X1*X8*Y1^2 + X4*X5*Y2^2 + X6*X7*Y3^2 + X2*Y4^2 + X3*Y5^2";
        total_text = m1_total_text();
    } else if (id == "pseudoV4") {
        spec.base = fano4("pseudo_del_pezzo");
        spec.summands = {D(1), D(2), D(3), D(9)};
        line_bundle = D(8);
        equation_text = "X1*X5*Y1^2 + X2*X6*Y2^2 + X3*X7*Y3^2 + X4*X9*Y4^2 + X8*Y5^2";
        total_text = pseudo_v4_total_text();
    } else if (id == "V4") {
        spec.base = fano4("del_pezzo");
        spec.summands = {subtract(D(1), D(9)), subtract(D(2), D(9)), subtract(D(3), D(9)), subtract(D(10), D(9))};
        line_bundle = add(D(8), D(9));
        equation_text = "X1*X5*Y1^2 + X2*X6*Y2^2 + X3*X7*Y3^2 + X4*X10*Y4^2 + X8*X9*Y5^2";
        total_text = v4_total_text();
    } else {
        throw InputError("named_bundle: unknown id '" + id + "'");
    }

    const long p = 2;
    bundle::TotalSpaceFan total = bundle::projectivize(spec);
    cox::CoxForm equation = cox::parse_bundle_form(total, equation_text, p);
    NamedBundle out{id, spec, line_bundle, p, equation_text, total, equation, {}};
    const std::size_t l = spec.base.num_rays();
    const std::size_t r = spec.summands.size();
    auto resolve = [&](char letter, std::size_t index) -> std::size_t {
        if (letter == 'x' && index <= l) return out.total.base_ray_map[index - 1];
        if (letter == 'y' && index <= r + 1) return out.total.fiber_rays[index - 1];
        throw InputError(std::string("named_bundle: unknown relation variable ") + letter + std::to_string(index));
    };
    if (!total_text.empty()) {
        out.reference_total_relations = parse_all(total_text, resolve);
        return out;
    }

    auto X = [&](std::size_t i) { return out.total.base_ray_map[i - 1]; };
    auto Y = [&](std::size_t j) { return out.total.fiber_rays[j - 1]; };
    RaySet all_y;
    for (std::size_t j = 1; j <= r + 1; ++j) all_y.push_back(Y(j));
    if (id == "caseI") {
        ExpectedRelation fiber_lift{{X(d + 1), X(d + 2)}, {}};
        add_target(fiber_lift, Y(1), 1);
        ExpectedRelation fiber{all_y, {}};
        RaySet lhs;
        for (std::size_t i = 1; i <= d; ++i) lhs.push_back(X(i));
        ExpectedRelation long_rel{lhs, {}};
        add_target(long_rel, X(d + 1), 2 * a - 1);
        if (a == 1) {
            for (std::size_t j = 2; j <= d + 1; ++j) add_target(long_rel, Y(j), 1);
        } else {
            add_target(long_rel, Y(1), a - 2);
        }
        out.reference_total_relations = {fiber_lift, fiber, long_rel};
    } else {
        ExpectedRelation first{{X(d), X(d + 1)}, {}};
        add_target(first, Y(1), 1);
        ExpectedRelation second{{X(d + 2), X(d + 3)}, {}};
        add_target(second, Y(2), 1);
        ExpectedRelation fiber{all_y, {}};
        RaySet lhs;
        for (std::size_t i = 1; i < d; ++i) lhs.push_back(X(i));
        ExpectedRelation long_rel{lhs, {}};
        add_target(long_rel, X(d), 2 * a - 1);
        add_target(long_rel, X(d + 2), 2 * b - 1);
        if (a == 1 || b == 1) {
            add_target(long_rel, Y(1), a - 1);
            add_target(long_rel, Y(2), b - 1);
            for (std::size_t j = 3; j <= d + 1; ++j) add_target(long_rel, Y(j), 1);
        } else {
            add_target(long_rel, Y(1), a - 2);
            add_target(long_rel, Y(2), b - 2);
        }
        out.reference_total_relations = {first, second, fiber, long_rel};
    }
    return out;
}

std::vector<CatalogInfo> list() {
    return {
        {"projective_space", "--d", "projective space P^d"},
        {"p1_product", "--d", "product of d projective lines"},
        {"kleinschmidt", "--d --a (twist)", "P(O + O(a)) over P^(d-1)"},
        {"w_fan", "--d --a --b", "Picard-3 fan W^d(a,b)"},
        {"S7", "", "toric del Pezzo surface of degree 7"},
        {"S6", "", "toric del Pezzo surface of degree 6"},
        {"M1", "", "toric Fano 4-fold of type M1"},
        {"pseudoV4", "", "pseudo del Pezzo 4-fold"},
        {"V4", "", "del Pezzo 4-fold"},
    };
}

Fan get(const std::string& name, std::size_t d, long a, long b) {
    if (name == "projective_space") return projective_space(d);
    if (name == "p1_product") return product_of_p1(d);
    if (name == "kleinschmidt") return kleinschmidt(d, a);
    if (name == "w_fan") return w_fan(d, a, b);
    if (name == "S7") return del_pezzo_surface(7);
    if (name == "S6") return del_pezzo_surface(6);
    if (name == "M1") return fano4("M1");
    if (name == "pseudoV4") return fano4("pseudo_del_pezzo");
    if (name == "V4") return fano4("del_pezzo");
    throw InputError("catalog: unknown entry '" + name + "'");
}

}  // namespace toricwhb::catalog
