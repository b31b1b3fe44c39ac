#include "toricwhb/cox.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "toricwhb/errors.hpp"
#include "toricwhb/finite_field.hpp"

namespace toricwhb::cox {

CoxForm::CoxForm(std::size_t num_vars, long p, std::vector<Term> terms) : num_vars_(num_vars), p_(p) {
    if (p < 2) throw InputError("CoxForm: characteristic must be a prime");
    std::map<std::vector<unsigned>, long> merged;
    for (auto& t : terms) {
        if (t.exponents.size() != num_vars) throw InputError("CoxForm: exponent vector has wrong length");
        long& c = merged[t.exponents];
        c = ((c + t.coeff) % p + p) % p;
    }
    for (auto& [e, c] : merged)
        if (c != 0) terms_.push_back(Term{e, c});
}

CoxForm CoxForm::without_term(std::size_t index) const {
    if (index >= terms_.size()) throw InputError("without_term: index out of range");
    std::vector<Term> t = terms_;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(index));
    return CoxForm(num_vars_, p_, std::move(t));
}

DivisorClass monomial_class(const Fan& fan, const std::vector<unsigned>& exponents) {
    if (exponents.size() != fan.num_rays()) throw InputError("monomial_class: exponent length differs from #rays");
    divisor::TorusDivisor d(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) d[i] = exponents[i];
    return divisor::class_of(fan, d);
}

std::optional<DivisorClass> is_homogeneous(const Fan& fan, const CoxForm& form) {
    if (form.is_zero()) throw InputError("is_homogeneous: empty form");
    const DivisorClass first = monomial_class(fan, form.terms().front().exponents);
    for (const auto& t : form.terms())
        if (monomial_class(fan, t.exponents) != first) return std::nullopt;
    return first;
}

std::vector<CoxForm> partials(const CoxForm& form) {
    std::vector<CoxForm> out;
    const long p = form.characteristic();
    for (std::size_t v = 0; v < form.num_vars(); ++v) {
        std::vector<Term> terms;
        for (const auto& t : form.terms()) {
            if (t.exponents[v] == 0) continue;
            Term d = t;
            d.coeff = static_cast<long>((static_cast<unsigned long>(t.coeff) * (t.exponents[v] % p)) % p);
            d.exponents[v] -= 1;
            if (d.coeff != 0) terms.push_back(std::move(d));
        }
        out.emplace_back(form.num_vars(), p, std::move(terms));
    }
    return out;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::smooth:
            return "smooth";
        case Outcome::singular:
            return "singular";
        case Outcome::undecided:
            return "undecided";
    }
    return "unknown";
}

std::string to_string(Method m) { return m == Method::combinatorial ? "combinatorial" : "finite-field-search"; }

namespace {

std::uint64_t support_mask(const std::vector<unsigned>& exponents) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) m |= std::uint64_t{1} << i;
    return m;
}

// All faces of the fan (including the empty face) as bitmasks, ascending.
std::vector<std::uint64_t> face_masks(const Fan& fan) {
    std::set<std::uint64_t> faces;
    for (std::uint64_t c : fan.cone_masks()) {
        std::uint64_t sub = c;
        for (;;) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & c;
        }
    }
    return {faces.begin(), faces.end()};
}

}  // namespace

SmoothnessVerdict decide_smooth_monomial_partials(const Fan& fan, const CoxForm& form) {
    SmoothnessVerdict v;
    v.method = Method::combinatorial;
    if (form.num_vars() != fan.num_rays()) throw InputError("decide_smooth: form and fan disagree on #variables");
    if (form.characteristic() != 2) {
        v.reason = "characteristic is not 2";
        return v;
    }
    if (!fan.has_masks()) {
        v.reason = "more than 64 rays";
        return v;
    }
    std::vector<std::uint64_t> partial_masks;
    for (const auto& d : partials(form)) {
        if (d.is_zero()) continue;
        if (d.terms().size() > 1) {
            v.reason = "a partial derivative has more than one term";
            return v;
        }
        partial_masks.push_back(support_mask(d.terms().front().exponents));
    }
    std::vector<std::uint64_t> term_masks;
    for (const auto& t : form.terms()) term_masks.push_back(support_mask(t.exponents));

    for (std::uint64_t z : face_masks(fan)) {
        const bool partials_vanish =
            std::all_of(partial_masks.begin(), partial_masks.end(), [z](std::uint64_t m) { return (m & z) != 0; });
        if (!partials_vanish) continue;
        const auto surviving =
            std::count_if(term_masks.begin(), term_masks.end(), [z](std::uint64_t m) { return (m & z) == 0; });
        if (surviving != 1) {
            v.outcome = Outcome::singular;
            v.vanishing_set = fan::from_mask(z);
            v.reason = "all partials vanish on the stratum of " + fan::to_string(*v.vanishing_set) + " and " +
                       std::to_string(surviving) + " terms survive there";
            return v;
        }
    }
    v.outcome = Outcome::smooth;
    v.reason = "no stratum carries a common zero of the form and its partials";
    return v;
}

SmoothnessVerdict decide_smooth_monomial_partials(const bundle::TotalSpaceFan& t, const CoxForm& form) {
    return decide_smooth_monomial_partials(t.fan, form);
}

bool is_wild_fiberwise(const bundle::TotalSpaceFan& t, const CoxForm& form, long p) {
    if (form.num_vars() != t.fan.num_rays()) throw InputError("is_wild_fiberwise: form and fan disagree");
    if (form.is_zero()) return false;
    const std::size_t nfib = t.fiber_rays.size();
    // Coefficient polynomial of each Y_j^p, as base exponent vectors.
    std::vector<std::vector<std::uint64_t>> coeff_terms(nfib);
    for (const auto& term : form.terms()) {
        std::optional<std::size_t> which;
        for (std::size_t j = 0; j < nfib; ++j) {
            const unsigned e = term.exponents[t.fiber_rays[j]];
            if (e == 0) continue;
            if (e != static_cast<unsigned>(p) || which) return false;
            which = j;
        }
        if (!which) return false;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < t.base_ray_map.size(); ++i)
            if (term.exponents[t.base_ray_map[i]] > 0) {
                if (t.base_ray_map[i] >= 64) throw InputError("is_wild_fiberwise: too many rays");
                m |= std::uint64_t{1} << t.base_ray_map[i];
            }
        coeff_terms[*which].push_back(m);
    }

    // Base faces: faces of the total fan made of lifted base rays only.
    std::uint64_t base_mask = 0;
    for (std::size_t i : t.base_ray_map) base_mask |= std::uint64_t{1} << i;
    std::set<std::uint64_t> base_faces;
    for (std::uint64_t f : face_masks(t.fan)) base_faces.insert(f & base_mask);

    for (std::uint64_t z : base_faces) {
        std::size_t multi = 0;
        bool some_unit = false;
        for (const auto& g : coeff_terms) {
            const auto surviving = std::count_if(g.begin(), g.end(), [z](std::uint64_t m) { return (m & z) == 0; });
            if (surviving == 1) some_unit = true;
            if (surviving >= 2) ++multi;
        }
        if (some_unit) continue;
        if (multi <= 1) return false;  // every coefficient vanishes somewhere on this stratum
        throw InputError("is_wild_fiberwise: several multi-term coefficients on one stratum; undecided");
    }
    return true;
}

namespace {

struct CompiledPoly {
    struct CTerm {
        ff::GaloisField::Elem coeff;
        std::vector<std::pair<std::size_t, unsigned>> factors;  // (chart slot, exponent)
    };
    std::vector<CTerm> terms;
};

CompiledPoly compile(const CoxForm& f, const ff::GaloisField& field, const std::vector<std::size_t>& slot_of) {
    CompiledPoly out;
    for (const auto& t : f.terms()) {
        CompiledPoly::CTerm ct{field.from_int(t.coeff), {}};
        for (std::size_t v = 0; v < t.exponents.size(); ++v)
            if (t.exponents[v] > 0 && slot_of[v] != SIZE_MAX) ct.factors.emplace_back(slot_of[v], t.exponents[v]);
        out.terms.push_back(std::move(ct));
    }
    return out;
}

ff::GaloisField::Elem evaluate(const CompiledPoly& poly, const ff::GaloisField& field,
                               const std::vector<std::uint32_t>& x) {
    ff::GaloisField::Elem sum = 0;
    for (const auto& t : poly.terms) {
        ff::GaloisField::Elem prod = t.coeff;
        for (const auto& [slot, e] : t.factors) {
            prod = field.mul(prod, field.pow(x[slot], e));
            if (prod == 0) break;
        }
        sum = field.add(sum, prod);
    }
    return sum;
}

std::optional<std::vector<std::uint32_t>> search_chart(const Fan& fan, const CoxForm& form,
                                                       const std::vector<CoxForm>& ders, const ff::GaloisField& field,
                                                       std::size_t chart) {
    const auto& cone = fan.max_cones()[chart];
    std::vector<std::size_t> slot_of(form.num_vars(), SIZE_MAX);
    for (std::size_t k = 0; k < cone.size(); ++k) slot_of[cone[k]] = k;
    std::vector<CompiledPoly> polys{compile(form, field, slot_of)};
    for (const auto& d : ders)
        if (!d.is_zero()) polys.push_back(compile(d, field, slot_of));

    const auto q = static_cast<std::uint32_t>(field.q());
    std::vector<std::uint32_t> x(cone.size(), 0);
    for (;;) {
        bool all_zero = true;
        for (const auto& poly : polys)
            if (evaluate(poly, field, x) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            std::vector<std::uint32_t> point(form.num_vars(), 1);
            for (std::size_t k = 0; k < cone.size(); ++k) point[cone[k]] = x[k];
            return point;
        }
        std::size_t k = 0;
        while (k < x.size() && ++x[k] == q) x[k++] = 0;
        if (k == x.size()) return std::nullopt;
    }
}

}  // namespace

std::optional<SingularWitness> singular_point_search(const Fan& fan, const CoxForm& form, long q, std::uint64_t budget,
                                                     unsigned threads) {
    if (form.num_vars() != fan.num_rays()) throw InputError("singular_point_search: form and fan disagree");
    const ff::GaloisField field(q);
    if (field.characteristic() != form.characteristic())
        throw InputError("singular_point_search: q is not a power of the characteristic");
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < fan.dim(); ++k) {
        if (points > budget / static_cast<std::uint64_t>(q) + 1) {
            points = budget + 1;
            break;
        }
        points *= static_cast<std::uint64_t>(q);
    }
    if (points > budget)
        throw ResourceError("singular_point_search: q^dim exceeds the budget of " + std::to_string(budget) +
                            " points per chart");

    const auto ders = partials(form);
    const std::size_t charts = fan.max_cones().size();
    threads = std::max(1u, threads);
    std::vector<std::optional<std::vector<std::uint32_t>>> found(charts);
    std::atomic<std::size_t> best{charts};
    auto worker = [&](unsigned id) {
        for (std::size_t c = id; c < charts; c += threads) {
            if (c > best.load()) break;
            found[c] = search_chart(fan, form, ders, field, c);
            if (found[c]) {
                std::size_t cur = best.load();
                while (c < cur && !best.compare_exchange_weak(cur, c)) {
                }
                break;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }
    for (std::size_t c = 0; c < charts; ++c)
        if (found[c]) return SingularWitness{c, q, *found[c]};
    return std::nullopt;
}

namespace {

bool vanishes_at(const CoxForm& f, const ff::GaloisField& field, const std::vector<std::uint32_t>& point) {
    std::vector<std::size_t> slot_of(f.num_vars());
    for (std::size_t v = 0; v < slot_of.size(); ++v) slot_of[v] = v;
    return evaluate(compile(f, field, slot_of), field, point) == 0;
}

}  // namespace

bool verify_witness(const Fan& fan, const CoxForm& form, const SingularWitness& w) {
    if (w.point.size() != form.num_vars()) return false;
    const ff::GaloisField field(w.q);
    RaySet zeros;
    for (std::size_t v = 0; v < w.point.size(); ++v)
        if (w.point[v] == 0) zeros.push_back(v);
    if (!fan::is_face(fan, zeros)) return false;
    if (!vanishes_at(form, field, w.point)) return false;
    for (const auto& d : partials(form))
        if (!vanishes_at(d, field, w.point)) return false;
    return true;
}

bool verify_vanishing_set(const Fan& fan, const CoxForm& form, const RaySet& zero_set) {
    if (!fan::is_face(fan, zero_set)) return false;
    std::vector<std::uint32_t> point(form.num_vars(), 1);
    for (std::size_t v : zero_set) point.at(v) = 0;
    return verify_witness(fan, form, SingularWitness{0, form.characteristic(), point});
}

CoxForm parse_form(const std::string& text, std::size_t num_vars, long p,
                   const std::function<std::size_t(char, std::size_t)>& resolve) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (auto eq = s.find('='); eq != std::string::npos) {
        if (s.substr(eq) != "=0") throw InputError("parse_form: only '= 0' may follow the form");
        s.erase(eq);
    }
    if (s.empty()) throw InputError("parse_form: empty form");

    auto read_int = [&](std::size_t& i) {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw InputError("parse_form: expected a number at offset " + std::to_string(i) + " in '" + s + "'");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    };

    std::vector<Term> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        Term t{std::vector<unsigned>(num_vars, 0), 1};
        for (;;) {
            if (i >= s.size()) throw InputError("parse_form: unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                t.coeff *= read_int(i);
            } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
                const char letter = s[i++];
                if (i < s.size() && s[i] == '_') ++i;
                const bool braced = i < s.size() && s[i] == '{';
                if (braced) ++i;
                const long index = read_int(i);
                if (braced) {
                    if (i >= s.size() || s[i] != '}') throw InputError("parse_form: missing '}'");
                    ++i;
                }
                long e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = read_int(i);
                }
                if (index <= 0) throw InputError("parse_form: variable indices start at 1");
                t.exponents.at(resolve(letter, static_cast<std::size_t>(index))) += static_cast<unsigned>(e);
            } else {
                throw InputError(std::string("parse_form: unexpected character '") + s[i] + "'");
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        terms.push_back(std::move(t));
        if (i < s.size()) {
            if (s[i] != '+') throw InputError(std::string("parse_form: expected '+', found '") + s[i] + "'");
            if (++i == s.size()) throw InputError("parse_form: dangling '+'");
        }
    }
    return CoxForm(num_vars, p, std::move(terms));
}

CoxForm parse_bundle_form(const bundle::TotalSpaceFan& t, const std::string& text, long p) {
    return parse_form(text, t.fan.num_rays(), p, [&](char letter, std::size_t index) -> std::size_t {
        if (letter == 'X' && index <= t.base_ray_map.size()) return t.base_ray_map[index - 1];
        if (letter == 'Y' && index <= t.fiber_rays.size()) return t.fiber_rays[index - 1];
        throw InputError(std::string("parse_bundle_form: unknown variable ") + letter + std::to_string(index));
    });
}

CoxForm parse_fan_form(const Fan& fan, const std::string& text, long p) {
    return parse_form(text, fan.num_rays(), p, [&](char letter, std::size_t index) -> std::size_t {
        if (letter == 'X' && index <= fan.num_rays()) return index - 1;
        throw InputError(std::string("parse_fan_form: unknown variable ") + letter + std::to_string(index));
    });
}

std::string format_bundle_form(const bundle::TotalSpaceFan& t, const CoxForm& form) {
    std::vector<std::string> names(form.num_vars());
    for (std::size_t i = 0; i < t.base_ray_map.size(); ++i) names[t.base_ray_map[i]] = "X" + std::to_string(i + 1);
    for (std::size_t j = 0; j < t.fiber_rays.size(); ++j) names[t.fiber_rays[j]] = "Y" + std::to_string(j + 1);
    std::ostringstream os;
    for (std::size_t k = 0; k < form.terms().size(); ++k) {
        const auto& term = form.terms()[k];
        if (k) os << " + ";
        bool first = true;
        if (term.coeff != 1) {
            os << term.coeff;
            first = false;
        }
        for (std::size_t v = 0; v < term.exponents.size(); ++v) {
            if (term.exponents[v] == 0) continue;
            if (!first) os << '*';
            first = false;
            os << names[v];
            if (term.exponents[v] > 1) os << '^' << term.exponents[v];
        }
        if (first) os << '1';
    }
    return os.str();
}

}  // namespace toricwhb::cox
