#include "toricwhb/whb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "toricwhb/errors.hpp"

namespace toricwhb::whb {

namespace {

bool divides(long p, const Integer& x) { return x % p == 0; }

std::vector<Integer> sorted_desc(std::vector<Integer> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

CaseFlags check_splitting_case(const std::vector<Integer>& tangent, long p) {
    CaseFlags out;
    for (const auto& x : tangent)
        if (x > 2) throw InputError("check_splitting_case: degree above 2");
    auto two = std::find(tangent.begin(), tangent.end(), Integer(2));
    if (two != tangent.end()) {
        out.case_i = true;
        for (auto it = tangent.begin(); it != tangent.end(); ++it)
            if (it != two && !divides(p, *it - 1)) out.case_i = false;
    }
    out.case_ii = p == 2 && std::all_of(tangent.begin(), tangent.end(), [](const Integer& x) { return x % 2 == 0; });
    return out;
}

std::vector<Integer> expected_bundle_splitting(const std::vector<Integer>& tangent, SplitCase c) {
    std::map<Integer, long> a;
    for (const auto& x : tangent) {
        if (x > 2) throw InputError("expected_bundle_splitting: degree above 2");
        ++a[x];
    }
    std::vector<Integer> out;
    for (const auto& [deg, mult] : a)
        if (deg < 0)
            for (long k = 0; k < mult; ++k) out.push_back(deg);
    const long a0 = a[Integer(0)], a1 = a[Integer(1)], a2 = a[Integer(2)];
    long zeros = a0, ones = a1, twos = a2;
    if (c == SplitCase::i) {
        if (a2 == 0) throw InputError("expected_bundle_splitting: case i needs a degree-2 entry");
        ones = a1 + 2;
        twos = a2 - 1;
    } else {
        zeros = a0 + 1;
    }
    for (long k = 0; k < zeros; ++k) out.emplace_back(0);
    for (long k = 0; k < ones; ++k) out.emplace_back(1);
    for (long k = 0; k < twos; ++k) out.emplace_back(2);
    return sorted_desc(std::move(out));
}

RelationRecord check_relation(const PrimitiveRelation& rel, std::size_t dim, long p, std::size_t relation_id) {
    RelationRecord r;
    r.relation_id = relation_id;
    r.extremal = rel.extremal;
    r.case_i = rel.m() + rel.n() == dim + 1 &&
               std::all_of(rel.coeffs.begin(), rel.coeffs.end(), [p](const Integer& b) { return divides(p, b + 1); });
    r.case_ii = p == 2 && rel.m() == 2 &&
                std::all_of(rel.coeffs.begin(), rel.coeffs.end(), [](const Integer& b) { return b % 2 == 0; });
    return r;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long n = 2; n <= bound; ++n) {
        bool prime = true;
        for (long k = 2; k * k <= n; ++k)
            if (n % k == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

std::vector<PrimeVerdict> admissible_primes(const std::vector<PrimitiveRelation>& rels, std::size_t dim, long p_max) {
    std::vector<PrimeVerdict> out;
    for (long p : primes_up_to(p_max)) {
        PrimeVerdict v;
        v.prime = p;
        v.admissible = true;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            v.relations.push_back(check_relation(rels[i], dim, p, i));
            if (!v.relations.back().passes()) v.admissible = false;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<PrimeVerdict> admissible_primes(const fan::Fan& fan, long p_max) {
    return admissible_primes(primitive::primitive_relations(fan), fan.dim(), p_max);
}

std::vector<long> admissible_set(const std::vector<PrimeVerdict>& verdicts) {
    std::vector<long> out;
    for (const auto& v : verdicts)
        if (v.admissible) out.push_back(v.prime);
    return out;
}

void Pic3CaseIIData::check() const {
    for (long x : p)
        if (x <= 0) throw InputError("Pic3CaseIIData: group sizes must be positive");
    if (static_cast<long>(c.size()) != p[2] - 1) throw InputError("Pic3CaseIIData: expected p_2 - 1 coefficients c_i");
    if (static_cast<long>(b.size()) != p[3]) throw InputError("Pic3CaseIIData: expected p_3 coefficients b_i");
    for (long x : c)
        if (x <= 0) throw InputError("Pic3CaseIIData: coefficients must be positive");
    for (long x : b)
        if (x <= 0) throw InputError("Pic3CaseIIData: coefficients must be positive");
}

namespace {

Pic3RelationCheck evaluate(std::string label, long m, std::vector<long> coeffs, long d, long p) {
    Pic3RelationCheck r;
    r.label = std::move(label);
    r.m = m;
    r.n = static_cast<long>(coeffs.size());
    r.coeffs = std::move(coeffs);
    std::ostringstream why_i, why_ii;
    if (r.m + r.n != d + 1) why_i << "m+n=" << r.m + r.n << " but d+1=" << d + 1 << "; ";
    for (long b : r.coeffs)
        if ((b + 1) % p != 0) {
            why_i << p << " does not divide " << b << "+1; ";
            break;
        }
    if (p != 2) why_ii << "p=" << p << " is not 2; ";
    if (r.m != 2) why_ii << "m=" << r.m << " is not 2; ";
    for (long b : r.coeffs)
        if (b % 2 != 0) {
            why_ii << "coefficient " << b << " is odd; ";
            break;
        }
    r.case_i_obstruction = why_i.str();
    r.case_ii_obstruction = why_ii.str();
    r.case_i = r.case_i_obstruction.empty();
    r.case_ii = r.case_ii_obstruction.empty();
    return r;
}

}  // namespace

Pic3Analysis analyze_pic3_case_ii(const Pic3CaseIIData& data, long p) {
    data.check();
    const long d = data.dim();
    const long p0 = data.p[0], p1 = data.p[1], p2 = data.p[2], p3 = data.p[3], p4 = data.p[4];

    std::vector<long> first = data.c;
    for (long b : data.b) first.push_back(b + 1);
    Pic3Analysis out;
    out.relations.push_back(evaluate("v+y = c z + (b+1) t", p0 + p1, first, d, p));
    out.relations.push_back(evaluate("y+z = u", p1 + p2, std::vector<long>(static_cast<std::size_t>(p4), 1), d, p));
    out.relations.push_back(evaluate("t+u = y", p3 + p4, std::vector<long>(static_cast<std::size_t>(p1), 1), d, p));
    out.feasible = std::all_of(out.relations.begin(), out.relations.end(),
                               [](const Pic3RelationCheck& r) { return r.case_i || r.case_ii; });

    std::ostringstream cert;
    cert << "d=" << d << " p=" << p << " sizes=(" << p0 << ',' << p1 << ',' << p2 << ',' << p3 << ',' << p4
         << "); extremality of the three relations assumed\n";
    cert << "case (i) system: p0+p1+p2-1+p3 = " << p0 + p1 + p2 - 1 + p3 << ", p1+p2+p4 = " << p1 + p2 + p4
         << ", p3+p4+p1 = " << p3 + p4 + p1 << ", target d+1 = " << d + 1 << '\n';
    cert << "with p0+...+p4 = d+3 the system has the unique solution p0=p2=p3=p4=1, p1=d-1\n";
    for (const auto& r : out.relations) {
        cert << "  " << r.label << ": m=" << r.m << " n=" << r.n << " case(i) "
             << (r.case_i ? "holds" : "fails: " + r.case_i_obstruction) << ", case(ii) "
             << (r.case_ii ? "holds" : "fails: " + r.case_ii_obstruction) << '\n';
    }
    cert << (out.feasible ? "FEASIBLE: every relation satisfies one case" : "INFEASIBLE");
    out.certificate = cert.str();
    return out;
}

Pic3SweepResult sweep_pic3_case_ii(long max_dim, long p_max) {
    Pic3SweepResult res;
    const auto primes = primes_up_to(p_max);
    for (long d = 2; d <= max_dim; ++d) {
        const long total = d + 3;
        for (long p0 = 1; p0 <= total - 4; ++p0)
            for (long p1 = 1; p0 + p1 <= total - 3; ++p1)
                for (long p2 = 1; p0 + p1 + p2 <= total - 2; ++p2)
                    for (long p3 = 1; p0 + p1 + p2 + p3 <= total - 1; ++p3) {
                        const long p4 = total - p0 - p1 - p2 - p3;
                        ++res.tuples;
                        for (long p : primes)
                            for (long cv = 1; cv <= (p2 > 1 ? p : 1); ++cv)
                                for (long bv = 1; bv <= p; ++bv) {
                                    Pic3CaseIIData data;
                                    data.p[0] = p0;
                                    data.p[1] = p1;
                                    data.p[2] = p2;
                                    data.p[3] = p3;
                                    data.p[4] = p4;
                                    data.c.assign(static_cast<std::size_t>(p2 - 1), cv);
                                    data.b.assign(static_cast<std::size_t>(p3), bv);
                                    ++res.analyses;
                                    if (analyze_pic3_case_ii(data, p).feasible)
                                        res.feasible.emplace_back(std::move(data), p);
                                }
                    }
    }
    return res;
}

std::string to_string(FanoCase c) {
    switch (c) {
        case FanoCase::projective_space:
            return "projective_space";
        case FanoCase::p1_product:
            return "p1_product";
        case FanoCase::odd_kleinschmidt:
            return "odd_kleinschmidt";
        case FanoCase::small_contraction_type:
            return "small_contraction_type";
        case FanoCase::inadmissible_divisorial:
            return "inadmissible_divisorial";
        case FanoCase::outside_classified:
            return "outside_classified";
    }
    return "unknown";
}

FanoClassification classify_fano(const fan::Fan& fan, long p_max) {
    const auto rels = primitive::primitive_relations(fan);
    if (!primitive::is_fano(rels)) throw InputError("classify_fano: fan is not Fano");
    const std::size_t d = fan.dim();
    const std::size_t rho = fan::picard_number(fan);

    FanoClassification out;
    out.admissible = admissible_set(admissible_primes(rels, d, p_max));

    auto fiber_type = [](const PrimitiveRelation& r) { return r.m() == 2 && r.n() == 0; };

    if (rho == 1) {
        out.kind = FanoCase::projective_space;
        out.detail = "Picard number 1";
        return out;
    }
    if (rho == d && rels.size() == d && std::all_of(rels.begin(), rels.end(), fiber_type)) {
        out.kind = FanoCase::p1_product;
        out.detail = "d disjoint relations x + x' = 0";
        return out;
    }
    if (rho == 2 && rels.size() == 2) {
        const PrimitiveRelation* fiber = nullptr;
        const PrimitiveRelation* twisted = nullptr;
        for (const auto& r : rels) {
            if (fiber_type(r))
                fiber = &r;
            else if (r.m() == d && r.n() == 1)
                twisted = &r;
        }
        if (fiber && twisted &&
            std::binary_search(fiber->collection.begin(), fiber->collection.end(), twisted->target.front())) {
            const Integer& alpha = twisted->coeffs.front();
            if (alpha % 2 != 0) {
                out.kind = FanoCase::odd_kleinschmidt;
                out.a = (alpha.get_si() + 1) / 2;
                out.detail = "P^1-bundle over P^(d-1) with odd twist " + alpha.get_str();
                return out;
            }
        }
    }

    bool all_fiber_or_small = true;
    bool any_small = false;
    bool any_divisorial = false;
    for (const auto& r : rels) {
        if (!r.extremal) continue;
        if (r.n() >= 2) any_small = true;
        if (r.n() == 1) any_divisorial = true;
        if (!fiber_type(r) && r.n() < 2) all_fiber_or_small = false;
    }
    if (all_fiber_or_small && any_small) {
        out.kind = FanoCase::small_contraction_type;
        out.detail = "every extremal relation is a P^1-fibration or small";
    } else if (d >= 3 && any_divisorial) {
        out.kind = FanoCase::inadmissible_divisorial;
        out.detail = "divisorial extremal relation on a base other than a P^1-bundle over P^(d-1)";
    } else {
        out.kind = FanoCase::outside_classified;
        out.detail = "no classified case applies";
    }
    return out;
}

}  // namespace toricwhb::whb
