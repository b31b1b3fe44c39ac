#include "toricwhb/bundle.hpp"

#include <algorithm>
#include <functional>

#include "toricwhb/errors.hpp"

namespace toricwhb::bundle {

TotalSpaceFan projectivize(const BundleSpec& spec) {
    const Fan& base = spec.base;
    const std::size_t r = spec.summands.size();
    if (r == 0) throw InputError("projectivize: at least one summand is required");
    for (const auto& e : spec.summands)
        if (e.size() != base.num_rays())
            throw InputError("projectivize: summand length differs from the number of base rays");
    fan::require_valid(base);

    const std::size_t d = base.dim();
    const std::size_t l = base.num_rays();
    std::vector<IntVector> rays;
    rays.reserve(l + r + 1);
    for (std::size_t i = 0; i < l; ++i) {
        IntVector v = base.ray(i);
        for (std::size_t j = 0; j < r; ++j) v.push_back(spec.summands[j][i]);
        rays.push_back(std::move(v));
    }
    for (std::size_t j = 0; j <= r; ++j) {
        IntVector y(d + r);
        for (std::size_t k = 0; k < r; ++k) y[d + k] = (j == r) ? -1 : (k == j ? 1 : 0);
        rays.push_back(std::move(y));
    }

    std::vector<fan::RaySet> cones;
    cones.reserve(base.max_cones().size() * (r + 1));
    for (const auto& sigma : base.max_cones())
        for (std::size_t skip = 0; skip <= r; ++skip) {
            fan::RaySet c = sigma;
            for (std::size_t j = 0; j <= r; ++j)
                if (j != skip) c.push_back(l + j);
            cones.push_back(std::move(c));
        }

    TotalSpaceFan t{Fan(d + r, std::move(rays), std::move(cones)), d, r, {}, {}};
    for (std::size_t i = 0; i < l; ++i) t.base_ray_map.push_back(i);
    for (std::size_t j = 0; j <= r; ++j) t.fiber_rays.push_back(l + j);
    return t;
}

DivisorClass tautological_class(const TotalSpaceFan& t) {
    return divisor::class_of(t.fan, divisor::prime_divisor(t.fan, t.fiber_rays.back()));
}

TorusDivisor pullback(const TotalSpaceFan& t, const TorusDivisor& d) {
    if (d.size() != t.base_ray_map.size()) throw InputError("pullback: divisor length differs from base rays");
    TorusDivisor out(t.fan.num_rays());
    for (std::size_t i = 0; i < d.size(); ++i) out[t.base_ray_map[i]] = d[i];
    return out;
}

DivisorClass hypersurface_class(const TotalSpaceFan& t, long p, const TorusDivisor& l) {
    return Integer(p) * tautological_class(t) + divisor::class_of(t.fan, pullback(t, l));
}

std::vector<Integer> splitting_on_curve(const BundleSpec& spec, long p, const TorusDivisor& l,
                                        const primitive::CurveClass& c) {
    const Integer lc = divisor::intersect(l, c);
    std::vector<Integer> out{lc};
    for (const auto& e : spec.summands) out.push_back(Integer(p) * divisor::intersect(e, c) + lc);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

TorusDivisor total_divisor(const TotalSpaceFan& t, const TorusDivisor& base_part, const std::vector<long>& fiber_part) {
    if (fiber_part.size() != t.fiber_rays.size()) throw InputError("total_divisor: fiber part must have r+1 entries");
    TorusDivisor out = pullback(t, base_part);
    for (std::size_t j = 0; j < fiber_part.size(); ++j) out[t.fiber_rays[j]] = fiber_part[j];
    return out;
}

}  // namespace toricwhb::bundle
