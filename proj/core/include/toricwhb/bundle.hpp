#pragma once

// Fans of projectivized split bundles P(O + O(E_1) + ... + O(E_r)).

#include <cstddef>
#include <vector>

#include "toricwhb/divisor.hpp"
#include "toricwhb/fan.hpp"
#include "toricwhb/primitive.hpp"

namespace toricwhb::bundle {

using divisor::DivisorClass;
using divisor::TorusDivisor;
using fan::Fan;

struct BundleSpec {
    Fan base;
    /// E_1, ..., E_r as torus divisors on the base; r >= 1.
    std::vector<TorusDivisor> summands;
};

struct TotalSpaceFan {
    Fan fan;
    std::size_t base_dim = 0;
    std::size_t rank = 0;  // r
    /// Index in `fan` of the lift of each base ray.
    std::vector<std::size_t> base_ray_map;
    /// Indices of y_1, ..., y_{r+1}.
    std::vector<std::size_t> fiber_rays;
};

/// Throws InputError for an invalid base, r = 0 or a summand of wrong length.
TotalSpaceFan projectivize(const BundleSpec& spec);

/// Class of the divisor on y_{r+1}.
DivisorClass tautological_class(const TotalSpaceFan& t);

TorusDivisor pullback(const TotalSpaceFan& t, const TorusDivisor& d);

DivisorClass hypersurface_class(const TotalSpaceFan& t, long p, const TorusDivisor& l);

/// {p (E_j . C) + (L . C) : j = 0..r} with E_0 = 0, sorted descending.
std::vector<Integer> splitting_on_curve(const BundleSpec& spec, long p, const TorusDivisor& l,
                                        const primitive::CurveClass& c);

/// Divisor on the total space given by base coefficients and fiber coefficients.
TorusDivisor total_divisor(const TotalSpaceFan& t, const TorusDivisor& base_part, const std::vector<long>& fiber_part);

}  // namespace toricwhb::bundle
