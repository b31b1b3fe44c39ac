#pragma once

// Smooth complete fans given by ray generators and maximal cones.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricwhb/lattice.hpp"

namespace toricwhb::fan {

/// Sorted, duplicate-free list of ray indices.
using RaySet = std::vector<std::size_t>;

class Fan {
public:
    /// Throws InputError on duplicate rays, wrong-length rays, cones with
    /// repeated or out-of-range indices, or cones of size other than `dim`.
    /// Cone index lists are stored sorted.
    Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RaySet> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<IntVector>& rays() const { return rays_; }
    const IntVector& ray(std::size_t i) const { return rays_[i]; }
    const std::vector<RaySet>& max_cones() const { return cones_; }

    /// Smith form of the #rays x dim matrix whose rows are the rays.
    const lattice::SmithForm& ray_smith_form() const { return *smith_; }

    /// Bitmask of each maximal cone; only available when #rays <= 64.
    bool has_masks() const { return !masks_.empty() || cones_.empty(); }
    const std::vector<std::uint64_t>& cone_masks() const { return masks_; }

    std::vector<IntVector> cone_rays(const RaySet& s) const;

private:
    std::size_t dim_;
    std::vector<IntVector> rays_;
    std::vector<RaySet> cones_;
    std::vector<std::uint64_t> masks_;
    std::shared_ptr<const lattice::SmithForm> smith_;
};

RaySet make_ray_set(std::vector<std::size_t> indices);
std::uint64_t to_mask(const RaySet& s);
RaySet from_mask(std::uint64_t mask);
std::string to_string(const RaySet& s);

struct ValidationReport {
    bool primitive = true;
    bool smooth = true;
    bool intersections = true;
    bool complete = true;
    std::vector<std::string> problems;

    bool ok() const { return primitive && smooth && intersections && complete; }
};

ValidationReport validate(const Fan& fan);

/// Throws InputError carrying the first problem when the fan does not validate.
void require_valid(const Fan& fan);

std::size_t picard_number(const Fan& fan);

bool is_face(const Fan& fan, const RaySet& subset);

struct Wall {
    RaySet generators;
    std::array<std::size_t, 2> adjacent{};
    std::array<std::size_t, 2> opposite_rays{};
};

std::vector<Wall> walls(const Fan& fan);

struct ContainingCone {
    /// Index of a maximal cone containing the point; empty for the origin.
    std::optional<std::size_t> max_cone;
    RaySet rays;
    RationalVector coords;
    /// Rays carrying a strictly positive coordinate, and those coordinates.
    RaySet support;
    std::vector<Rational> support_coeffs;
};

/// Locates the point in a complete fan. Throws InputError when no maximal
/// cone contains it (the fan is not complete).
ContainingCone find_containing_cone(const Fan& fan, const IntVector& point);

}  // namespace toricwhb::fan
