#include "toricwhb/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toricwhb/errors.hpp"

namespace toricwhb::fan {

using lattice::IntMatrix;

RaySet make_ray_set(std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw InputError("ray index set contains a repeated index");
    return indices;
}

std::uint64_t to_mask(const RaySet& s) {
    std::uint64_t m = 0;
    for (std::size_t i : s) {
        if (i >= 64) throw InputError("ray index too large for a bitmask");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

RaySet from_mask(std::uint64_t mask) {
    RaySet out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

std::string to_string(const RaySet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RaySet> max_cones)
    : dim_(dim), rays_(std::move(rays)) {
    if (dim_ == 0) throw InputError("fan dimension must be positive");
    std::set<IntVector> seen;
    for (const auto& r : rays_) {
        if (r.size() != dim_) throw InputError("ray " + toricwhb::to_string(r) + " has wrong length");
        if (!seen.insert(r).second) throw InputError("duplicate ray " + toricwhb::to_string(r));
    }
    cones_.reserve(max_cones.size());
    for (auto& c : max_cones) {
        RaySet s = make_ray_set(std::move(c));
        if (s.size() != dim_) throw InputError("maximal cone " + to_string(s) + " does not have dim rays");
        if (!s.empty() && s.back() >= rays_.size())
            throw InputError("maximal cone " + to_string(s) + " references a missing ray");
        cones_.push_back(std::move(s));
    }
    if (rays_.size() <= 64) {
        masks_.reserve(cones_.size());
        for (const auto& c : cones_) masks_.push_back(to_mask(c));
    }
    smith_ = std::make_shared<const lattice::SmithForm>(lattice::smith_normal_form(IntMatrix::from_rows(rays_, dim_)));
}

std::vector<IntVector> Fan::cone_rays(const RaySet& s) const {
    std::vector<IntVector> out;
    out.reserve(s.size());
    for (std::size_t i : s) out.push_back(rays_.at(i));
    return out;
}

namespace {

// Rows of the inverse of a unimodular cone matrix: the dual basis.
std::optional<std::vector<IntVector>> dual_basis(const std::vector<IntVector>& gens, std::size_t dim) {
    if (gens.size() != dim) return std::nullopt;
    std::vector<IntVector> out(dim, IntVector(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        IntVector e(dim);
        e[k] = 1;
        // Column k of the inverse solves G * col = e_k; row i of the inverse is
        // then read off across k.
        auto col = lattice::solve_in_span(gens, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((*col)[i].get_den() != 1) return std::nullopt;
            out[i][k] = (*col)[i].get_num();
        }
    }
    return out;
}

bool separated_by(const IntVector& u, const Fan& fan, const RaySet& common, const RaySet& first, const RaySet& second) {
    for (std::size_t i : common)
        if (lattice::dot(u, fan.ray(i)) != 0) return false;
    for (std::size_t i : first)
        if (lattice::dot(u, fan.ray(i)) <= 0) return false;
    for (std::size_t i : second)
        if (lattice::dot(u, fan.ray(i)) >= 0) return false;
    return true;
}

// LP search for u with u = 0 on common, u >= 1 on first, u <= -1 on second.
bool separated_lp(const Fan& fan, const RaySet& common, const RaySet& first, const RaySet& second) {
    const std::size_t d = fan.dim();
    const std::size_t ineq = first.size() + second.size();
    const std::size_t cols = 2 * d + ineq;
    std::vector<RationalVector> rows;
    RationalVector rhs;
    auto add_row = [&](const IntVector& v, int slack_col, int slack_sign, long value) {
        RationalVector row(cols);
        for (std::size_t k = 0; k < d; ++k) {
            row[k] = v[k];
            row[d + k] = -v[k];
        }
        if (slack_col >= 0) row[static_cast<std::size_t>(slack_col)] = slack_sign;
        rows.push_back(std::move(row));
        rhs.emplace_back(value);
    };
    for (std::size_t i : common) add_row(fan.ray(i), -1, 0, 0);
    std::size_t s = 2 * d;
    for (std::size_t i : first) add_row(fan.ray(i), static_cast<int>(s++), -1, 1);
    for (std::size_t i : second) add_row(fan.ray(i), static_cast<int>(s++), 1, -1);
    return lattice::find_nonnegative_solution(rows, rhs).has_value();
}

RaySet set_difference(const RaySet& a, const RaySet& b) {
    RaySet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

RaySet set_intersection(const RaySet& a, const RaySet& b) {
    RaySet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

ValidationReport validate(const Fan& fan) {
    ValidationReport rep;
    const std::size_t d = fan.dim();

    for (std::size_t i = 0; i < fan.num_rays(); ++i)
        if (!lattice::is_primitive_vector(fan.ray(i))) {
            rep.primitive = false;
            rep.problems.push_back("ray " + std::to_string(i) + " is not primitive");
        }

    std::vector<std::optional<std::vector<IntVector>>> duals;
    duals.reserve(fan.max_cones().size());
    for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
        const auto gens = fan.cone_rays(fan.max_cones()[c]);
        const Integer det = lattice::determinant(IntMatrix::from_columns(gens, d));
        if (abs(det) != 1) {
            rep.smooth = false;
            rep.problems.push_back("cone " + to_string(fan.max_cones()[c]) + " is not unimodular (det " +
                                   det.get_str() + ")");
        }
        duals.push_back(abs(det) == 1 ? dual_basis(gens, d) : std::nullopt);
    }

    const auto& cones = fan.max_cones();
    for (std::size_t a = 0; a < cones.size(); ++a)
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            const RaySet common = set_intersection(cones[a], cones[b]);
            const RaySet only_a = set_difference(cones[a], common);
            const RaySet only_b = set_difference(cones[b], common);
            bool ok = false;
            if (duals[a]) {
                IntVector u(d);
                for (std::size_t k = 0; k < cones[a].size(); ++k)
                    if (!std::binary_search(common.begin(), common.end(), cones[a][k]))
                        u = lattice::add(u, (*duals[a])[k]);
                ok = separated_by(u, fan, common, only_a, only_b);
            }
            if (!ok && duals[b]) {
                IntVector u(d);
                for (std::size_t k = 0; k < cones[b].size(); ++k)
                    if (!std::binary_search(common.begin(), common.end(), cones[b][k]))
                        u = lattice::subtract(u, (*duals[b])[k]);
                ok = separated_by(u, fan, common, only_a, only_b);
            }
            if (!ok) ok = separated_lp(fan, common, only_a, only_b);
            if (!ok) {
                rep.intersections = false;
                rep.problems.push_back("cones " + to_string(cones[a]) + " and " + to_string(cones[b]) +
                                       " do not meet in a common face");
            }
        }

    std::map<RaySet, std::vector<std::size_t>> facets;
    for (std::size_t c = 0; c < cones.size(); ++c)
        for (std::size_t k = 0; k < cones[c].size(); ++k) {
            RaySet f = cones[c];
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
            facets[f].push_back(c);
        }
    if (cones.empty()) {
        rep.complete = false;
        rep.problems.push_back("fan has no maximal cones");
    }
    std::vector<std::vector<std::size_t>> adj(cones.size());
    for (const auto& [f, owners] : facets) {
        if (owners.size() != 2) {
            rep.complete = false;
            rep.problems.push_back("facet " + to_string(f) + " lies in " + std::to_string(owners.size()) +
                                   " maximal cones");
            continue;
        }
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    if (!cones.empty()) {
        std::vector<bool> seen(cones.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t n : adj[c])
                if (!seen[n]) {
                    seen[n] = true;
                    ++reached;
                    stack.push_back(n);
                }
        }
        if (reached != cones.size()) {
            rep.complete = false;
            rep.problems.push_back("dual graph of maximal cones is disconnected");
        }
    }
    return rep;
}

void require_valid(const Fan& fan) {
    const auto rep = validate(fan);
    if (!rep.ok()) throw InputError("fan does not validate: " + rep.problems.front());
}

std::size_t picard_number(const Fan& fan) { return fan.num_rays() - fan.dim(); }

bool is_face(const Fan& fan, const RaySet& subset) {
    if (subset.empty()) return true;
    if (subset.back() >= fan.num_rays()) throw InputError("is_face: ray index out of range");
    if (fan.has_masks()) {
        const std::uint64_t m = to_mask(subset);
        for (std::uint64_t c : fan.cone_masks())
            if ((c & m) == m) return true;
        return false;
    }
    for (const auto& c : fan.max_cones())
        if (std::includes(c.begin(), c.end(), subset.begin(), subset.end())) return true;
    return false;
}

std::vector<Wall> walls(const Fan& fan) {
    std::map<RaySet, std::vector<std::pair<std::size_t, std::size_t>>> facets;
    const auto& cones = fan.max_cones();
    for (std::size_t c = 0; c < cones.size(); ++c)
        for (std::size_t k = 0; k < cones[c].size(); ++k) {
            RaySet f = cones[c];
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
            facets[f].emplace_back(c, cones[c][k]);
        }
    std::vector<Wall> out;
    for (const auto& [f, owners] : facets) {
        if (owners.size() != 2) continue;
        Wall w;
        w.generators = f;
        w.adjacent = {owners[0].first, owners[1].first};
        w.opposite_rays = {owners[0].second, owners[1].second};
        out.push_back(std::move(w));
    }
    return out;
}

ContainingCone find_containing_cone(const Fan& fan, const IntVector& point) {
    if (point.size() != fan.dim()) throw InputError("find_containing_cone: point has wrong length");
    ContainingCone out;
    if (lattice::is_zero(point)) return out;
    const auto& cones = fan.max_cones();
    for (std::size_t c = 0; c < cones.size(); ++c) {
        auto coords = lattice::cone_coordinates(fan.cone_rays(cones[c]), point);
        if (!coords) continue;
        out.max_cone = c;
        out.rays = cones[c];
        out.coords = std::move(*coords);
        for (std::size_t k = 0; k < out.rays.size(); ++k)
            if (out.coords[k] > 0) {
                out.support.push_back(out.rays[k]);
                out.support_coeffs.push_back(out.coords[k]);
            }
        return out;
    }
    throw InputError("find_containing_cone: point " + toricwhb::to_string(point) + " lies in no maximal cone");
}

}  // namespace toricwhb::fan
