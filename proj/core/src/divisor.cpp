#include "toricwhb/divisor.hpp"

#include <sstream>

#include "toricwhb/errors.hpp"

namespace toricwhb::divisor {

namespace {

void normalize(DivisorClass& c) {
    for (std::size_t k = 0; k < c.coords.size(); ++k)
        if (c.moduli[k] > 0) {
            c.coords[k] %= c.moduli[k];
            if (c.coords[k] < 0) c.coords[k] += c.moduli[k];
        }
}

void require_same_group(const DivisorClass& a, const DivisorClass& b) {
    if (a.moduli != b.moduli) throw InputError("divisor classes belong to different class groups");
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_group(a, b);
    DivisorClass out{lattice::add(a.coords, b.coords), a.moduli};
    normalize(out);
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_group(a, b);
    DivisorClass out{lattice::subtract(a.coords, b.coords), a.moduli};
    normalize(out);
    return out;
}

DivisorClass operator*(const Integer& k, const DivisorClass& a) {
    DivisorClass out{lattice::scale(k, a.coords), a.moduli};
    normalize(out);
    return out;
}

bool DivisorClass::is_zero() const { return lattice::is_zero(coords); }

std::string to_string(const DivisorClass& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
        if (k) os << ',';
        os << c.coords[k].get_str();
        if (c.moduli[k] > 0) os << " mod " << c.moduli[k].get_str();
    }
    os << ']';
    return os.str();
}

DivisorClass class_of(const Fan& fan, const TorusDivisor& d) {
    if (d.size() != fan.num_rays()) throw InputError("class_of: divisor length differs from #rays");
    const auto& snf = fan.ray_smith_form();
    const IntVector w = snf.U * d;
    DivisorClass out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < snf.rank) {
            const Integer& di = snf.S(i, i);
            if (di == 1) continue;
            out.coords.push_back(w[i]);
            out.moduli.push_back(di);
        } else {
            out.coords.push_back(w[i]);
            out.moduli.emplace_back(0);
        }
    }
    normalize(out);
    return out;
}

bool linearly_equivalent(const Fan& fan, const TorusDivisor& a, const TorusDivisor& b) {
    return class_of(fan, a) == class_of(fan, b);
}

std::size_t class_group_rank(const Fan& fan) { return fan.num_rays() - fan.ray_smith_form().rank; }

TorusDivisor principal_divisor(const Fan& fan, const IntVector& m) {
    TorusDivisor out(fan.num_rays());
    for (std::size_t i = 0; i < fan.num_rays(); ++i) out[i] = lattice::dot(m, fan.ray(i));
    return out;
}

Integer intersect(const TorusDivisor& d, const primitive::CurveClass& c) {
    return lattice::dot(d, c.intersection_vector);
}

TorusDivisor anticanonical(const Fan& fan) { return TorusDivisor(fan.num_rays(), Integer(1)); }

TorusDivisor prime_divisor(const Fan& fan, std::size_t i, long k) {
    if (i >= fan.num_rays()) throw InputError("prime_divisor: ray index out of range");
    TorusDivisor out(fan.num_rays());
    out[i] = k;
    return out;
}

}  // namespace toricwhb::divisor
