#pragma once

// Divisor class group Z^{#rays} / {(<m, x_i>)_i} and intersection numbers.

#include <string>
#include <vector>

#include "toricwhb/fan.hpp"
#include "toricwhb/primitive.hpp"

namespace toricwhb::divisor {

using fan::Fan;

/// Coefficients a_i of D = sum a_i D_i, one per ray.
using TorusDivisor = IntVector;

/// Canonical representative: coords[k] is reduced modulo moduli[k] when
/// moduli[k] > 0 (torsion) and free when moduli[k] == 0.
struct DivisorClass {
    IntVector coords;
    IntVector moduli;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Integer& k, const DivisorClass& a);

    bool is_zero() const;
};

std::string to_string(const DivisorClass& c);

DivisorClass class_of(const Fan& fan, const TorusDivisor& d);
bool linearly_equivalent(const Fan& fan, const TorusDivisor& a, const TorusDivisor& b);

/// Free rank of the class group.
std::size_t class_group_rank(const Fan& fan);

/// Principal divisor of the character m.
TorusDivisor principal_divisor(const Fan& fan, const IntVector& m);

Integer intersect(const TorusDivisor& d, const primitive::CurveClass& c);

TorusDivisor anticanonical(const Fan& fan);

/// Divisor D_i with coefficient k (1 by default).
TorusDivisor prime_divisor(const Fan& fan, std::size_t i, long k = 1);

}  // namespace toricwhb::divisor
