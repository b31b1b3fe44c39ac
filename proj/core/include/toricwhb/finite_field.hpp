#pragma once

// Small finite fields GF(p^k) with table-driven multiplication.

#include <cstdint>
#include <vector>

namespace toricwhb::ff {

class GaloisField {
public:
    using Elem = std::uint32_t;

    /// q must be a prime power no larger than 65536; otherwise InputError.
    explicit GaloisField(long q);

    long q() const { return q_; }
    long characteristic() const { return p_; }
    int degree() const { return k_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(long v) const;

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, unsigned long e) const;

    /// Coefficients of the defining polynomial, lowest degree first (monic).
    const std::vector<long>& modulus() const { return modulus_; }

private:
    long q_ = 0;
    long p_ = 0;
    int k_ = 0;
    std::vector<long> modulus_;
    std::vector<Elem> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
};

/// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<long, int> prime_power(long q);

}  // namespace toricwhb::ff
