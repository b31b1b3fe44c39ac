#include "toricwhb/finite_field.hpp"

#include <algorithm>
#include <string>

#include "toricwhb/errors.hpp"

namespace toricwhb::ff {

std::pair<long, int> prime_power(long q) {
    if (q < 2) return {0, 0};
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return {0, 0};
    return {p, k};
}

namespace {

// Digits base p, lowest first.
std::vector<long> digits(std::uint32_t x, long p, int k) {
    std::vector<long> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<long>(x % static_cast<std::uint32_t>(p));
        x /= static_cast<std::uint32_t>(p);
    }
    return out;
}

std::uint32_t undigits(const std::vector<long>& d, long p) {
    std::uint32_t x = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        x = x * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(*it);
    return x;
}

// Multiplication by the class of t modulo a monic polynomial of degree k.
std::uint32_t times_t(std::uint32_t a, const std::vector<long>& modulus, long p, int k) {
    auto d = digits(a, p, k);
    const long top = d.back();
    for (int i = k - 1; i > 0; --i) d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)];
    d[0] = 0;
    for (int i = 0; i < k; ++i) {
        long v = d[static_cast<std::size_t>(i)] - top * modulus[static_cast<std::size_t>(i)];
        v %= p;
        if (v < 0) v += p;
        d[static_cast<std::size_t>(i)] = v;
    }
    return undigits(d, p);
}

}  // namespace

GaloisField::GaloisField(long q) : q_(q) {
    auto [p, k] = prime_power(q);
    if (p == 0) throw InputError("GaloisField: " + std::to_string(q) + " is not a prime power");
    if (q > 65536) throw InputError("GaloisField: field too large for table arithmetic");
    p_ = p;
    k_ = k;
    const auto order = static_cast<std::uint32_t>(q - 1);

    // Try monic polynomials of degree k until t generates the multiplicative
    // group; that certifies the quotient ring is a field.
    long candidates = 1;
    for (int i = 0; i < k; ++i) candidates *= p;
    for (long c = 0; c < candidates; ++c) {
        std::vector<long> modulus(static_cast<std::size_t>(k) + 1);
        auto low = digits(static_cast<std::uint32_t>(c), p, k);
        for (int i = 0; i < k; ++i) modulus[static_cast<std::size_t>(i)] = low[static_cast<std::size_t>(i)];
        modulus[static_cast<std::size_t>(k)] = 1;
        if (modulus[0] == 0 && k > 1) continue;

        std::vector<std::uint32_t> log(static_cast<std::size_t>(q), 0);
        std::vector<bool> seen(static_cast<std::size_t>(q), false);
        std::vector<Elem> exp(2 * order);
        // For k == 1 use a primitive root in place of t.
        std::vector<Elem> gens;
        if (k == 1)
            for (Elem g = 1; g < static_cast<Elem>(q); ++g) gens.push_back(g);
        else
            gens.push_back(static_cast<Elem>(p));  // the class of t
        bool ok = false;
        for (Elem g : gens) {
            std::fill(seen.begin(), seen.end(), false);
            Elem x = 1;
            ok = true;
            for (std::uint32_t e = 0; e < order; ++e) {
                if (x == 0 || seen[x]) {
                    ok = false;
                    break;
                }
                seen[x] = true;
                exp[e] = x;
                log[x] = e;
                x = k == 1 ? static_cast<Elem>((static_cast<long>(x) * g) % p) : times_t(x, modulus, p, k);
            }
            if (ok && x == 1) break;
            ok = false;
        }
        if (!ok) continue;
        for (std::uint32_t e = 0; e < order; ++e) exp[order + e] = exp[e];
        modulus_ = std::move(modulus);
        exp_ = std::move(exp);
        log_ = std::move(log);
        return;
    }
    throw InternalError("GaloisField: no irreducible polynomial found");
}

GaloisField::Elem GaloisField::from_int(long v) const {
    v %= p_;
    if (v < 0) v += p_;
    return static_cast<Elem>(v);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return static_cast<Elem>((a + b) % static_cast<Elem>(p_));
    Elem out = 0, scale = 1;
    while (a || b) {
        const Elem da = a % static_cast<Elem>(p_), db = b % static_cast<Elem>(p_);
        out += ((da + db) % static_cast<Elem>(p_)) * scale;
        scale *= static_cast<Elem>(p_);
        a /= static_cast<Elem>(p_);
        b /= static_cast<Elem>(p_);
    }
    return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0, scale = 1;
    while (a) {
        const Elem da = a % static_cast<Elem>(p_);
        out += ((static_cast<Elem>(p_) - da) % static_cast<Elem>(p_)) * scale;
        scale *= static_cast<Elem>(p_);
        a /= static_cast<Elem>(p_);
    }
    return out;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw InputError("GaloisField: inverse of zero");
    const auto order = static_cast<std::uint32_t>(q_ - 1);
    return exp_[(order - log_[a]) % order];
}

GaloisField::Elem GaloisField::pow(Elem a, unsigned long e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto order = static_cast<unsigned long>(q_ - 1);
    return exp_[static_cast<std::size_t>((static_cast<unsigned long>(log_[a]) * (e % order)) % order)];
}

}  // namespace toricwhb::ff
