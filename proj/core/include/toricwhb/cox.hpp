#pragma once

// Polynomials in Cox coordinates over F_p: grading, derivatives, smoothness
// and the fiberwise p-th power test.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricwhb/bundle.hpp"
#include "toricwhb/divisor.hpp"
#include "toricwhb/fan.hpp"

namespace toricwhb::cox {

using divisor::DivisorClass;
using fan::Fan;
using fan::RaySet;

struct Term {
    std::vector<unsigned> exponents;
    long coeff = 1;
    friend bool operator==(const Term&, const Term&) = default;
};

class CoxForm {
public:
    /// Coefficients are reduced modulo p, equal monomials merged and zero
    /// terms dropped; terms are kept sorted by exponent vector.
    CoxForm(std::size_t num_vars, long p, std::vector<Term> terms);

    std::size_t num_vars() const { return num_vars_; }
    long characteristic() const { return p_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CoxForm without_term(std::size_t index) const;

    friend bool operator==(const CoxForm&, const CoxForm&) = default;

private:
    std::size_t num_vars_;
    long p_;
    std::vector<Term> terms_;
};

DivisorClass monomial_class(const Fan& fan, const std::vector<unsigned>& exponents);

/// Common class of all terms, or nullopt. Throws InputError on an empty form.
std::optional<DivisorClass> is_homogeneous(const Fan& fan, const CoxForm& form);

/// Formal partial derivatives, one per variable.
std::vector<CoxForm> partials(const CoxForm& form);

enum class Outcome { smooth, singular, undecided };
enum class Method { combinatorial, finite_field_search };

std::string to_string(Outcome o);
std::string to_string(Method m);

struct SmoothnessVerdict {
    Outcome outcome = Outcome::undecided;
    Method method = Method::combinatorial;
    /// Variables set to zero at a singular point (a face of the fan).
    std::optional<RaySet> vanishing_set;
    std::string reason;
};

/// Exact decision in characteristic 2 when every partial derivative is zero
/// or a single monomial. Returns undecided (with a reason) otherwise.
SmoothnessVerdict decide_smooth_monomial_partials(const Fan& fan, const CoxForm& form);
SmoothnessVerdict decide_smooth_monomial_partials(const bundle::TotalSpaceFan& t, const CoxForm& form);

/// Every term is a base monomial times Y_j^p, and the coefficient polynomials
/// of the Y_j^p have no common zero on the base. Throws InputError when the
/// second condition is outside what can be decided exactly.
bool is_wild_fiberwise(const bundle::TotalSpaceFan& t, const CoxForm& form, long p);

struct SingularWitness {
    std::size_t chart = 0;  // index of the maximal cone
    long q = 0;
    /// Field element per variable (integer encoding of F_q; 1 off the chart).
    std::vector<std::uint32_t> point;
};

/// Exhaustive search over F_q-points of every affine chart for a common zero
/// of the form and its chart derivatives. Throws ResourceError when q^dim
/// exceeds `budget`; `threads` > 1 splits charts across workers and still
/// returns the lowest chart index.
std::optional<SingularWitness> singular_point_search(const Fan& fan, const CoxForm& form, long q,
                                                     std::uint64_t budget = std::uint64_t{1} << 20,
                                                     unsigned threads = 1);

/// Checks a witness directly: the point's zero set is a face, and the form and
/// all partials vanish there.
bool verify_witness(const Fan& fan, const CoxForm& form, const SingularWitness& w);

/// Sets the variables of `zero_set` to 0 and all others to 1 and checks that
/// the form and every partial vanish and `zero_set` is a face.
bool verify_vanishing_set(const Fan& fan, const CoxForm& form, const RaySet& zero_set);

/// Parses "X3*X4*Y1^2 + X2*Y3^2"-style text. `resolve` maps a variable
/// letter and 1-based index to a variable position (throwing InputError when
/// unknown). Integer coefficients may prefix a term ("3*X1").
CoxForm parse_form(const std::string& text, std::size_t num_vars, long p,
                   const std::function<std::size_t(char, std::size_t)>& resolve);

/// X_i are the base-ray lifts and Y_j the fiber rays.
CoxForm parse_bundle_form(const bundle::TotalSpaceFan& t, const std::string& text, long p);

/// X_i is ray i of the fan.
CoxForm parse_fan_form(const Fan& fan, const std::string& text, long p);

/// Text rendering with X/Y names for a bundle.
std::string format_bundle_form(const bundle::TotalSpaceFan& t, const CoxForm& form);

}  // namespace toricwhb::cox
