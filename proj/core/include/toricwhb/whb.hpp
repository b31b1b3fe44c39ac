#pragma once

// Necessary conditions for a wild hypersurface bundle over a toric base:
// splitting arithmetic on curves, the per-relation criterion, and family analyses.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricwhb/fan.hpp"
#include "toricwhb/primitive.hpp"

namespace toricwhb::whb {

using primitive::PrimitiveRelation;

struct CaseFlags {
    bool case_i = false;
    bool case_ii = false;
    friend bool operator==(const CaseFlags&, const CaseFlags&) = default;
};

enum class SplitCase { i, ii };

/// `tangent` is the degree multiset of T_S restricted to a curve (all entries
/// <= 2, containing the degree 2 of the curve's own tangent line).
/// case_i: after removing one entry 2, every degree i satisfies p | i - 1.
/// case_ii: p == 2 and every degree is even.
CaseFlags check_splitting_case(const std::vector<Integer>& tangent, long p);

/// Degrees of E^p (x) L on the curve forced by each case, sorted descending.
/// Throws InputError when case i is requested without a degree-2 entry.
std::vector<Integer> expected_bundle_splitting(const std::vector<Integer>& tangent, SplitCase c);

struct RelationRecord {
    std::size_t relation_id = 0;
    bool extremal = false;
    bool case_i = false;
    bool case_ii = false;
    bool passes() const { return !extremal || case_i || case_ii; }
};

RelationRecord check_relation(const PrimitiveRelation& rel, std::size_t dim, long p, std::size_t relation_id = 0);

struct PrimeVerdict {
    long prime = 0;
    bool admissible = false;
    std::vector<RelationRecord> relations;
};

std::vector<long> primes_up_to(long bound);

std::vector<PrimeVerdict> admissible_primes(const std::vector<PrimitiveRelation>& rels, std::size_t dim,
                                            long p_max = 13);
std::vector<PrimeVerdict> admissible_primes(const fan::Fan& fan, long p_max = 13);

/// Just the admissible primes of a verdict list.
std::vector<long> admissible_set(const std::vector<PrimeVerdict>& verdicts);

/// Parameters of the five-collection Picard-3 family: sizes p_0..p_4 of the
/// ray groups and the coefficients c_2..c_{p_2}, b_1..b_{p_3}.
struct Pic3CaseIIData {
    long p[5] = {1, 1, 1, 1, 1};
    std::vector<long> c;
    std::vector<long> b;

    long dim() const { return p[0] + p[1] + p[2] + p[3] + p[4] - 3; }
    /// Throws InputError unless all sizes are positive and coefficient counts match.
    void check() const;
};

struct Pic3RelationCheck {
    std::string label;
    long m = 0;
    long n = 0;
    std::vector<long> coeffs;
    bool case_i = false;
    bool case_ii = false;
    /// Why each case fails (empty when it holds).
    std::string case_i_obstruction;
    std::string case_ii_obstruction;
};

struct Pic3Analysis {
    bool feasible = false;
    std::vector<Pic3RelationCheck> relations;
    /// Human-readable certificate: the linear system and its resolution.
    std::string certificate;
};

/// Applies the per-relation criterion to the first, second and fourth
/// relations of the family, taken as extremal.
Pic3Analysis analyze_pic3_case_ii(const Pic3CaseIIData& data, long p);

struct Pic3SweepResult {
    std::size_t tuples = 0;
    std::size_t analyses = 0;
    /// Parameter tuples (with prime) that pass all three relations.
    std::vector<std::pair<Pic3CaseIIData, long>> feasible;
};

/// Every size tuple with 2 <= d <= max_dim, every prime <= p_max, and every
/// residue class of uniform coefficients modulo the prime.
Pic3SweepResult sweep_pic3_case_ii(long max_dim, long p_max = 13);

enum class FanoCase {
    projective_space,
    p1_product,
    odd_kleinschmidt,
    small_contraction_type,
    inadmissible_divisorial,
    outside_classified,
};

std::string to_string(FanoCase c);

struct FanoClassification {
    FanoCase kind = FanoCase::outside_classified;
    /// For odd_kleinschmidt: the twist is 2a - 1.
    std::optional<long> a;
    std::vector<long> admissible;
    std::string detail;
};

/// Throws InputError when the fan is not Fano.
FanoClassification classify_fano(const fan::Fan& fan, long p_max = 13);

}  // namespace toricwhb::whb
