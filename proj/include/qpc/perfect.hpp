#ifndef QPC_PERFECT_HPP
#define QPC_PERFECT_HPP

#include <map>
#include <optional>
#include <string>

#include "qpc/codes.hpp"

namespace qpc {

// Exact element of Z[zeta], zeta a primitive p-th root of unity, reduced
// against 1 + zeta + ... + zeta^(p-1) = 0.  Coefficients index the basis
// 1, zeta, ..., zeta^(p-2).
class CyclotomicInt {
  public:
    explicit CyclotomicInt(unsigned p) : p_(p), coeffs_(p - 1, 0) {}

    // counts[j] = multiplicity of zeta^j, 0 <= j < p.
    static CyclotomicInt from_counts(unsigned p, const std::vector<long long>& counts);

    unsigned p() const { return p_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool equals_integer(long long k) const;
    bool operator==(const CyclotomicInt&) const = default;

  private:
    unsigned p_;
    std::vector<long long> coeffs_;
};

struct PerfectReport {
    bool is_perfect = false;
    bool cardinality_ok = false;
    uint64_t coverage_defects = 0;
    std::string method;  // "exhaustive", "packing-bound" or "inadmissible"
    unsigned m = 0;      // parameter with n = (q^m - 1)/(q - 1), 0 if none
    std::string reason;
};

// The inner/outer split of a code along a dual word of weight q^(m-1):
// after the monomial map sending w to all-ones-on-the-last-coordinates,
// every codeword (u|v) contributes u to inner[v] and v to outer[u].
struct Decomposition {
    Word w;
    size_t prefix_len = 0;
    size_t suffix_len = 0;
    MonomialMap map;                // the canonicalizing monomial map
    std::map<Word, Code> inner;     // C'(v), keyed by suffix
    std::map<Word, Code> outer;     // C''(u), keyed by prefix
};

struct Theorem2Report {
    bool perfect = false;
    bool non_full_rank = false;
    bool conditions_hold = false;  // the C'/C'' side of the equivalence
    std::optional<Word> dual_word;
    std::string detail;

    bool ok() const { return perfect && non_full_rank && conditions_hold; }
};

// m with n = (q^m - 1)/(q - 1), if any (m >= 2).
std::optional<unsigned> admissible_m(unsigned q, size_t n);

// Radius-1 Hamming sphere around the origin as an explicit code.
Code hamming_sphere(const Field& f, size_t n);

// Exhaustive sphere-covering check when q^n <= 10^8, sphere-packing
// cardinality criterion beyond that (equivalent for distance >= 3 codes).
PerfectReport is_perfect(const Code& c);

// chi_u(C) = sum over codewords of zeta^(u.v); prime fields only.
CyclotomicInt char_sum(const Word& u, const Code& c);

// chi_u of the radius-1 sphere: q^m - q*wt(u).
long long sphere_char_value(const Word& u, unsigned q, unsigned m);

struct Theorem1Result {
    bool ok = false;
    WeightDistribution dual_weights;
    size_t rank = 0;
};

// Dual weight distribution of a 1-perfect code: B_0 = 1,
// B_{q^(m-1)} = q^(n-k) - 1, everything else 0.
Theorem1Result theorem1_check(const Code& c);

Decomposition decompose(const Code& c, const Word& w);

Theorem2Report check_theorem2(const Code& c);

}  // namespace qpc

#endif
