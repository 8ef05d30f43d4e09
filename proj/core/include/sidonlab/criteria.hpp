#ifndef SIDONLAB_CRITERIA_HPP
#define SIDONLAB_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/invariants.hpp"
#include "sidonlab/poly.hpp"
#include "sidonlab/sidon.hpp"

namespace sidonlab {

enum class CriterionKind { DifferenceBound, SumBound };

struct CriterionRow {
    std::uint32_t r = 0;
    std::uint64_t lhs = 0;
    std::uint64_t bound = 0;
    bool ok = true;
};

// Necessary conditions only: Violates certifies that P is not Sidon, a pass
// proves nothing.
struct CriterionReport {
    CriterionKind criterion = CriterionKind::DifferenceBound;
    FieldPtr field;
    std::vector<CriterionRow> rows;
    bool passes = true;
    std::optional<std::uint32_t> first_violation;
};

// d_r <= 2q-1 at r = 0 and <= q elsewhere.
CriterionReport check_difference_bound(const Poly& p);

// v_(r/2) + sum_i v_i v_(r-i) <= 2q for every r.
CriterionReport check_sum_bound(const Poly& p);

struct PlanarityResult {
    bool planar = false;
    std::optional<std::uint32_t> witness;  // least a with a non-bijective shift difference
};

// P is planar iff P(x+a) - P(x) is a permutation for every nonzero a.
PlanarityResult is_planar(const Poly& p);

enum class VerdictKind { Sidon, NotSidon, Unknown };

// A Sidon verdict always carries a verified companion; NotSidon names the
// criterion that certifies it; everything else stays Unknown.
struct SidonVerdictTag {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<Poly> companion;
    std::string reason;
};

// Verdict for x^r: Sidon for r in {1,2} and for gcd(r, q-1) = 1 (companion
// x^(2r)); not Sidon for r > 2 dividing q-1; Unknown otherwise. Exponents
// >= q are folded first.
SidonVerdictTag monomial_verdict(std::uint64_t r, FieldPtr field);

// Verdict for cubics through the depressed classification. Every NotSidon
// answer is re-certified by running the implicated criterion report.
SidonVerdictTag cubic_sidon_verdict(const Poly& p);

struct FormCount {
    std::uint64_t closed_form = 0;
    std::uint64_t brute_force = 0;
};

// #{(a,b) : a^2 + ab + b^2 = c} over F_p: closed form p - eta(-3) next to
// an O(p^2) scan. Prime fields with p > 3, c != 0.
FormCount count_quadratic_form(FieldPtr field, std::uint32_t c, unsigned jobs = 1);

// d_0(x^3 - c x) over F_p from the four-case closed form keyed on p mod 6
// and the character of c/3.
std::uint64_t d0_cubic_closed_form(FieldPtr field, std::uint32_t c);

struct CongruenceBridgeRow {
    std::uint32_t p = 0;
    int eta3 = 0;
    bool twelve_divides = false;  // 12 | p-1 or 12 | p+1
    bool ok = false;
};

// eta(3) = +1 over F_p iff 12 | p-1 or 12 | p+1, checked for all primes
// 5 <= p <= max_p.
std::vector<CongruenceBridgeRow> congruence_bridge(std::uint32_t max_p);

const char* to_string(VerdictKind k);
const char* to_string(CriterionKind k);

}  // namespace sidonlab

#endif
