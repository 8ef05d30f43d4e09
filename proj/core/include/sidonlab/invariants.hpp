#ifndef SIDONLAB_INVARIANTS_HPP
#define SIDONLAB_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidonlab/poly.hpp"

namespace sidonlab {

// v[r] = #preimages of r under P; d[r] = #ordered pairs (a, b) with
// P(a) - P(b) = r. d is derived from v through the convolution identity
// d_r = sum_i v_i * v_(i+r).
struct ValueProfile {
    FieldPtr field;
    std::vector<std::uint32_t> v;
    std::vector<std::uint64_t> d;
};

ValueProfile value_profile(const Poly& p);

// Number of gamma for which P - gamma has a root of multiplicity >= n
// (n >= 1). Computed on the reduced representative; constant polynomials
// are rejected.
std::uint64_t f_invariant(const Poly& p, std::uint32_t n);

// Number of gamma with exactly n distinct preimages (n >= 0).
std::uint64_t g_invariant(const Poly& p, std::uint32_t n);

// (sorted multiset of v values; f(P,n) for n = 1..deg; g(P,n) for
// n = 0..deg), deg taken after reduction.
struct InvariantSignature {
    std::vector<std::uint32_t> v_multiset;
    std::vector<std::uint64_t> f;
    std::vector<std::uint64_t> g;

    bool operator==(const InvariantSignature&) const = default;
};

InvariantSignature invariant_signature(const Poly& p);

enum class EquivStatus { NotEquivalent, Equivalent, Inconclusive };
enum class EquivMode { RefuteOnly, Certify };

struct EquivalenceResult {
    EquivStatus status = EquivStatus::Inconclusive;
    std::optional<std::string> refuting_invariant;
    // permutation polynomials (R, T) with R o P o T = P' as reduced functions
    std::optional<std::pair<Poly, Poly>> certificate;
    bool inputs_reduced = false;  // true when an input had degree >= q
    std::string note;
};

// RefuteOnly compares preimage-count invariants (the g family); a mismatch
// refutes equivalence, a match is Inconclusive. Root-multiplicity counts
// (f) are reported in signatures but never used to refute: composition with
// permutation polynomials need not preserve them once compositions are
// reduced mod x^q - x, and a certificate search can succeed where they
// differ. Certify scans all q! inner permutations T in lexicographic table
// order; the induced partial map R is extended canonically, and the first
// success wins. Certify requires q <= 7.
EquivalenceResult are_equivalent(const Poly& p, const Poly& p2, EquivMode mode,
                                 unsigned jobs = 1);

enum class LowDegreeClass { Linear, Quadratic };

struct LowDegreeNormalization {
    LowDegreeClass cls = LowDegreeClass::Linear;
    // post o P o pre equals x (Linear) or x^2 (Quadratic); both affine
    Poly post;
    Poly pre;
};

LowDegreeNormalization normalize_low_degree(const Poly& p);

enum class CubicClass { Cube, UnitTwist, NonsquareTwist };

struct CubicClassification {
    CubicClass cls = CubicClass::Cube;
    std::uint32_t w = 0;  // post o P o pre = x^3 - w x, verified pointwise
    Poly post;
    Poly pre;
    // For NonsquareTwist: maps realizing P ~ x^3 - k x with k the smallest
    // nonsquare.
    std::optional<std::pair<Poly, Poly>> canonical_maps;
};

// Depress a cubic to x^3 - w x by an affine substitution and classify by
// the quadratic character of w. Requires characteristic > 3.
CubicClassification normalize_cubic(const Poly& p);

const char* to_string(CubicClass c);
const char* to_string(EquivStatus s);

}  // namespace sidonlab

#endif
