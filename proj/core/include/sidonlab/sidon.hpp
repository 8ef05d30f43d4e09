#ifndef SIDONLAB_SIDON_HPP
#define SIDONLAB_SIDON_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/poly.hpp"

namespace sidonlab {

struct Point {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    auto operator<=>(const Point&) const = default;
};

// Subset of F_q x F_q; points deduplicated and sorted by (x index, y index).
struct PointSet {
    FieldPtr field;
    std::vector<Point> points;
};

PointSet make_point_set(FieldPtr field, std::vector<Point> points);

// Point set of a polynomial pair: {(P(x), Q(x)) : x in F_q}, deduplicated.
PointSet pair_point_set(const Poly& P, const Poly& Q);

struct SidonVerdict {
    bool is_sidon = false;
    // a1 - a2 = a3 - a4 componentwise with {a1,a4} != {a2,a3}
    std::optional<std::array<Point, 4>> witness;
};

// O(|S|^2) pass storing the first-seen ordered pair per difference; the
// second occurrence yields the witness. Deterministic: unordered pairs are
// scanned in sorted order. CharTwo on even characteristic.
SidonVerdict is_sidon_set(const PointSet& s);

// True iff {(P(x), Q(x))} has exactly q distinct points and is Sidon.
bool is_maximum_sidon_pair(const Poly& P, const Poly& Q);

// For each s in S+S, the number of ordered pairs (h, h') in S x S with
// h + h' = s. NotSidon unless S verifies.
std::map<Point, std::uint32_t> sum_representation_profile(const PointSet& s);

enum class CompanionStatus { Found, NotFound, Unknown };
enum class CompanionMethod { Constructive, Exhaustive };

struct CompanionResult {
    CompanionStatus status = CompanionStatus::Unknown;
    std::optional<Poly> companion;
    CompanionMethod method = CompanionMethod::Constructive;
    std::string note;  // which rule fired / why unknown
};

// Rule-based companion construction: degree 1-2 pairs, coprime monomials
// x^r -> x^(2r), and planar polynomials paired with x. Unknown when no
// rule applies. Every Found companion is re-verified.
CompanionResult constructive_companion(const Poly& P);

struct SearchStats {
    // Nodes attempted in branches up to and including the winning branch
    // (all complete); identical for every worker count.
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

// Exhaustive companion search over value tables of Q with Q(0) = 0 fixed,
// DFS in canonical index order with incremental difference pruning. The
// reported companion is the lexicographically least valid table. The node
// budget applies to each first-level branch independently, which keeps
// results identical across worker counts.
CompanionResult companion_search(const Poly& P, std::uint64_t budget = 100'000'000,
                                 unsigned jobs = 1, SearchStats* stats = nullptr);

// Collects every companion table (interpolated) of P; test/verification
// helper behind the Q(0) = 0 normalization used by companion_search.
std::vector<Poly> all_companions(const Poly& P, unsigned jobs = 1);

// All Sidon subsets of F_q x F_q of the given size, in lexicographic order
// of their sorted point sequences. TooLarge unless q <= 5 or force.
std::vector<PointSet> enumerate_sidon_subsets(FieldPtr field, std::uint32_t size,
                                              bool force = false, unsigned jobs = 1);

// All maximum (size-q) Sidon sets.
std::vector<PointSet> enumerate_maximum_sidon_sets(FieldPtr field, bool force = false,
                                                   unsigned jobs = 1);

struct ConjectureReport {
    std::uint64_t total_sets = 0;
    std::uint64_t representable_sets = 0;
    std::vector<PointSet> counterexamples;
};

// For every maximum Sidon set over F_p x F_p, decides whether some ordering
// of its p points interpolates to a pair (P, Q) with 1 <= deg P, deg Q <= 2.
// All p! orderings are tried with early exit. Prime fields only, p <= 5
// unless force.
ConjectureReport conjecture_check(FieldPtr field, bool force = false, unsigned jobs = 1);

// PointSet CSV: header line "# field p^n/modulus", then one "x,y" per line.
std::string pointset_to_csv(const PointSet& s);
PointSet pointset_from_csv(const std::string& text);

}  // namespace sidonlab

#endif
