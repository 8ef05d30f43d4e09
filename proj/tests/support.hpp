#ifndef SIDONLAB_TESTS_SUPPORT_HPP
#define SIDONLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sidonlab/poly.hpp"
#include "sidonlab/sidon.hpp"

namespace sidonlab::testing {

// Deterministic RNG, identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

  private:
    std::uint64_t state_;
};

inline std::vector<std::uint32_t> random_permutation(std::uint32_t q, SplitMix64& rng) {
    std::vector<std::uint32_t> table(q);
    std::iota(table.begin(), table.end(), 0u);
    for (std::uint32_t i = q; i-- > 1;) std::swap(table[i], table[rng.below(i + 1)]);
    return table;
}

inline Poly random_nonconstant_poly(const FieldPtr& field, SplitMix64& rng) {
    const std::uint32_t q = field->q();
    while (true) {
        std::vector<std::uint32_t> coeffs(q);
        for (auto& c : coeffs) c = rng.below(q);
        Poly p = make_poly(field, coeffs);
        if (p.degree() >= 1) return p;
    }
}

// Quadruple-scan Sidon oracle, O(|S|^4): checks the defining implication
// directly. Independent of the difference-map implementation it validates.
inline bool sidon_by_quadruple_scan(const PointSet& s) {
    const Field& f = *s.field;
    const auto& pts = s.points;
    const std::size_t n = pts.size();
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t i3 = 0; i3 < n; ++i3)
                for (std::size_t i4 = 0; i4 < n; ++i4) {
                    const Point a1 = pts[i1], a2 = pts[i2], a3 = pts[i3], a4 = pts[i4];
                    const bool same_diff = f.sub(a1.x, a2.x) == f.sub(a3.x, a4.x) &&
                                           f.sub(a1.y, a2.y) == f.sub(a3.y, a4.y);
                    if (!same_diff) continue;
                    // {a1, a4} must equal {a2, a3} as unordered pairs
                    const bool unordered_equal =
                        (a1 == a2 && a4 == a3) || (a1 == a3 && a4 == a2);
                    if (!unordered_equal) return false;
                }
    return true;
}

}  // namespace sidonlab::testing

#endif
