#ifndef SIDONLAB_FIELD_HPP
#define SIDONLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sidonlab/errors.hpp"

namespace sidonlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of F_q, identified by its canonical index in [0, q).
// The base-p digits of the index are the coefficients of the residue
// polynomial in t (digit i = coefficient of t^i); for prime fields the
// index is the least nonnegative residue mod p.
struct Elem {
    FieldPtr field;
    std::uint32_t index = 0;
};

// Exact arithmetic in F_p and F_{p^n}. Immutable after construction; all
// operations are pure and safe to call from concurrent workers.
class Field {
  public:
    static constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    // Index-level arithmetic. Indices must be < q.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // DivisionByZero on a == 0

    // Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    // CharTwo unless the characteristic is odd.
    int quadratic_character(std::uint32_t a) const;

    // The nonsquare of least canonical index (deterministic). CharTwo on p = 2.
    std::uint32_t smallest_nonsquare() const;

    // Least-index square root if one exists.
    std::optional<std::uint32_t> sqrt(std::uint32_t a) const;

    std::string to_string() const;  // "p^n/c0,c1,...,cn"

  private:
    friend FieldPtr make_prime_field(std::uint32_t, std::uint64_t);
    friend FieldPtr make_extension_field(std::uint32_t, std::uint32_t,
                                         const std::optional<std::vector<std::uint32_t>>&,
                                         std::uint64_t);
    Field() = default;

    void build_tables();
    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // ascending, length n+1, monic

    // Dense tables for small fields; every group-search kernel stays in
    // this regime, larger fields fall back to direct digit arithmetic.
    bool tables_ = false;
    std::vector<std::uint32_t> mul_tab_;
    std::vector<std::uint32_t> add_tab_;
    std::vector<std::uint32_t> neg_tab_;
    std::vector<std::uint32_t> inv_tab_;
};

FieldPtr make_prime_field(std::uint32_t p, std::uint64_t max_q = Field::kDefaultMaxQ);

// With no modulus given, selects the lexicographically smallest (by
// ascending coefficient sequence) monic irreducible polynomial of degree n,
// decided by exhaustive trial division.
FieldPtr make_extension_field(std::uint32_t p, std::uint32_t n,
                              const std::optional<std::vector<std::uint32_t>>& modulus = {},
                              std::uint64_t max_q = Field::kDefaultMaxQ);

// Accepts "p", "p^n", or "p^n/c0,c1,...,cn".
FieldPtr parse_field(const std::string& text, std::uint64_t max_q = Field::kDefaultMaxQ);

bool is_prime(std::uint64_t v);

inline void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) fail(Errc::FieldMismatch, "operands belong to different fields");
}

inline void require_odd_characteristic(const Field& f) {
    if (f.p() == 2) fail(Errc::CharTwo, "characteristic 2 is rejected here");
}

// Elem-level convenience wrappers.
Elem make_elem(FieldPtr field, std::uint32_t index);
Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem neg(const Elem& a);
Elem mul(const Elem& a, const Elem& b);
Elem pow(const Elem& a, std::uint64_t e);
Elem inv(const Elem& a);
int quadratic_character(const Elem& a);

}  // namespace sidonlab

#endif
