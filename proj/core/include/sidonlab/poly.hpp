#ifndef SIDONLAB_POLY_HPP
#define SIDONLAB_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidonlab/field.hpp"

namespace sidonlab {

// Univariate polynomial over F_q. Coefficients ascending, stored as
// canonical element indices, no trailing zeros (empty = zero polynomial).
// A Poly keeps whatever exponents it was built with; reduce_mod_xq_minus_x
// produces the canonical degree <= q-1 representative of the same function.
struct Poly {
    FieldPtr field;
    std::vector<std::uint32_t> coeffs;

    // degree; -1 for the zero polynomial
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

    bool operator==(const Poly& other) const {
        return *field == *other.field && coeffs == other.coeffs;
    }
};

// The length-q graph of a polynomial function, entry i = P(element i).
struct ValueTable {
    FieldPtr field;
    std::vector<std::uint32_t> values;
};

Poly make_poly(FieldPtr field, std::vector<std::uint32_t> coeffs);
Poly zero_poly(FieldPtr field);
Poly monomial(FieldPtr field, std::uint64_t exponent, std::uint32_t coeff = 1);

// Coefficient-level arithmetic (exact, no reduction mod x^q - x).
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, std::uint32_t c);

std::uint32_t evaluate_index(const Poly& p, std::uint32_t x);
Elem evaluate(const Poly& p, const Elem& x);

ValueTable value_table(const Poly& p);

// Unique degree <= q-1 representative equal to P as a function, by exponent
// folding e -> ((e-1) mod (q-1)) + 1 for e >= q (e = 0 fixed).
Poly reduce_mod_xq_minus_x(const Poly& p);

// Reduced form of P(Q(x)).
Poly compose(const Poly& p, const Poly& q);

// Lagrange interpolation through points with pairwise distinct first
// coordinates; degree < number of points. DuplicateNode otherwise.
Poly interpolate(FieldPtr field, std::span<const std::pair<std::uint32_t, std::uint32_t>> points);
Poly interpolate(const ValueTable& table);

Poly derivative(const Poly& p);

// Largest m with (x - gamma)^m dividing P, by repeated synthetic division.
// ZeroPolynomial if P = 0.
int root_multiplicity(const Poly& p, std::uint32_t gamma);

bool is_permutation(const Poly& p);

// Reduced polynomial inducing the inverse bijection. NotPermutation guard.
Poly inverse_permutation(const Poly& p);

// Polynomial grammar (see README): sums of terms 'c', 'c x^k', 'x^k' with
// optional '*', unary minus folded into the field. Extension fields accept
// bracketed base-p digit lists and bare canonical indices as coefficients.
// Not auto-reduced: exponents >= q are kept.
Poly parse_poly(const std::string& text, FieldPtr field);

// Canonical form: descending powers, coefficients as canonical indices.
std::string to_string(const Poly& p);

}  // namespace sidonlab

#endif
