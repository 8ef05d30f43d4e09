#include "sidonlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sidonlab {

namespace {

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly make_poly(FieldPtr field, std::vector<std::uint32_t> coeffs) {
    for (auto c : coeffs)
        if (c >= field->q()) fail(Errc::CoefficientOutOfRange, "coefficient index out of range");
    trim(coeffs);
    return Poly{std::move(field), std::move(coeffs)};
}

Poly zero_poly(FieldPtr field) { return Poly{std::move(field), {}}; }

Poly monomial(FieldPtr field, std::uint64_t exponent, std::uint32_t coeff) {
    if (coeff == 0) return zero_poly(std::move(field));
    std::vector<std::uint32_t> c(exponent + 1, 0);
    c[exponent] = coeff;
    return make_poly(std::move(field), std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
    require_same_field(*a.field, *b.field);
    const Field& f = *a.field;
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint32_t va = i < a.coeffs.size() ? a.coeffs[i] : 0;
        std::uint32_t vb = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = f.add(va, vb);
    }
    trim(c);
    return Poly{a.field, std::move(c)};
}

Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_field(*a.field, *b.field);
    const Field& f = *a.field;
    std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint32_t va = i < a.coeffs.size() ? a.coeffs[i] : 0;
        std::uint32_t vb = i < b.coeffs.size() ? b.coeffs[i] : 0;
        c[i] = f.sub(va, vb);
    }
    trim(c);
    return Poly{a.field, std::move(c)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_field(*a.field, *b.field);
    if (a.coeffs.empty() || b.coeffs.empty()) return zero_poly(a.field);
    const Field& f = *a.field;
    std::vector<std::uint32_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    trim(c);
    return Poly{a.field, std::move(c)};
}

Poly poly_scale(const Poly& a, std::uint32_t s) {
    const Field& f = *a.field;
    std::vector<std::uint32_t> c(a.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.coeffs[i], s);
    trim(c);
    return Poly{a.field, std::move(c)};
}

std::uint32_t evaluate_index(const Poly& p, std::uint32_t x) {
    const Field& f = *p.field;
    std::uint32_t acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs[i]);
    return acc;
}

Elem evaluate(const Poly& p, const Elem& x) {
    require_same_field(*p.field, *x.field);
    return Elem{p.field, evaluate_index(p, x.index)};
}

ValueTable value_table(const Poly& p) {
    const std::uint32_t q = p.field->q();
    std::vector<std::uint32_t> values(q);
    for (std::uint32_t x = 0; x < q; ++x) values[x] = evaluate_index(p, x);
    return ValueTable{p.field, std::move(values)};
}

Poly reduce_mod_xq_minus_x(const Poly& p) {
    const Field& f = *p.field;
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> c(q, 0);
    for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
        if (p.coeffs[e] == 0) continue;
        std::size_t target = e;
        if (e >= q) target = (e - 1) % (q - 1) + 1;
        c[target] = f.add(c[target], p.coeffs[e]);
    }
    trim(c);
    return Poly{p.field, std::move(c)};
}

Poly compose(const Poly& p, const Poly& q) {
    require_same_field(*p.field, *q.field);
    const Poly pr = reduce_mod_xq_minus_x(p);
    const Poly qr = reduce_mod_xq_minus_x(q);
    Poly acc = zero_poly(p.field);
    for (std::size_t i = pr.coeffs.size(); i-- > 0;) {
        acc = reduce_mod_xq_minus_x(poly_mul(acc, qr));
        if (pr.coeffs[i] != 0)
            acc = poly_add(acc, Poly{p.field, {pr.coeffs[i]}});
    }
    return acc;
}

Poly interpolate(FieldPtr field,
                 std::span<const std::pair<std::uint32_t, std::uint32_t>> points) {
    const Field& f = *field;
    const std::size_t k = points.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (points[i].first == points[j].first)
                fail(Errc::DuplicateNode, "interpolation nodes must be distinct");

    std::vector<std::uint32_t> acc;  // running sum
    for (std::size_t i = 0; i < k; ++i) {
        // Lagrange basis numerator prod_{j != i} (x - x_j), built dense.
        std::vector<std::uint32_t> num{1};
        std::uint32_t den = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<std::uint32_t> next(num.size() + 1, 0);
            const std::uint32_t mxj = f.neg(points[j].first);
            for (std::size_t d = 0; d < num.size(); ++d) {
                next[d] = f.add(next[d], f.mul(num[d], mxj));
                next[d + 1] = f.add(next[d + 1], num[d]);
            }
            num = std::move(next);
            den = f.mul(den, f.sub(points[i].first, points[j].first));
        }
        const std::uint32_t scale = f.mul(points[i].second, f.inv(den));
        if (acc.size() < num.size()) acc.resize(num.size(), 0);
        for (std::size_t d = 0; d < num.size(); ++d)
            acc[d] = f.add(acc[d], f.mul(num[d], scale));
    }
    trim(acc);
    return Poly{std::move(field), std::move(acc)};
}

Poly interpolate(const ValueTable& table) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts(table.values.size());
    for (std::uint32_t i = 0; i < table.values.size(); ++i) pts[i] = {i, table.values[i]};
    return interpolate(table.field, pts);
}

Poly derivative(const Poly& p) {
    const Field& f = *p.field;
    if (p.coeffs.size() <= 1) return zero_poly(p.field);
    std::vector<std::uint32_t> c(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
        // the integer i embeds into the prime subfield as index i mod p
        const std::uint32_t m = static_cast<std::uint32_t>(i % f.p());
        c[i - 1] = f.mul(p.coeffs[i], m);
    }
    trim(c);
    return Poly{p.field, std::move(c)};
}

int root_multiplicity(const Poly& p, std::uint32_t gamma) {
    if (p.coeffs.empty()) fail(Errc::ZeroPolynomial, "root multiplicity of the zero polynomial");
    const Field& f = *p.field;
    std::vector<std::uint32_t> c = p.coeffs;
    int m = 0;
    while (!c.empty()) {
        // Synthetic division by (x - gamma): q[i-1] = c[i] + gamma * q[i],
        // remainder c[0] + gamma * q[0].
        std::vector<std::uint32_t> quot(c.size() - 1, 0);
        std::uint32_t carry = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            carry = f.add(c[i], f.mul(carry, gamma));
            quot[i - 1] = carry;
        }
        std::uint32_t rem = f.add(c[0], f.mul(carry, gamma));
        if (rem != 0) break;
        c = std::move(quot);
        trim(c);
        ++m;
    }
    return m;
}

bool is_permutation(const Poly& p) {
    const std::uint32_t q = p.field->q();
    std::vector<bool> seen(q, false);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint32_t v = evaluate_index(p, x);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Poly inverse_permutation(const Poly& p) {
    const std::uint32_t q = p.field->q();
    std::vector<std::uint32_t> inverse(q, 0);
    std::vector<bool> seen(q, false);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint32_t v = evaluate_index(p, x);
        if (seen[v]) fail(Errc::NotPermutation, "polynomial is not a bijection");
        seen[v] = true;
        inverse[v] = x;
    }
    return interpolate(ValueTable{p.field, std::move(inverse)});
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

class Parser {
  public:
    Parser(const std::string& text, FieldPtr field)
        : text_(text), field_(std::move(field)) {}

    Poly run() {
        std::vector<std::uint32_t> coeffs;
        const Field& f = *field_;
        skip_ws();
        bool negative = accept_sign();
        while (true) {
            Term t = parse_term();
            std::uint32_t value = negative ? f.neg(t.coeff) : t.coeff;
            if (coeffs.size() < t.exponent + 1) coeffs.resize(t.exponent + 1, 0);
            coeffs[t.exponent] = f.add(coeffs[t.exponent], value);
            skip_ws();
            if (pos_ == text_.size()) break;
            char c = text_[pos_];
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else throw SyntaxError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
        }
        trim(coeffs);
        return Poly{field_, std::move(coeffs)};
    }

  private:
    struct Term {
        std::uint32_t coeff;
        std::uint64_t exponent;
    };

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept_sign() {
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        if (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            skip_ws();
        }
        return false;
    }

    std::uint64_t parse_uint() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected a number", pos_);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::uint64_t{1} << 40))
                throw SyntaxError("number too large", pos_);
            ++pos_;
        }
        return v;
    }

    // Integer literals are canonical indices. For prime fields any integer
    // is folded mod p; for extension fields the index must be < q.
    std::uint32_t parse_scalar() {
        const Field& f = *field_;
        if (text_[pos_] == '[') {
            std::size_t open = pos_;
            ++pos_;
            std::vector<std::uint32_t> digits;
            while (true) {
                skip_ws();
                std::uint64_t d = parse_uint();
                if (d >= f.p())
                    fail(Errc::CoefficientOutOfRange, "digit must be in [0, p)");
                digits.push_back(static_cast<std::uint32_t>(d));
                skip_ws();
                if (pos_ >= text_.size()) throw SyntaxError("unterminated '['", open);
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ']') {
                    ++pos_;
                    break;
                }
                throw SyntaxError("expected ',' or ']'", pos_);
            }
            if (digits.size() > f.n())
                fail(Errc::CoefficientOutOfRange, "too many digits for this field");
            // digits are little-endian: digit i multiplies t^i
            std::uint32_t idx = 0;
            std::uint32_t scale = 1;
            for (std::size_t i = 0; i < digits.size(); ++i) {
                idx += digits[i] * scale;
                scale *= f.p();
            }
            return idx;
        }
        std::uint64_t v = parse_uint();
        if (f.n() == 1) return static_cast<std::uint32_t>(v % f.p());
        if (v >= f.q()) fail(Errc::CoefficientOutOfRange, "index must be < q");
        return static_cast<std::uint32_t>(v);
    }

    Term parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("expected a term", pos_);
        const char c = text_[pos_];
        std::uint32_t coeff = 1;
        bool saw_coeff = false;
        if (c == '[' || std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_scalar();
            saw_coeff = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != 'x')
                    throw SyntaxError("expected 'x' after '*'", pos_);
            }
        }
        if (pos_ < text_.size() && text_[pos_] == 'x') {
            ++pos_;
            std::uint64_t exponent = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                exponent = parse_uint();
            }
            return Term{coeff, exponent};
        }
        if (!saw_coeff) throw SyntaxError("expected a coefficient or 'x'", pos_);
        return Term{coeff, 0};
    }

    const std::string& text_;
    FieldPtr field_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, FieldPtr field) {
    return Parser(text, std::move(field)).run();
}

std::string to_string(const Poly& p) {
    if (p.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        const std::uint32_t c = p.coeffs[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace sidonlab
