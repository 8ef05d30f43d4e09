#include "sidonlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace sidonlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::CharTwo: return "CharTwo";
        case Errc::CharAtMostThree: return "CharAtMostThree";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case Errc::DuplicateNode: return "DuplicateNode";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::NotCubic: return "NotCubic";
        case Errc::NotPermutation: return "NotPermutation";
        case Errc::NotSidon: return "NotSidon";
        case Errc::NotPrimeField: return "NotPrimeField";
        case Errc::ZeroC: return "ZeroC";
        case Errc::TooLarge: return "TooLarge";
        case Errc::UnsupportedFormat: return "UnsupportedFormat";
        case Errc::Internal: return "Internal";
    }
    return "Error";
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

constexpr std::uint32_t kTableLimit = 256;

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomial arithmetic over F_p on ascending coefficient vectors.
Coeffs fp_trim(Coeffs c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Coeffs fp_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return fp_trim(std::move(r));
}

// Remainder of a by monic b.
Coeffs fp_rem(Coeffs a, const Coeffs& b, std::uint32_t p) {
    a = fp_trim(std::move(a));
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t s = std::uint64_t{lead} * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - s) % p);
            }
        }
        a.pop_back();
        a = fp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool fp_irreducible(const Coeffs& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        Coeffs div(d + 1, 0);
        div[d] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (fp_rem(m, div, p).empty()) return false;
        }
    }
    return true;
}

Coeffs index_to_digits(std::uint32_t idx, std::uint32_t p, std::uint32_t n) {
    Coeffs d(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

std::uint32_t digits_to_index(const Coeffs& d, std::uint32_t p, std::uint32_t n) {
    std::uint32_t idx = 0;
    for (std::uint32_t i = n; i-- > 0;) idx = idx * p + (i < d.size() ? d[i] : 0);
    return idx;
}

}  // namespace

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (tables_) return add_tab_[std::size_t{a} * q_ + b];
    if (n_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t idx = 0, scale = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        idx += s * scale;
        scale *= p_;
    }
    return idx;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (tables_) return neg_tab_[a];
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t idx = 0, scale = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        std::uint32_t da = a % p_;
        a /= p_;
        idx += (da == 0 ? 0 : p_ - da) * scale;
        scale *= p_;
    }
    return idx;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_direct(std::uint32_t a, std::uint32_t b) const {
    if (n_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    Coeffs da = index_to_digits(a, p_, n_);
    Coeffs db = index_to_digits(b, p_, n_);
    Coeffs prod = fp_rem(fp_mul(da, db, p_), modulus_, p_);
    return digits_to_index(prod, p_, n_);
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (tables_) return mul_tab_[std::size_t{a} * q_ + b];
    return mul_direct(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (tables_) return inv_tab_[a];
    return pow(a, std::uint64_t{q_} - 2);
}

int Field::quadratic_character(std::uint32_t a) const {
    require_odd_characteristic(*this);
    if (a == 0) return 0;
    return pow(a, (std::uint64_t{q_} - 1) / 2) == 1 ? 1 : -1;
}

std::uint32_t Field::smallest_nonsquare() const {
    require_odd_characteristic(*this);
    for (std::uint32_t a = 2; a < q_; ++a)
        if (quadratic_character(a) == -1) return a;
    fail(Errc::Internal, "no nonsquare found");
}

std::optional<std::uint32_t> Field::sqrt(std::uint32_t a) const {
    for (std::uint32_t z = 0; z < q_; ++z)
        if (mul(z, z) == a) return z;
    return std::nullopt;
}

void Field::build_tables() {
    if (q_ > kTableLimit) return;
    add_tab_.resize(std::size_t{q_} * q_);
    mul_tab_.resize(std::size_t{q_} * q_);
    neg_tab_.resize(q_);
    inv_tab_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        neg_tab_[a] = neg(a);  // digit path; tables_ still false
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_tab_[std::size_t{a} * q_ + b] = add(a, b);
            mul_tab_[std::size_t{a} * q_ + b] = mul_direct(a, b);
        }
    }
    tables_ = true;
    for (std::uint32_t a = 0; a < q_; ++a)
        inv_tab_[a] = a == 0 ? 0 : pow(a, std::uint64_t{q_} - 2);
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << p_ << '^' << n_ << '/';
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

FieldPtr make_prime_field(std::uint32_t p, std::uint64_t max_q) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p > max_q) fail(Errc::TooLarge, "q exceeds the configured bound");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = 1;
    f->q_ = p;
    f->modulus_ = {0, 1};  // t
    f->build_tables();
    return f;
}

FieldPtr make_extension_field(std::uint32_t p, std::uint32_t n,
                              const std::optional<std::vector<std::uint32_t>>& modulus,
                              std::uint64_t max_q) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::DegreeOutOfRange, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > max_q) fail(Errc::TooLarge, "q exceeds the configured bound");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = static_cast<std::uint32_t>(q);

    if (n == 1 && !modulus) {
        f->modulus_ = {0, 1};
    } else if (modulus) {
        const auto& m = *modulus;
        if (m.size() != n + 1 || m.back() != 1)
            fail(Errc::NotIrreducible, "modulus must be monic of degree n");
        for (auto c : m)
            if (c >= p) fail(Errc::CoefficientOutOfRange, "modulus coefficient not in [0, p)");
        if (!fp_irreducible(m, p))
            fail(Errc::NotIrreducible, "supplied modulus factors over F_p");
        f->modulus_ = m;
    } else {
        // Smallest monic irreducible in ascending-sequence lexicographic
        // order: c0 is the most significant position.
        std::vector<std::uint32_t> m(n + 1, 0);
        m[n] = 1;
        bool found = false;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < n; ++i) count *= p;
        for (std::uint64_t code = 0; code < count && !found; ++code) {
            std::uint64_t rest = code;
            for (std::uint32_t i = n; i-- > 0;) {
                m[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (fp_irreducible(m, p)) found = true;
        }
        if (!found) fail(Errc::Internal, "no irreducible polynomial found");
        f->modulus_ = m;
    }
    f->build_tables();
    return f;
}

FieldPtr parse_field(const std::string& text, std::uint64_t max_q) {
    auto bad = [&](const std::string& msg) -> void {
        throw SyntaxError("field spec '" + text + "': " + msg, 0);
    };
    std::size_t caret = text.find('^');
    std::size_t slash = text.find('/');
    auto parse_u32 = [&](const std::string& s) -> std::uint32_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            bad("expected an unsigned integer, got '" + s + "'");
        unsigned long long v = std::stoull(s);
        if (v > 0xffffffffull) bad("number out of range");
        return static_cast<std::uint32_t>(v);
    };
    if (caret == std::string::npos) {
        if (slash != std::string::npos) bad("modulus requires the p^n form");
        return make_prime_field(parse_u32(text), max_q);
    }
    std::uint32_t p = parse_u32(text.substr(0, caret));
    std::string rest = text.substr(caret + 1);
    std::optional<std::vector<std::uint32_t>> modulus;
    std::uint32_t n;
    if (slash != std::string::npos) {
        n = parse_u32(text.substr(caret + 1, slash - caret - 1));
        std::vector<std::uint32_t> coeffs;
        std::string tail = text.substr(slash + 1);
        std::size_t pos = 0;
        while (pos <= tail.size()) {
            std::size_t comma = tail.find(',', pos);
            std::string tok = tail.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            coeffs.push_back(parse_u32(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        modulus = std::move(coeffs);
    } else {
        n = parse_u32(rest);
    }
    return make_extension_field(p, n, modulus, max_q);
}

Elem make_elem(FieldPtr field, std::uint32_t index) {
    if (index >= field->q()) fail(Errc::CoefficientOutOfRange, "element index out of range");
    return Elem{std::move(field), index};
}

Elem add(const Elem& a, const Elem& b) {
    require_same_field(*a.field, *b.field);
    return Elem{a.field, a.field->add(a.index, b.index)};
}
Elem sub(const Elem& a, const Elem& b) {
    require_same_field(*a.field, *b.field);
    return Elem{a.field, a.field->sub(a.index, b.index)};
}
Elem neg(const Elem& a) { return Elem{a.field, a.field->neg(a.index)}; }
Elem mul(const Elem& a, const Elem& b) {
    require_same_field(*a.field, *b.field);
    return Elem{a.field, a.field->mul(a.index, b.index)};
}
Elem pow(const Elem& a, std::uint64_t e) { return Elem{a.field, a.field->pow(a.index, e)}; }
Elem inv(const Elem& a) { return Elem{a.field, a.field->inv(a.index)}; }
int quadratic_character(const Elem& a) { return a.field->quadratic_character(a.index); }

}  // namespace sidonlab
