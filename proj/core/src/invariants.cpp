#include "sidonlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sidonlab/parallel.hpp"

namespace sidonlab {

namespace {

Poly reduced_nonconstant(const Poly& p, bool* was_reduced = nullptr) {
    Poly red = reduce_mod_xq_minus_x(p);
    if (was_reduced) *was_reduced = !(red == p);
    if (red.degree() < 1)
        fail(Errc::ConstantPolynomial, "operation requires a nonconstant polynomial");
    return red;
}

std::uint32_t coeff_at(const Poly& p, std::size_t i) {
    return i < p.coeffs.size() ? p.coeffs[i] : 0;
}

Poly affine(FieldPtr field, std::uint32_t scale, std::uint32_t shift) {
    return make_poly(std::move(field), {shift, scale});
}

// Inverse of y -> scale*y + shift.
Poly affine_inverse(const Poly& a) {
    const Field& f = *a.field;
    if (a.degree() != 1) fail(Errc::Internal, "affine_inverse needs degree 1");
    const std::uint32_t s = f.inv(coeff_at(a, 1));
    return affine(a.field, s, f.neg(f.mul(s, coeff_at(a, 0))));
}

}  // namespace

ValueProfile value_profile(const Poly& p) {
    const Field& f = *p.field;
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> v(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++v[evaluate_index(p, x)];
    std::vector<std::uint64_t> d(q, 0);
    for (std::uint32_t r = 0; r < q; ++r) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < q; ++i) acc += std::uint64_t{v[i]} * v[f.add(i, r)];
        d[r] = acc;
    }
    return ValueProfile{p.field, std::move(v), std::move(d)};
}

std::uint64_t f_invariant(const Poly& p, std::uint32_t n) {
    if (n < 1) fail(Errc::DegreeOutOfRange, "f requires n >= 1");
    const Poly red = reduced_nonconstant(p);
    const Field& f = *red.field;
    const std::uint32_t q = f.q();
    const ValueTable tab = value_table(red);

    std::vector<std::uint32_t> v(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++v[tab.values[x]];

    std::uint64_t count = 0;
    for (std::uint32_t gamma = 0; gamma < q; ++gamma) {
        if (v[gamma] == 0) continue;  // no roots at all
        Poly shifted = red;
        shifted.coeffs[0] = f.sub(coeff_at(red, 0), gamma);
        int best = 0;
        for (std::uint32_t x = 0; x < q; ++x) {
            if (tab.values[x] != gamma) continue;
            best = std::max(best, root_multiplicity(shifted, x));
        }
        if (best >= static_cast<int>(n)) ++count;
    }
    return count;
}

std::uint64_t g_invariant(const Poly& p, std::uint32_t n) {
    const Poly red = reduced_nonconstant(p);
    const std::uint32_t q = red.field->q();
    std::vector<std::uint32_t> v(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++v[evaluate_index(red, x)];
    std::uint64_t count = 0;
    for (std::uint32_t gamma = 0; gamma < q; ++gamma)
        if (v[gamma] == n) ++count;
    return count;
}

InvariantSignature invariant_signature(const Poly& p) {
    const Poly red = reduced_nonconstant(p);
    const std::uint32_t q = red.field->q();
    const std::size_t deg = static_cast<std::size_t>(red.degree());

    InvariantSignature sig;
    sig.v_multiset.assign(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++sig.v_multiset[evaluate_index(red, x)];
    std::sort(sig.v_multiset.begin(), sig.v_multiset.end());

    sig.f.reserve(deg);
    for (std::uint32_t n = 1; n <= deg; ++n) sig.f.push_back(f_invariant(red, n));
    sig.g.reserve(deg + 1);
    for (std::uint32_t n = 0; n <= deg; ++n) sig.g.push_back(g_invariant(red, n));
    return sig;
}

// ---------------------------------------------------------------------------
// Equivalence
// ---------------------------------------------------------------------------

namespace {

// g over the common range n = 0..q (beyond the degree everything is 0).
std::vector<std::uint64_t> g_vector(const Poly& red) {
    const std::uint32_t q = red.field->q();
    std::vector<std::uint32_t> v(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++v[evaluate_index(red, x)];
    std::vector<std::uint64_t> g(q + 1, 0);
    for (std::uint32_t gamma = 0; gamma < q; ++gamma) ++g[v[gamma]];
    return g;
}

struct CertifyOutcome {
    bool found = false;
    std::vector<std::uint32_t> T;
    std::vector<std::uint32_t> R;
};

// Scan inner permutations T with T(x_0) = t0 in lexicographic table order.
CertifyOutcome certify_branch(const Field& f, const std::vector<std::uint32_t>& p_tab,
                              const std::vector<std::uint32_t>& p2_tab, std::uint32_t t0,
                              const std::atomic<std::size_t>& cutoff, std::size_t branch) {
    const std::uint32_t q = f.q();
    CertifyOutcome out;
    std::vector<std::uint32_t> rest;
    rest.reserve(q - 1);
    for (std::uint32_t v = 0; v < q; ++v)
        if (v != t0) rest.push_back(v);

    std::vector<std::uint32_t> r_of(q), t_used(q);
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::uint64_t iter = 0;
    do {
        if ((++iter & 0x3ff) == 0 && cutoff.load(std::memory_order_relaxed) < branch) return out;
        std::fill(r_of.begin(), r_of.end(), kNone);
        std::fill(t_used.begin(), t_used.end(), 0);
        bool ok = true;
        for (std::uint32_t x = 0; x < q && ok; ++x) {
            const std::uint32_t tx = x == 0 ? t0 : rest[x - 1];
            const std::uint32_t source = p_tab[tx];
            const std::uint32_t target = p2_tab[x];
            if (r_of[source] == kNone) {
                if (t_used[target]) {
                    ok = false;  // not injective
                } else {
                    r_of[source] = target;
                    t_used[target] = 1;
                }
            } else if (r_of[source] != target) {
                ok = false;  // not well-defined
            }
        }
        if (!ok) continue;
        // extend: unused sources to unused targets in canonical order
        std::uint32_t next_target = 0;
        std::vector<std::uint32_t> R(q);
        for (std::uint32_t s = 0; s < q; ++s) {
            if (r_of[s] != kNone) {
                R[s] = r_of[s];
                continue;
            }
            while (t_used[next_target]) ++next_target;
            R[s] = next_target;
            t_used[next_target] = 1;
        }
        out.found = true;
        out.R = std::move(R);
        out.T.assign(1, t0);
        out.T.insert(out.T.end(), rest.begin(), rest.end());
        return out;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

EquivalenceResult are_equivalent(const Poly& pa, const Poly& pb, EquivMode mode, unsigned jobs) {
    require_same_field(*pa.field, *pb.field);
    bool ra = false, rb = false;
    const Poly a = reduced_nonconstant(pa, &ra);
    const Poly b = reduced_nonconstant(pb, &rb);
    const Field& f = *a.field;
    const std::uint32_t q = f.q();

    EquivalenceResult result;
    result.inputs_reduced = ra || rb;

    if (mode == EquivMode::RefuteOnly) {
        const auto ga = g_vector(a), gb = g_vector(b);
        for (std::uint32_t n = 0; n <= q; ++n) {
            if (ga[n] != gb[n]) {
                std::ostringstream os;
                os << "g(.," << n << ") differs: " << ga[n] << " vs " << gb[n];
                result.status = EquivStatus::NotEquivalent;
                result.refuting_invariant = os.str();
                return result;
            }
        }
        result.status = EquivStatus::Inconclusive;
        const InvariantSignature sa = invariant_signature(a);
        const InvariantSignature sb = invariant_signature(b);
        result.note = sa == sb ? "signatures match"
                               : "preimage-count invariants match; multiplicity counts (f) "
                                 "differ but cannot refute equivalence of reduced functions";
        return result;
    }

    if (q > 7) fail(Errc::TooLarge, "certificate search requires q <= 7");

    const std::vector<std::uint32_t> p_tab = value_table(a).values;
    const std::vector<std::uint32_t> p2_tab = value_table(b).values;

    std::vector<CertifyOutcome> outcomes(q);
    const std::size_t winner = find_first_branch(
        q, jobs, [&](std::size_t t0, const std::atomic<std::size_t>& cutoff) {
            outcomes[t0] = certify_branch(f, p_tab, p2_tab, static_cast<std::uint32_t>(t0),
                                          cutoff, t0);
            return outcomes[t0].found;
        });

    if (winner == q) {
        result.status = EquivStatus::NotEquivalent;
        result.refuting_invariant = "exhausted all inner permutations without a certificate";
        return result;
    }

    const Poly T = interpolate(ValueTable{a.field, outcomes[winner].T});
    const Poly R = interpolate(ValueTable{a.field, outcomes[winner].R});
    if (!is_permutation(R) || !is_permutation(T) || !(compose(R, compose(a, T)) == b))
        fail(Errc::Internal, "equivalence certificate failed verification");
    result.status = EquivStatus::Equivalent;
    result.certificate = std::make_pair(R, T);
    return result;
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

LowDegreeNormalization normalize_low_degree(const Poly& p) {
    require_odd_characteristic(*p.field);
    const Poly red = reduced_nonconstant(p);
    const Field& f = *red.field;
    const std::int64_t deg = red.degree();
    if (deg != 1 && deg != 2)
        fail(Errc::DegreeOutOfRange, "normalization covers degrees 1 and 2");

    LowDegreeNormalization out;
    if (deg == 1) {
        // a x + b: post = a^{-1}(y - b), pre = x
        const std::uint32_t a = coeff_at(red, 1), b = coeff_at(red, 0);
        const std::uint32_t ai = f.inv(a);
        out.cls = LowDegreeClass::Linear;
        out.post = affine(red.field, ai, f.neg(f.mul(ai, b)));
        out.pre = monomial(red.field, 1);
        if (!(compose(out.post, compose(red, out.pre)) == monomial(red.field, 1)))
            fail(Errc::Internal, "linear normalization failed verification");
        return out;
    }
    // a x^2 + b x + c: complete the square; pre = x - b/(2a),
    // post = a^{-1}(y - constant of the shifted polynomial)
    const std::uint32_t a = coeff_at(red, 2), b = coeff_at(red, 1);
    const std::uint32_t inv2a = f.inv(f.mul(2 % f.p(), a));
    const std::uint32_t shift = f.neg(f.mul(b, inv2a));
    out.cls = LowDegreeClass::Quadratic;
    out.pre = affine(red.field, 1, shift);
    const Poly shifted = compose(red, out.pre);  // a x^2 + const
    const std::uint32_t ai = f.inv(a);
    out.post = affine(red.field, ai, f.neg(f.mul(ai, coeff_at(shifted, 0))));
    if (!(compose(out.post, compose(red, out.pre)) == monomial(red.field, 2)))
        fail(Errc::Internal, "quadratic normalization failed verification");
    return out;
}

CubicClassification normalize_cubic(const Poly& p) {
    const Field& f = *p.field;
    if (f.p() <= 3) fail(Errc::CharAtMostThree, "cubic normalization requires characteristic > 3");
    const Poly red = reduced_nonconstant(p);
    if (red.degree() != 3) fail(Errc::NotCubic, "expected a cubic after reduction");

    const std::uint32_t a = coeff_at(red, 3);
    const std::uint32_t inv_a = f.inv(a);
    const std::uint32_t e = f.mul(coeff_at(red, 2), inv_a);
    const std::uint32_t inv3 = f.inv(3 % f.p());

    CubicClassification out;
    out.pre = affine(red.field, 1, f.neg(f.mul(e, inv3)));
    const Poly depressed = compose(poly_scale(red, inv_a), out.pre);
    if (coeff_at(depressed, 2) != 0 || coeff_at(depressed, 3) != 1)
        fail(Errc::Internal, "depression did not remove the quadratic term");
    const std::uint32_t g2 = coeff_at(depressed, 0);
    out.post = affine(red.field, inv_a, f.neg(g2));
    out.w = f.neg(coeff_at(depressed, 1));

    const Poly target = make_poly(red.field, {0, f.neg(out.w), 0, 1});  // x^3 - w x
    if (!(compose(out.post, compose(red, out.pre)) == target))
        fail(Errc::Internal, "cubic normalization failed verification");

    const int eta = f.quadratic_character(out.w);
    out.cls = eta == 0 ? CubicClass::Cube
                       : (eta == 1 ? CubicClass::UnitTwist : CubicClass::NonsquareTwist);

    if (out.cls == CubicClass::NonsquareTwist) {
        // x^3 - w x ~ x^3 - k x through x -> r x and y -> r^{-3} y with
        // r^2 = w / k (both nonsquares, so the ratio is a square).
        const std::uint32_t k = f.smallest_nonsquare();
        const auto r = f.sqrt(f.mul(out.w, f.inv(k)));
        if (!r) fail(Errc::Internal, "nonsquare ratio has no square root");
        const Poly pre2 = affine(red.field, *r, 0);
        const Poly post2 = affine(red.field, f.inv(f.pow(*r, 3)), 0);
        const Poly post_k = compose(post2, out.post);
        const Poly pre_k = compose(out.pre, pre2);
        const Poly target_k = make_poly(red.field, {0, f.neg(k), 0, 1});
        if (!(compose(post_k, compose(red, pre_k)) == target_k))
            fail(Errc::Internal, "canonical nonsquare map failed verification");
        out.canonical_maps = std::make_pair(post_k, pre_k);
    }
    return out;
}

const char* to_string(CubicClass c) {
    switch (c) {
        case CubicClass::Cube: return "cube";
        case CubicClass::UnitTwist: return "unit-twist";
        case CubicClass::NonsquareTwist: return "nonsquare-twist";
    }
    return "?";
}

const char* to_string(EquivStatus s) {
    switch (s) {
        case EquivStatus::NotEquivalent: return "not-equivalent";
        case EquivStatus::Equivalent: return "equivalent";
        case EquivStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace sidonlab
