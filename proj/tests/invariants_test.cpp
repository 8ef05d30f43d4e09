#include "sidonlab/invariants.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

using namespace sidonlab;
using sidonlab::testing::SplitMix64;
using sidonlab::testing::random_nonconstant_poly;
using sidonlab::testing::random_permutation;

namespace {
const FieldPtr f5 = make_prime_field(5);
const FieldPtr f7 = make_prime_field(7);

// Direct O(q^2) difference count, independent of the convolution identity.
std::vector<std::uint64_t> direct_difference_counts(const Poly& p) {
    const Field& f = *p.field;
    const std::uint32_t q = f.q();
    const ValueTable tab = value_table(p);
    std::vector<std::uint64_t> d(q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            ++d[f.sub(tab.values[a], tab.values[b])];
    return d;
}
}  // namespace

TEST(ValueProfile, SquareOverF5) {
    const ValueProfile vp = value_profile(parse_poly("x^2", f5));
    EXPECT_EQ(vp.v, (std::vector<std::uint32_t>{1, 2, 0, 0, 2}));
    EXPECT_EQ(vp.d[0], 9u);  // = 2q - 1, the equality case
}

TEST(ValueProfile, IdentityIsFlat) {
    for (const FieldPtr& f : {f5, f7, make_extension_field(3, 2)}) {
        const ValueProfile vp = value_profile(parse_poly("x", f));
        for (std::uint32_t r = 0; r < f->q(); ++r) {
            EXPECT_EQ(vp.v[r], 1u);
            EXPECT_EQ(vp.d[r], f->q());
        }
    }
}

TEST(ValueProfile, CubeOverF7) {
    const ValueProfile vp = value_profile(parse_poly("x^3", f7));
    EXPECT_EQ(vp.v[0], 1u);
    EXPECT_EQ(vp.v[1], 3u);
    EXPECT_EQ(vp.v[6], 3u);
    EXPECT_EQ(vp.d[0], 19u);  // 1 + 3^2 * (q-1)/3
}

TEST(ValueProfile, SumsAndConvolutionIdentity) {
    SplitMix64 rng(31);
    for (const FieldPtr& f : {f5, f7, make_extension_field(3, 2)}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Poly p = random_nonconstant_poly(f, rng);
            const ValueProfile vp = value_profile(p);
            std::uint64_t v_sum = 0, d_sum = 0;
            for (std::uint32_t r = 0; r < f->q(); ++r) {
                v_sum += vp.v[r];
                d_sum += vp.d[r];
            }
            EXPECT_EQ(v_sum, f->q());
            EXPECT_EQ(d_sum, std::uint64_t{f->q()} * f->q());
            EXPECT_EQ(vp.d, direct_difference_counts(p));
            EXPECT_GE(vp.d[0], f->q());
            EXPECT_EQ(vp.d[0] == f->q(), is_permutation(p));
        }
    }
}

TEST(Invariants, FExamples) {
    EXPECT_EQ(f_invariant(parse_poly("x^3", f5), 3), 1u);
    EXPECT_EQ(f_invariant(parse_poly("x^3-x", f5), 3), 0u);
    EXPECT_EQ(f_invariant(parse_poly("x^3-x", f7), 3), 0u);
    EXPECT_EQ(f_invariant(parse_poly("x", f5), 1), 5u);
    EXPECT_THROW(f_invariant(parse_poly("3", f5), 1), Error);
    EXPECT_THROW(f_invariant(parse_poly("x", f5), 0), Error);
}

TEST(Invariants, GExamples) {
    EXPECT_EQ(g_invariant(parse_poly("x^2", f5), 2), 2u);
    EXPECT_EQ(g_invariant(parse_poly("x", f5), 2), 0u);
    EXPECT_EQ(g_invariant(parse_poly("x", f7), 2), 0u);
    EXPECT_EQ(g_invariant(parse_poly("x^3-x", f5), 3), 1u);
}

TEST(Invariants, GSumIdentities) {
    // sum_n g(P,n) = q and sum_n n*g(P,n) = q
    SplitMix64 rng(37);
    for (const FieldPtr& f : {f5, f7}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Poly p = random_nonconstant_poly(f, rng);
            std::uint64_t total = 0, weighted = 0;
            for (std::uint32_t n = 0; n <= f->q(); ++n) {
                const std::uint64_t g = g_invariant(p, n);
                total += g;
                weighted += std::uint64_t{n} * g;
            }
            EXPECT_EQ(total, f->q());
            EXPECT_EQ(weighted, f->q());
        }
    }
}

TEST(Invariants, GInvariantUnderComposition) {
    // g is a function-level invariant: it survives composition with any
    // permutation polynomials even after reduction mod x^q - x.
    SplitMix64 rng(41);
    for (const FieldPtr& f : {f5, f7, make_extension_field(3, 2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Poly p = random_nonconstant_poly(f, rng);
            const Poly r = interpolate(ValueTable{f, random_permutation(f->q(), rng)});
            const Poly t = interpolate(ValueTable{f, random_permutation(f->q(), rng)});
            const Poly composite = compose(r, compose(p, t));
            for (std::uint32_t n = 0; n < f->q(); ++n)
                ASSERT_EQ(g_invariant(p, n), g_invariant(composite, n));
        }
    }
}

TEST(Invariants, FInvariantUnderAffineMaps) {
    // f survives affine pre/post composition (degrees stay below q, no
    // folding happens, multiplicities transform exactly).
    SplitMix64 rng(43);
    for (const FieldPtr& f : {f5, f7}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Poly p = random_nonconstant_poly(f, rng);
            const std::uint32_t a1 = 1 + rng.below(f->q() - 1);
            const std::uint32_t a2 = 1 + rng.below(f->q() - 1);
            const Poly r = make_poly(f, {rng.below(f->q()), a1});
            const Poly t = make_poly(f, {rng.below(f->q()), a2});
            const Poly composite = compose(r, compose(p, t));
            for (std::uint32_t n = 1; n < f->q(); ++n)
                ASSERT_EQ(f_invariant(p, n), f_invariant(composite, n));
        }
    }
}

TEST(Invariants, FNotPreservedByGeneralPermutations) {
    // Reduction mod x^q - x changes root multiplicities: composing x^3 with
    // the cubing permutation gives x^9 = x as a function, yet f(x^3,2) = 1
    // while f(x,2) = 0. This is why refutation rests on g alone.
    const Poly cube = parse_poly("x^3", f5);
    const Poly composite = compose(cube, cube);
    EXPECT_EQ(composite, parse_poly("x", f5));
    EXPECT_EQ(f_invariant(cube, 2), 1u);
    EXPECT_EQ(f_invariant(composite, 2), 0u);
}

TEST(Signature, SeparatesAndMatches) {
    EXPECT_NE(invariant_signature(parse_poly("x", f5)), invariant_signature(parse_poly("x^2", f5)));
    EXPECT_EQ(invariant_signature(parse_poly("2x^2+3x+1", f5)),
              invariant_signature(parse_poly("x^2", f5)));
    EXPECT_NE(invariant_signature(parse_poly("x^3", f7)),
              invariant_signature(parse_poly("x^3-x", f7)));
    const InvariantSignature sig = invariant_signature(parse_poly("x^2", f5));
    EXPECT_EQ(sig.v_multiset, (std::vector<std::uint32_t>{0, 0, 1, 2, 2}));
    EXPECT_EQ(sig.f, (std::vector<std::uint64_t>{3, 1}));
    EXPECT_EQ(sig.g, (std::vector<std::uint64_t>{2, 1, 2}));
}

TEST(Equivalence, RefuteExamples) {
    const EquivalenceResult r =
        are_equivalent(parse_poly("x^3-x", f5), parse_poly("x^3-2x", f5), EquivMode::RefuteOnly);
    EXPECT_EQ(r.status, EquivStatus::NotEquivalent);
    ASSERT_TRUE(r.refuting_invariant.has_value());
    EXPECT_NE(r.refuting_invariant->find("g(."), std::string::npos);

    const EquivalenceResult match =
        are_equivalent(parse_poly("x^2", f5), parse_poly("2x^2+3x+1", f5), EquivMode::RefuteOnly);
    EXPECT_EQ(match.status, EquivStatus::Inconclusive);
}

TEST(Equivalence, CertifyExamples) {
    const EquivalenceResult a =
        are_equivalent(parse_poly("x^2", f5), parse_poly("2x^2+3x+1", f5), EquivMode::Certify);
    ASSERT_EQ(a.status, EquivStatus::Equivalent);
    ASSERT_TRUE(a.certificate.has_value());

    const EquivalenceResult b =
        are_equivalent(parse_poly("x^2", f5), parse_poly("x^3-2x", f5), EquivMode::Certify);
    ASSERT_EQ(b.status, EquivStatus::Equivalent);

    const EquivalenceResult c =
        are_equivalent(parse_poly("x^3-x", f5), parse_poly("x^3-2x", f5), EquivMode::Certify);
    EXPECT_EQ(c.status, EquivStatus::NotEquivalent);
}

TEST(Equivalence, CertificatesReverify) {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly p = random_nonconstant_poly(f5, rng);
        const Poly r = interpolate(ValueTable{f5, random_permutation(5, rng)});
        const Poly t = interpolate(ValueTable{f5, random_permutation(5, rng)});
        const Poly p2 = compose(r, compose(p, t));
        if (p2.degree() < 1) continue;
        const EquivalenceResult res = are_equivalent(p, p2, EquivMode::Certify);
        ASSERT_EQ(res.status, EquivStatus::Equivalent);
        const auto& [cr, ct] = *res.certificate;
        EXPECT_TRUE(is_permutation(cr));
        EXPECT_TRUE(is_permutation(ct));
        EXPECT_EQ(compose(cr, compose(reduce_mod_xq_minus_x(p), ct)),
                  reduce_mod_xq_minus_x(p2));
    }
}

TEST(Equivalence, RelationLaws) {
    // reflexive, symmetric, transitive on a small pool under Certify mode
    const std::vector<Poly> pool = {parse_poly("x", f5), parse_poly("x^2", f5),
                                    parse_poly("x^3-2x", f5), parse_poly("2x^2+3x+1", f5),
                                    parse_poly("x^3", f5)};
    for (const Poly& p : pool) {
        const EquivalenceResult self = are_equivalent(p, p, EquivMode::Certify);
        EXPECT_EQ(self.status, EquivStatus::Equivalent);
    }
    for (const Poly& p : pool) {
        for (const Poly& p2 : pool) {
            const EquivalenceResult fwd = are_equivalent(p, p2, EquivMode::Certify);
            const EquivalenceResult bwd = are_equivalent(p2, p, EquivMode::Certify);
            EXPECT_EQ(fwd.status == EquivStatus::Equivalent,
                      bwd.status == EquivStatus::Equivalent);
            if (fwd.status != EquivStatus::Equivalent) continue;
            // symmetry realized by inverting the certificate
            const auto& [r, t] = *fwd.certificate;
            const Poly r_inv = inverse_permutation(r);
            const Poly t_inv = inverse_permutation(t);
            EXPECT_EQ(compose(r_inv, compose(reduce_mod_xq_minus_x(p2), t_inv)),
                      reduce_mod_xq_minus_x(p));
            // transitivity realized by composing certificates
            for (const Poly& p3 : pool) {
                const EquivalenceResult nxt = are_equivalent(p2, p3, EquivMode::Certify);
                if (nxt.status != EquivStatus::Equivalent) continue;
                const auto& [r2, t2] = *nxt.certificate;
                EXPECT_EQ(compose(compose(r2, r), compose(reduce_mod_xq_minus_x(p),
                                                          compose(t, t2))),
                          reduce_mod_xq_minus_x(p3));
            }
        }
    }
}

TEST(Equivalence, GuardsAndDeterminism) {
    EXPECT_THROW(are_equivalent(parse_poly("3", f5), parse_poly("x", f5), EquivMode::RefuteOnly),
                 Error);
    try {
        are_equivalent(parse_poly("x", make_prime_field(11)),
                       parse_poly("x^2", make_prime_field(11)), EquivMode::Certify);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooLarge);
    }
    const EquivalenceResult a =
        are_equivalent(parse_poly("x^2", f5), parse_poly("x^3-2x", f5), EquivMode::Certify, 1);
    const EquivalenceResult b =
        are_equivalent(parse_poly("x^2", f5), parse_poly("x^3-2x", f5), EquivMode::Certify, 4);
    ASSERT_TRUE(a.certificate && b.certificate);
    EXPECT_EQ(a.certificate->first, b.certificate->first);
    EXPECT_EQ(a.certificate->second, b.certificate->second);
}

TEST(Equivalence, InputsOfHighDegreeAreReducedFirst) {
    const EquivalenceResult r =
        are_equivalent(parse_poly("x^6", f5), parse_poly("x^2", f5), EquivMode::Certify);
    EXPECT_EQ(r.status, EquivStatus::Equivalent);
    EXPECT_TRUE(r.inputs_reduced);
}

TEST(NormalizeLowDegree, Examples) {
    const LowDegreeNormalization lin = normalize_low_degree(parse_poly("3x+1", f5));
    EXPECT_EQ(lin.cls, LowDegreeClass::Linear);
    EXPECT_EQ(compose(lin.post, compose(parse_poly("3x+1", f5), lin.pre)), parse_poly("x", f5));

    const LowDegreeNormalization quad = normalize_low_degree(parse_poly("2x^2+3x+1", f5));
    EXPECT_EQ(quad.cls, LowDegreeClass::Quadratic);
    EXPECT_EQ(compose(quad.post, compose(parse_poly("2x^2+3x+1", f5), quad.pre)),
              parse_poly("x^2", f5));

    try {
        normalize_low_degree(parse_poly("x^3", f5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeOutOfRange);
    }
}

TEST(NormalizeCubic, SpecExamples) {
    const CubicClassification a = normalize_cubic(parse_poly("x^3-3x", f5));
    EXPECT_EQ(a.w, 3u);
    EXPECT_EQ(a.cls, CubicClass::NonsquareTwist);
    ASSERT_TRUE(a.canonical_maps.has_value());

    const CubicClassification b = normalize_cubic(parse_poly("x^3", f7));
    EXPECT_EQ(b.w, 0u);
    EXPECT_EQ(b.cls, CubicClass::Cube);

    const CubicClassification c = normalize_cubic(parse_poly("x^3+x^2+x", f7));
    EXPECT_EQ(make_prime_field(7)->quadratic_character(c.w), 1);
    EXPECT_EQ(c.cls, CubicClass::UnitTwist);
    // independent confirmation through the signature of x^3 - x
    EXPECT_EQ(invariant_signature(parse_poly("x^3+x^2+x", f7)),
              invariant_signature(parse_poly("x^3-x", f7)));
}

TEST(NormalizeCubic, CertificatesVerifyPointwise) {
    SplitMix64 rng(53);
    for (const FieldPtr& f : {f5, f7, make_prime_field(11), make_prime_field(13)}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint32_t> coeffs{rng.below(f->q()), rng.below(f->q()),
                                              rng.below(f->q()), 1 + rng.below(f->q() - 1)};
            const Poly p = make_poly(f, coeffs);
            const CubicClassification c = normalize_cubic(p);
            const Poly target = make_poly(f, {0, f->neg(c.w), 0, 1});
            EXPECT_EQ(compose(c.post, compose(p, c.pre)), target);
            if (c.canonical_maps) {
                const std::uint32_t k = f->smallest_nonsquare();
                const Poly target_k = make_poly(f, {0, f->neg(k), 0, 1});
                EXPECT_EQ(compose(c.canonical_maps->first,
                                  compose(p, c.canonical_maps->second)),
                          target_k);
            }
        }
    }
}

TEST(NormalizeCubic, Guards) {
    try {
        normalize_cubic(parse_poly("x^2", f5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotCubic);
    }
    try {
        normalize_cubic(parse_poly("x^3", make_prime_field(3)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CharAtMostThree);
    }
}

TEST(CubicTrichotomy, EveryCubicClassifiesAndClassesSeparate) {
    for (std::uint32_t prime : {5u, 7u, 11u, 13u}) {
        const FieldPtr f = make_prime_field(prime);
        const std::uint32_t k = f->smallest_nonsquare();
        // canonical representatives have pairwise distinct signatures
        const auto sig_cube = invariant_signature(parse_poly("x^3", f));
        const auto sig_unit = invariant_signature(parse_poly("x^3-x", f));
        const Poly twist = make_poly(f, {0, f->neg(k), 0, 1});
        const auto sig_twist = invariant_signature(twist);
        EXPECT_NE(sig_cube, sig_unit);
        EXPECT_NE(sig_cube, sig_twist);
        EXPECT_NE(sig_unit, sig_twist);
        // exactly one of f(x^3-x, 2), f(x^3-kx, 2) is nonzero
        const bool unit_two = f_invariant(parse_poly("x^3-x", f), 2) > 0;
        const bool twist_two = f_invariant(twist, 2) > 0;
        EXPECT_NE(unit_two, twist_two);
        // every monic-normalizable cubic lands in exactly one class
        std::uint64_t counts[3] = {0, 0, 0};
        for (std::uint32_t a = 1; a < prime; ++a)
            for (std::uint32_t b = 0; b < prime; ++b)
                for (std::uint32_t c = 0; c < prime; ++c)
                    for (std::uint32_t d = 0; d < prime; ++d) {
                        const CubicClassification cl =
                            normalize_cubic(make_poly(f, {d, c, b, a}));
                        ++counts[static_cast<int>(cl.cls)];
                    }
        EXPECT_EQ(counts[0] + counts[1] + counts[2],
                  std::uint64_t{prime - 1} * prime * prime * prime);
        EXPECT_GT(counts[0], 0u);
        EXPECT_GT(counts[1], 0u);
        EXPECT_GT(counts[2], 0u);
    }
}
