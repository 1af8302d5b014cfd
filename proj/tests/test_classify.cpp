#include <doctest.h>

#include <orthogen/classify.hpp>
#include <orthogen/families.hpp>

#include "support.hpp"

using namespace orthogen;
using namespace orthogen::testing;

namespace {

Rejected rejected(RejectReason reason, std::optional<std::size_t> index = std::nullopt)
{
    return Rejected{reason, index};
}

AbcRule abc(const char* a, const char* b, const char* c) { return {Q(a), Q(b), Q(c)}; }

// Explicit coefficients of an ABC rule, so classify takes the d_n route.
ExplicitRule explicit_of(const AbcRule& r, std::size_t order) { return {coeffs_from_rule(r, order)}; }

} // namespace

TEST_CASE("fit_linear_dn examples")
{
    std::vector<Rational> inv_fact{Rational(1)};
    for (std::size_t n = 1; n <= 8; ++n)
        inv_fact.push_back(inv_fact.back() / Rational(n));
    CHECK(fit_linear_dn(inv_fact) == std::variant<LinearDn, Rejected>(LinearDn{Q("1"), Q("0")}));

    CHECK(fit_linear_dn(std::vector<Rational>(9, Rational(1))) ==
          std::variant<LinearDn, Rejected>(LinearDn{Q("1"), Q("1")}));

    CHECK(fit_linear_dn(Qs({"1", "1", "1/2", "1/12", "1/100", "1/1000"})) ==
          std::variant<LinearDn, Rejected>(rejected(RejectReason::nonlinear_dn, 4)));

    CHECK(fit_linear_dn(Qs({"1", "1", "0", "1", "1"})) ==
          std::variant<LinearDn, Rejected>(rejected(RejectReason::zero_coefficient, 2)));

    CHECK_THROWS_AS(fit_linear_dn(Qs({"1", "1", "1", "1"})), std::invalid_argument);
}

TEST_CASE("fit_linear_dn recovers (a, b) and the d-recursion holds")
{
    RationalGen gen(55);
    for (int i = 0; i < 50; ++i) {
        const AbcRule r{gen(), gen(), gen.nonzero()};
        if (is_zero(r.a) && is_zero(r.b))
            continue;
        const auto c = coeffs_from_rule(r, 10);
        if (first_zero_coefficient(c))
            continue;
        const auto fitted = fit_linear_dn(c);
        REQUIRE(std::holds_alternative<LinearDn>(fitted));
        CHECK(std::get<LinearDn>(fitted) == LinearDn{r.a, r.b});
        auto d = [&](std::size_t n) -> Rational { return c[n] / c[n - 1]; };
        for (std::size_t n = 3; n < 10; ++n)
            CHECK(Rational(n + 1) * d(n + 1) == Rational(2 * n) * d(n) - Rational(n - 1) * d(n - 1));
    }
}

TEST_CASE("omega_formula examples")
{
    CHECK(omega_formula(Q("1"), Q("0"), Q("1/2"), 3) == 3);
    CHECK(omega_formula(Q("1/2"), Q("1"), Q("1/4"), 2) == Q("4/15"));
    CHECK(omega_formula(Q("0"), Q("2"), Q("1/2"), 1) == Q("1/2"));
    CHECK(omega_formula(Q("0"), Q("2"), Q("1/2"), 5) == Q("1/4"));
    CHECK_THROWS_AS(omega_formula(Q("1"), Q("-1"), Q("1"), 1), DegenerateParametersError);
    CHECK_THROWS_AS(omega_formula(Q("-2"), Q("1"), Q("1"), 3), DegenerateParametersError);
    CHECK_THROWS_AS(omega_formula(Q("1"), Q("1"), Q("1"), 0), std::invalid_argument);
}

TEST_CASE("omega_formula at n = 1 is the limit of the general expression")
{
    // For a != 0 the general expression is defined at n = 1; it must agree.
    RationalGen gen(3);
    for (int i = 0; i < 50; ++i) {
        const Rational a = gen.nonzero(), b = gen(), alpha = gen.nonzero();
        if (is_zero(a + b))
            continue;
        const Rational general = alpha * (2 * a) / (a * (b + a));
        CHECK(omega_formula(a, b, alpha, 1) == general);
    }
}

TEST_CASE("classify examples")
{
    CHECK(classify(abc("1", "0", "1"), Q("1/2"), 12) == Verdict(HermiteVerdict{Q("1"), Q("1")}));
    CHECK(classify(abc("1", "1", "1"), Q("1"), 12) ==
          Verdict(UltrasphericalVerdict{Q("1"), Q("1"), Q("1/4")}));
    CHECK(classify(abc("0", "2", "2"), Q("1/2"), 12) == Verdict(ChebyshevTVerdict{Q("2"), Q("1")}));
    CHECK(classify(abc("-1", "2", "1"), Q("1"), 12) == Verdict(rejected(RejectReason::lambda_out_of_range)));

    const Verdict negative_b = classify(abc("1", "-1", "1"), Q("1"), 12);
    CHECK(negative_b == Verdict(rejected(RejectReason::nonpositive_omega, 1)));
}

TEST_CASE("classify rejections")
{
    CHECK(classify(abc("1", "0", "1"), Q("-1"), 12) == Verdict(rejected(RejectReason::alpha_nonpositive)));
    CHECK(classify(abc("1", "0", "1"), Q("0"), 12) == Verdict(rejected(RejectReason::alpha_nonpositive)));
    CHECK(classify(abc("-3/2", "2", "1"), Q("1"), 12) == Verdict(rejected(RejectReason::lambda_out_of_range)));
    CHECK(sgn(omega_formula(Q("-3/2"), Q("2"), Q("1"), 2)) < 0);
    CHECK(classify(abc("-1", "0", "1"), Q("1"), 12) == Verdict(rejected(RejectReason::nonpositive_omega, 1)));

    // b < 0 with a large: omega_n stays positive until n b + a turns negative.
    const Verdict late = classify(abc("10", "-1", "1"), Q("1"), 6);
    REQUIRE(std::holds_alternative<Rejected>(late));
    const auto idx = *std::get<Rejected>(late).index;
    CHECK(sgn(omega_formula(Q("10"), Q("-1"), Q("1"), idx - 1)) > 0);
    bool positive_at_idx = false;
    try {
        positive_at_idx = sgn(omega_formula(Q("10"), Q("-1"), Q("1"), idx)) > 0;
    } catch (const DegenerateParametersError&) {
    }
    CHECK_FALSE(positive_at_idx);
    CHECK(idx == 10);

    CHECK(classify(ExplicitRule{Qs({"1", "1", "0", "1", "1", "1"})}, Q("1"), 5) ==
          Verdict(rejected(RejectReason::zero_coefficient, 2)));
    CHECK(classify(ExplicitRule{Qs({"1", "1", "1/2", "1/12", "1/100", "1"})}, Q("1"), 5) ==
          Verdict(rejected(RejectReason::nonlinear_dn, 4)));

    CHECK_THROWS_AS(classify(abc("1", "0", "1"), Q("1"), 4), std::invalid_argument);
    CHECK_THROWS_AS(classify(ExplicitRule{Qs({"1", "1", "1"})}, Q("1"), 5), std::invalid_argument);
}

TEST_CASE("explicit rules classify like their ABC source")
{
    for (const auto& r : {abc("1", "0", "1"), abc("2", "0", "-3"), abc("1", "1", "1"), abc("0", "2", "2"),
                          abc("-1/4", "1", "5"), abc("3", "2", "1/2"), abc("-1", "2", "1"),
                          abc("-3/2", "2", "1"), abc("1", "-2/7", "1")}) {
        for (const char* alpha : {"1/2", "1", "3"}) {
            CAPTURE(alpha);
            CHECK(classify(explicit_of(r, 12), Q(alpha), 12) == classify(r, Q(alpha), 12));
        }
    }
}

TEST_CASE("ABC rules with a vanishing c_n are rejected on both routes")
{
    // c_4 = 0 since a + 3b = 0; the ABC route rejects from the sign of b.
    const AbcRule r = abc("1", "-1/3", "1");
    CHECK(classify(explicit_of(r, 8), Q("1"), 8) == Verdict(rejected(RejectReason::zero_coefficient, 4)));
    const Verdict v = classify(r, Q("1"), 8);
    REQUIRE(std::holds_alternative<Rejected>(v));
    CHECK(std::get<Rejected>(v).reason == RejectReason::nonpositive_omega);
}

TEST_CASE("classify is invariant under shift_rule")
{
    RationalGen gen(12);
    for (int i = 0; i < 40; ++i) {
        const AbcRule r{gen(), gen(), gen.nonzero()};
        if (is_zero(r.a) && is_zero(r.b))
            continue;
        const Rational alpha = gen();
        const Verdict base = classify(r, alpha, 10);
        for (const char* C : {"2", "-1", "1/3"})
            CHECK(classify(shift_rule(r, Q(C)), alpha, 10) == base);
    }
}

TEST_CASE("accepted verdicts match the fitted recursion of the expansion")
{
    RationalGen gen(90210);
    int accepted = 0;
    for (int i = 0; i < 80; ++i) {
        const AbcRule r{gen(), gen(), gen.nonzero()};
        if (is_zero(r.a) && is_zero(r.b))
            continue;
        const Rational alpha = abs(gen.nonzero());
        const Verdict v = classify(r, alpha, 10);
        if (!is_accepted(v))
            continue;
        ++accepted;
        const Recursion rec = fit(expand(GFSpec{r, alpha, 10}));
        for (std::size_t n = 0; n < 10; ++n)
            CHECK(is_zero(rec.beta(n)));
        for (std::size_t n = 1; n < 10; ++n)
            CHECK(rec.omega(n) == omega_formula(r.a, r.b, alpha, n));
        CHECK(identify_from_recursion(rec, alpha) == v);
    }
    CHECK(accepted > 10);
}

TEST_CASE("identify_from_recursion examples")
{
    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0", "0"}), Qs({"1", "2", "3", "4"})), Q("1/2")) ==
          Verdict(HermiteVerdict{Q("1"), Q("1")}));
    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0"}), Qs({"1/3", "4/15", "9/35"})), Q("1/4")) ==
          Verdict(UltrasphericalVerdict{Q("1/2"), Q("1"), Q("1")}));
    for (const char* alpha : {"1", "1/2", "7"})
        CHECK(identify_from_recursion(recursion_of(FamilyId::charlier(), 6), Q(alpha)) ==
              Verdict(rejected(RejectReason::nonzero_beta, 0)));
    CHECK(identify_from_recursion(recursion_of(FamilyId::chebyshev_t(), 8), Q("1/2")) ==
          Verdict(ChebyshevTVerdict{Q("2"), Q("1")}));
}

TEST_CASE("identify_from_recursion rejections")
{
    const Recursion hermite = recursion_of(FamilyId::hermite(), 6);
    CHECK(identify_from_recursion(hermite, Q("-1")) == Verdict(rejected(RejectReason::alpha_nonpositive)));

    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0"}), Qs({"1", "-1", "2"})), Q("1")) ==
          Verdict(rejected(RejectReason::nonpositive_omega, 2)));

    // rho = 3 > 2
    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0"}), Qs({"1", "3", "5"})), Q("1")) ==
          Verdict(rejected(RejectReason::lambda_out_of_range)));

    // Hermite ratio but omega_3 off the line
    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0"}), Qs({"1", "2", "4"})), Q("1/2")) ==
          Verdict(rejected(RejectReason::nonlinear_dn, 3)));

    // rho = 1/2 but omega_3 != omega_2: lambda = 0 without Chebyshev-T shape
    CHECK(identify_from_recursion(Recursion(Qs({"0", "0", "0", "0"}), Qs({"1", "1/2", "1/3"})), Q("1")) ==
          Verdict(rejected(RejectReason::nonlinear_dn, 3)));

    // ultraspherical start, wrong tail
    Recursion legendre = recursion_of(FamilyId::legendre(), 8);
    legendre.omegas[5] += 1;
    CHECK(identify_from_recursion(legendre, Q("1/4")) == Verdict(rejected(RejectReason::nonlinear_dn, 6)));

    CHECK_THROWS_AS(identify_from_recursion(recursion_of(FamilyId::hermite(), 3), Q("1")), std::invalid_argument);
}

TEST_CASE("identify is scale-free in lambda")
{
    for (const char* lambda : {"-1/4", "1/2", "1", "3/2"}) {
        const Recursion rec = recursion_of(FamilyId::ultraspherical(Q(lambda)), 8);
        for (const char* r : {"2", "1/2", "3"}) {
            const Rational r2 = Q(r) * Q(r);
            Recursion scaled = rec;
            for (auto& w : scaled.omegas)
                w *= r2;
            const Verdict v = identify_from_recursion(scaled, r2 * Q("1/4"));
            REQUIRE(std::holds_alternative<UltrasphericalVerdict>(v));
            CHECK(std::get<UltrasphericalVerdict>(v).lambda == Q(lambda));
        }
    }
    const Recursion hermite = recursion_of(FamilyId::hermite(), 8);
    Recursion scaled = hermite;
    for (auto& w : scaled.omegas)
        w *= 9;
    CHECK(std::holds_alternative<HermiteVerdict>(identify_from_recursion(scaled, Q("9/2"))));
}

TEST_CASE("positivity holds to n = 64 across the admissible region")
{
    for (const char* lambda : {"-49/100", "-1/4", "1/3", "1/2", "1", "3/2", "17/2"})
        for (const char* b : {"1/3", "1", "5"})
            for (const char* alpha : {"1/7", "1", "4"}) {
                const Rational bb = Q(b);
                const Rational a = Q(lambda) * bb;
                for (std::size_t n = 1; n <= 64; ++n)
                    CHECK(sgn(omega_formula(a, bb, Q(alpha), n)) > 0);
            }
}

TEST_CASE("reject reason names round trip")
{
    for (auto r : {RejectReason::zero_coefficient, RejectReason::nonlinear_dn, RejectReason::nonpositive_omega,
                   RejectReason::nonzero_beta, RejectReason::alpha_nonpositive, RejectReason::lambda_out_of_range})
        CHECK(parse_reject_reason(to_string(r)) == r);
    CHECK_FALSE(parse_reject_reason("nope"));
}
