#include <orthogen/classify.hpp>

#include <array>
#include <string>
#include <utility>

namespace orthogen {

namespace {

constexpr std::array<std::pair<RejectReason, std::string_view>, 6> kReasonNames{{
    {RejectReason::zero_coefficient, "zero_coefficient"},
    {RejectReason::nonlinear_dn, "nonlinear_dn"},
    {RejectReason::nonpositive_omega, "nonpositive_omega"},
    {RejectReason::nonzero_beta, "nonzero_beta"},
    {RejectReason::alpha_nonpositive, "alpha_nonpositive"},
    {RejectReason::lambda_out_of_range, "lambda_out_of_range"},
}};

// omega_n is positive, or its denominator vanishes / it is <= 0.
bool omega_positive(const Rational& a, const Rational& b, const Rational& alpha, std::size_t n)
{
    try {
        return is_positive(omega_formula(a, b, alpha, n));
    } catch (const DegenerateParametersError&) {
        return false;
    }
}

// For b < 0 omega_n tends to alpha / b < 0, so the scan terminates.
std::size_t first_nonpositive_omega(const Rational& a, const Rational& b, const Rational& alpha)
{
    std::size_t n = 1;
    while (omega_positive(a, b, alpha, n))
        ++n;
    return n;
}

// Branch selection once (a, b) are known and alpha > 0.
Verdict classify_parameters(const Rational& a, const Rational& b, const Rational& alpha,
                            std::size_t order)
{
    Verdict verdict;
    if (sgn(b) < 0) {
        return Rejected{RejectReason::nonpositive_omega, first_nonpositive_omega(a, b, alpha)};
    } else if (is_zero(b)) {
        if (sgn(a) <= 0)
            return Rejected{RejectReason::nonpositive_omega, 1};
        verdict = HermiteVerdict{a, a / (2 * alpha)};
    } else if (is_zero(a)) {
        verdict = ChebyshevTVerdict{b, b / (4 * alpha)};
    } else {
        const Rational lambda = a / b;
        if (lambda <= Rational(-1, 2))
            return Rejected{RejectReason::lambda_out_of_range, std::nullopt};
        verdict = UltrasphericalVerdict{lambda, b, b / (4 * alpha)};
    }

    for (std::size_t n = 1; n < order; ++n)
        if (!omega_positive(a, b, alpha, n))
            return Rejected{RejectReason::nonpositive_omega, n};
    return verdict;
}

// First n where rec's omega_n differs from the closed form, if any.
std::optional<std::size_t> first_omega_mismatch(const Recursion& rec, const Rational& a,
                                                const Rational& b, const Rational& alpha)
{
    for (std::size_t n = 1; n < rec.order(); ++n) {
        try {
            if (omega_formula(a, b, alpha, n) != rec.omega(n))
                return n;
        } catch (const DegenerateParametersError&) {
            return n;
        }
    }
    return std::nullopt;
}

} // namespace

std::string_view to_string(RejectReason reason)
{
    for (const auto& [r, name] : kReasonNames)
        if (r == reason)
            return name;
    return "unknown";
}

std::optional<RejectReason> parse_reject_reason(std::string_view text)
{
    for (const auto& [r, name] : kReasonNames)
        if (name == text)
            return r;
    return std::nullopt;
}

std::variant<LinearDn, Rejected> fit_linear_dn(const std::vector<Rational>& c)
{
    if (c.size() < 5)
        throw std::invalid_argument("fit_linear_dn needs c_0 ... c_4 at least");
    if (auto n = first_zero_coefficient(c))
        return Rejected{RejectReason::zero_coefficient, *n};

    auto scaled_ratio = [&](std::size_t n) -> Rational { return Rational(n) * c[n] / c[n - 1]; };

    // 2 d_2 = a + b, 3 d_3 = a + 2b
    const Rational two_d2 = scaled_ratio(2);
    const Rational b = scaled_ratio(3) - two_d2;
    const Rational a = two_d2 - b;
    for (std::size_t n = 4; n < c.size(); ++n)
        if (scaled_ratio(n) != a + Rational(n - 1) * b)
            return Rejected{RejectReason::nonlinear_dn, n};
    return LinearDn{a, b};
}

Rational omega_formula(const Rational& a, const Rational& b, const Rational& alpha, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("omega_0 does not exist");
    if (n == 1) {
        const Rational den = a + b;
        if (is_zero(den))
            throw DegenerateParametersError("omega_1 undefined: a + b = 0");
        return 2 * alpha / den;
    }
    const Rational nn(n);
    const Rational den = ((nn - 1) * b + a) * (nn * b + a);
    if (is_zero(den))
        throw DegenerateParametersError("omega_" + std::to_string(n) + " undefined");
    return alpha * nn * ((nn - 1) * b + 2 * a) / den;
}

Verdict classify(const CoeffRule& rule, const Rational& alpha, std::size_t order)
{
    if (order < 5)
        throw std::invalid_argument("classify needs order >= 5");
    validate(rule);
    if (sgn(alpha) <= 0)
        return Rejected{RejectReason::alpha_nonpositive, std::nullopt};

    if (const auto abc = as_abc(rule))
        return classify_parameters(abc->a, abc->b, alpha, order);

    const std::vector<Rational> c = coeffs_from_rule(rule, order);
    const auto dn = fit_linear_dn(c);
    if (const auto* rejected = std::get_if<Rejected>(&dn))
        return *rejected;
    const auto& linear = std::get<LinearDn>(dn);
    return classify_parameters(linear.a, linear.b, alpha, order);
}

Verdict identify_from_recursion(const Recursion& rec, const Rational& alpha)
{
    if (rec.order() < 4)
        throw std::invalid_argument("identify needs omega_1 ... omega_3");
    if (sgn(alpha) <= 0)
        return Rejected{RejectReason::alpha_nonpositive, std::nullopt};
    for (std::size_t n = 0; n < rec.order(); ++n)
        if (!is_zero(rec.beta(n)))
            return Rejected{RejectReason::nonzero_beta, n};
    if (const auto pos = check_positive(rec); !pos.positive)
        return Rejected{RejectReason::nonpositive_omega, pos.first_failure};

    const Rational ratio = rec.omega(2) / rec.omega(1);
    auto mismatch = [&](const Rational& a, const Rational& b) {
        return first_omega_mismatch(rec, a, b, alpha);
    };

    if (ratio == 2) {
        const Rational a = 2 * alpha / rec.omega(1);
        if (auto n = mismatch(a, Rational(0)))
            return Rejected{RejectReason::nonlinear_dn, *n};
        return HermiteVerdict{a, a / (2 * alpha)};
    }
    if (ratio > 2)
        return Rejected{RejectReason::lambda_out_of_range, std::nullopt};
    if (ratio == Rational(1, 2)) {
        // lambda would be 0; only Chebyshev-T (constant omega from n = 2) fits.
        if (rec.omega(3) != rec.omega(2))
            return Rejected{RejectReason::nonlinear_dn, 3};
        const Rational b = alpha / rec.omega(2);
        if (auto n = mismatch(Rational(0), b))
            return Rejected{RejectReason::nonlinear_dn, *n};
        return ChebyshevTVerdict{b, b / (4 * alpha)};
    }

    // omega_2 / omega_1 = (1 + 2 lambda) / (2 + lambda)
    const Rational lambda = (2 * ratio - 1) / (2 - ratio);
    const Rational b = 2 * alpha / ((1 + lambda) * rec.omega(1));
    if (auto n = mismatch(lambda * b, b))
        return Rejected{RejectReason::nonlinear_dn, *n};
    return UltrasphericalVerdict{lambda, b, b / (4 * alpha)};
}

} // namespace orthogen
