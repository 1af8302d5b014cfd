#include <orthogen/genfun.hpp>

#include <string>

#include <orthogen/series.hpp>

namespace orthogen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

AbcRule desugar(const NamedRule& rule)
{
    switch (rule.kind) {
    case NamedKind::exp:
        return {rule.param, Rational(0), rule.param};
    case NamedKind::geometric:
        return {rule.param, rule.param, rule.param};
    case NamedKind::log:
        return {Rational(0), rule.param, rule.param};
    }
    throw std::logic_error("unknown named rule");
}

std::optional<AbcRule> as_abc(const CoeffRule& rule)
{
    return std::visit(overloaded{
                          [](const AbcRule& r) -> std::optional<AbcRule> { return r; },
                          [](const NamedRule& r) -> std::optional<AbcRule> { return desugar(r); },
                          [](const ExplicitRule&) -> std::optional<AbcRule> { return std::nullopt; },
                      },
                      rule);
}

void validate(const CoeffRule& rule)
{
    if (const auto* e = std::get_if<ExplicitRule>(&rule)) {
        if (e->values.empty() || e->values.front() != 1)
            throw std::invalid_argument("explicit rule must start with c_0 = 1");
        return;
    }
    const AbcRule abc = *as_abc(rule);
    if (is_zero(abc.c))
        throw std::invalid_argument("rule needs c != 0");
    if (is_zero(abc.a) && is_zero(abc.b))
        throw std::invalid_argument("rule needs (a, b) != (0, 0)");
}

MonicFamily::MonicFamily(std::vector<PolyX> polys)
    : polys_(std::move(polys))
{
    if (polys_.empty())
        throw std::invalid_argument("empty family");
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (polys_[n].degree() != static_cast<long>(n) || !polys_[n].is_monic())
            throw std::invalid_argument("P_" + std::to_string(n) + " is not monic of degree " +
                                        std::to_string(n));
    }
}

MonicFamily MonicFamily::truncated(std::size_t n) const
{
    if (n >= polys_.size())
        throw std::invalid_argument("cannot truncate a family to a higher order");
    return MonicFamily(std::vector<PolyX>(polys_.begin(), polys_.begin() + n + 1));
}

ZeroCoefficientError::ZeroCoefficientError(std::size_t index)
    : std::domain_error("c_" + std::to_string(index) + " = 0, P_" + std::to_string(index) +
                        " is undefined")
    , index_(index)
{
}

std::vector<Rational> coeffs_from_rule(const CoeffRule& rule, std::size_t order)
{
    validate(rule);
    if (const auto* e = std::get_if<ExplicitRule>(&rule)) {
        if (e->values.size() < order + 1)
            throw std::invalid_argument("explicit rule has " + std::to_string(e->values.size()) +
                                        " coefficients, order " + std::to_string(order) +
                                        " needs " + std::to_string(order + 1));
        return {e->values.begin(), e->values.begin() + order + 1};
    }

    const AbcRule abc = *as_abc(rule);
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    if (order >= 1)
        c[1] = abc.c;
    for (std::size_t n = 2; n <= order; ++n)
        c[n] = (abc.a + Rational(n - 1) * abc.b) / Rational(n) * c[n - 1];
    return c;
}

std::optional<std::size_t> first_zero_coefficient(const std::vector<Rational>& c)
{
    for (std::size_t n = 1; n < c.size(); ++n)
        if (is_zero(c[n]))
            return n;
    return std::nullopt;
}

MonicFamily expand(const GFSpec& spec)
{
    if (is_zero(spec.alpha))
        throw std::invalid_argument("alpha must be nonzero");
    const std::vector<Rational> c = coeffs_from_rule(spec.rule, spec.order);
    if (auto n = first_zero_coefficient(c))
        throw ZeroCoefficientError(*n);

    const SeriesZ series = substitute_quadratic(c, spec.alpha, spec.order);
    std::vector<PolyX> polys;
    polys.reserve(spec.order + 1);
    for (std::size_t n = 0; n <= spec.order; ++n)
        polys.push_back(series[n] * (Rational(1) / c[n]));
    return MonicFamily(std::move(polys));
}

CoeffRule shift_rule(const CoeffRule& rule, const Rational& C)
{
    if (is_zero(C))
        throw std::invalid_argument("shift constant must be nonzero");
    if (const auto* e = std::get_if<ExplicitRule>(&rule)) {
        ExplicitRule out = *e;
        for (std::size_t n = 1; n < out.values.size(); ++n)
            out.values[n] *= C;
        return out;
    }
    AbcRule abc = *as_abc(rule);
    abc.c *= C;
    return abc;
}

std::vector<Rational> closed_form_coeffs(const Rational& a, const Rational& b, const Rational& c,
                                         std::size_t order)
{
    if (is_zero(a) && is_zero(b))
        throw std::invalid_argument("closed form needs (a, b) != (0, 0)");
    if (is_zero(c))
        throw std::invalid_argument("closed form needs c != 0");

    std::vector<Rational> out(order + 1);
    out[0] = 1;

    if (is_zero(b)) {
        // e^{az} = sum a^n z^n / n!
        Rational term(1);
        for (std::size_t n = 1; n <= order; ++n) {
            term *= a / Rational(n);
            out[n] = c / a * term;
        }
    } else if (is_zero(a)) {
        // ln(1/(1 - bz)) = sum b^n z^n / n
        Rational power(1);
        for (std::size_t n = 1; n <= order; ++n) {
            power *= b;
            out[n] = c / b * power / Rational(n);
        }
    } else {
        // (1 - bz)^e = sum binom(e, n) (-b)^n z^n with e = -a/b
        const Rational e = -a / b;
        Rational term(1);
        for (std::size_t n = 1; n <= order; ++n) {
            term *= (e - Rational(n - 1)) / Rational(n) * (-b);
            out[n] = c / a * term;
        }
    }
    return out;
}

} // namespace orthogen
