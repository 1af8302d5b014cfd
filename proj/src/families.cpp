#include <orthogen/families.hpp>

#include <stdexcept>

namespace orthogen {

namespace {

void require_valid_lambda(const Rational& lambda)
{
    if (lambda <= Rational(-1, 2) || is_zero(lambda))
        throw std::invalid_argument("ultraspherical needs lambda > -1/2, lambda != 0; got " +
                                    to_string(lambda));
}

Rational ultraspherical_omega(const Rational& lambda, std::size_t n)
{
    const Rational nn(n);
    return nn * (nn + 2 * lambda - 1) / (4 * (nn + lambda - 1) * (nn + lambda));
}

Integer bell_number(std::size_t k)
{
    // Each row starts with the last entry of the previous one; B_k heads row k.
    std::vector<Integer> row{Integer(1)};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Integer> next{row.back()};
        next.reserve(row.size() + 1);
        for (const auto& v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

Rational symmetric_beta_moment(const Rational& lambda, std::size_t k)
{
    if (k % 2 == 1)
        return Rational(0);
    Rational m(1);
    for (std::size_t i = 1; i <= k / 2; ++i)
        m *= Rational(2 * i - 1) / (2 * lambda + Rational(2 * i));
    return m;
}

} // namespace

std::string family_name(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::charlier: return "charlier";
    case FamilyKind::legendre: return "legendre";
    case FamilyKind::ultraspherical: return "ultraspherical";
    case FamilyKind::chebyshev_t: return "chebyshev_t";
    case FamilyKind::chebyshev_u: return "chebyshev_u";
    }
    throw std::logic_error("unknown family kind");
}

FamilyKind parse_family_kind(const std::string& name)
{
    for (auto kind : {FamilyKind::hermite, FamilyKind::charlier, FamilyKind::legendre,
                      FamilyKind::ultraspherical, FamilyKind::chebyshev_t, FamilyKind::chebyshev_u})
        if (family_name(kind) == name)
            return kind;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Recursion recursion_of(const FamilyId& id, std::size_t order)
{
    if (order < 2)
        throw std::invalid_argument("recursion_of needs order >= 2");

    std::vector<Rational> betas(order);
    std::vector<Rational> omegas(order - 1);
    for (std::size_t n = 1; n < order; ++n) {
        const Rational nn(n);
        Rational& w = omegas[n - 1];
        switch (id.kind) {
        case FamilyKind::hermite:
        case FamilyKind::charlier:
            w = nn;
            break;
        case FamilyKind::legendre:
            w = nn * nn / (4 * nn * nn - 1);
            break;
        case FamilyKind::ultraspherical:
            require_valid_lambda(id.lambda);
            w = ultraspherical_omega(id.lambda, n);
            break;
        case FamilyKind::chebyshev_t:
            w = n == 1 ? Rational(1, 2) : Rational(1, 4);
            break;
        case FamilyKind::chebyshev_u:
            w = ultraspherical_omega(Rational(1), n);
            break;
        }
    }
    if (id.kind == FamilyKind::charlier)
        for (std::size_t n = 0; n < order; ++n)
            betas[n] = Rational(n + 1);
    return Recursion(std::move(betas), std::move(omegas));
}

MonicFamily polys_from_recursion(const Recursion& rec, std::size_t order)
{
    if (rec.order() < order)
        throw std::invalid_argument("recursion of order " + std::to_string(rec.order()) +
                                    " cannot generate P_" + std::to_string(order));
    std::vector<PolyX> polys{PolyX::constant(Rational(1))};
    polys.reserve(order + 1);
    for (std::size_t n = 0; n < order; ++n) {
        PolyX next = polys[n].shifted() - polys[n] * rec.beta(n);
        if (n >= 1)
            next -= polys[n - 1] * rec.omega(n);
        polys.push_back(std::move(next));
    }
    return MonicFamily(std::move(polys));
}

Rational moment_oracle(const FamilyId& id, std::size_t k)
{
    switch (id.kind) {
    case FamilyKind::hermite: {
        if (k % 2 == 1)
            return Rational(0);
        Integer m(1);
        for (std::size_t i = 1; i < k; i += 2)
            m *= static_cast<unsigned long>(i);
        return Rational(m);
    }
    case FamilyKind::charlier:
        return Rational(bell_number(k));
    case FamilyKind::legendre:
        return symmetric_beta_moment(Rational(1, 2), k);
    case FamilyKind::ultraspherical:
        require_valid_lambda(id.lambda);
        return symmetric_beta_moment(id.lambda, k);
    case FamilyKind::chebyshev_t:
        return symmetric_beta_moment(Rational(0), k);
    case FamilyKind::chebyshev_u:
        return symmetric_beta_moment(Rational(1), k);
    }
    throw std::logic_error("unknown family kind");
}

} // namespace orthogen
