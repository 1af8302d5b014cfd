#include <orthogen/favard.hpp>

#include <string>

namespace orthogen {

Recursion::Recursion(std::vector<Rational> b, std::vector<Rational> w)
    : betas(std::move(b))
    , omegas(std::move(w))
{
    if (betas.empty() || omegas.size() + 1 != betas.size())
        throw std::invalid_argument("recursion needs N betas and N-1 omegas, got " +
                                    std::to_string(betas.size()) + " and " +
                                    std::to_string(omegas.size()));
}

const Rational& Recursion::omega(std::size_t n) const
{
    if (n == 0 || n > omegas.size())
        throw std::out_of_range("omega_" + std::to_string(n) + " not available");
    return omegas[n - 1];
}

Recursion Recursion::truncated(std::size_t n) const
{
    if (n == 0 || n > order())
        throw std::invalid_argument("cannot truncate recursion of order " +
                                    std::to_string(order()) + " to " + std::to_string(n));
    return Recursion({betas.begin(), betas.begin() + n}, {omegas.begin(), omegas.begin() + (n - 1)});
}

NotThreeTermError::NotThreeTermError(std::size_t index)
    : std::domain_error("no three-term recursion at n = " + std::to_string(index))
    , index_(index)
{
}

Recursion fit(const MonicFamily& family)
{
    if (family.size() < 3)
        throw std::invalid_argument("fit needs at least P_0, P_1, P_2");

    const std::size_t order = family.order();
    std::vector<Rational> betas(order);
    std::vector<Rational> omegas(order - 1);
    for (std::size_t n = 0; n < order; ++n) {
        PolyX residual = family[n].shifted() - family[n + 1];
        betas[n] = residual.coeff(n);
        residual -= family[n] * betas[n];
        if (n >= 1) {
            omegas[n - 1] = residual.coeff(n - 1);
            residual -= family[n - 1] * omegas[n - 1];
        }
        if (!residual.is_zero())
            throw NotThreeTermError(n);
    }
    return Recursion(std::move(betas), std::move(omegas));
}

PositivityCheck check_positive(const Recursion& rec)
{
    for (std::size_t i = 0; i < rec.omegas.size(); ++i)
        if (!is_positive(rec.omegas[i]))
            return {false, i + 1};
    return {};
}

MonicFamily rescale(const MonicFamily& family, const Rational& r)
{
    if (is_zero(r))
        throw std::invalid_argument("rescale factor must be nonzero");
    const Rational inv = Rational(1) / r;
    std::vector<PolyX> out;
    out.reserve(family.size());
    Rational rn(1);
    for (const auto& p : family.polys()) {
        out.push_back(p.scale_argument(inv) * rn);
        rn *= r;
    }
    return MonicFamily(std::move(out));
}

} // namespace orthogen
