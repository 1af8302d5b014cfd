#include <orthogen/series.hpp>

#include <stdexcept>
#include <string>

namespace orthogen {

namespace {

void require_same_order(const SeriesZ& f, const SeriesZ& g)
{
    if (f.order() != g.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(f.order()) +
                                    " vs " + std::to_string(g.order()));
}

// (x z - alpha z^2) * s, truncated at the order of s.
SeriesZ mul_by_quadratic(const SeriesZ& s, const Rational& alpha)
{
    const std::size_t order = s.order();
    std::vector<PolyX> out(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        PolyX term = s[n - 1].shifted();
        if (n >= 2)
            term -= s[n - 2] * alpha;
        out[n] = std::move(term);
    }
    return SeriesZ(order, std::move(out));
}

} // namespace

SeriesZ::SeriesZ(std::size_t order)
    : coeffs_(order + 1)
{
}

SeriesZ::SeriesZ(std::size_t order, std::vector<PolyX> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != order + 1)
        throw std::invalid_argument("series needs order + 1 coefficients");
}

SeriesZ SeriesZ::one(std::size_t order)
{
    std::vector<PolyX> v(order + 1);
    v[0] = PolyX::constant(Rational(1));
    return SeriesZ(order, std::move(v));
}

SeriesZ series_add(const SeriesZ& f, const SeriesZ& g)
{
    require_same_order(f, g);
    std::vector<PolyX> v(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n)
        v[n] = f[n] + g[n];
    return SeriesZ(f.order(), std::move(v));
}

SeriesZ series_mul(const SeriesZ& f, const SeriesZ& g)
{
    require_same_order(f, g);
    const std::size_t order = f.order();
    std::vector<PolyX> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            v[i + j] += f[i] * g[j];
    }
    return SeriesZ(order, std::move(v));
}

SeriesZ substitute_quadratic(std::span<const Rational> c, const Rational& alpha,
                             std::size_t order)
{
    if (c.size() < order + 1)
        throw std::invalid_argument("need " + std::to_string(order + 1) +
                                    " coefficients, got " + std::to_string(c.size()));
    if (c[0] != 1)
        throw std::invalid_argument("leading coefficient c_0 must be 1");

    // acc <- c_k + q * acc for k = order ... 0; terms beyond z^order never
    // feed back, so truncating every step is exact.
    SeriesZ acc(order);
    for (std::size_t k = order + 1; k-- > 0;) {
        SeriesZ next = mul_by_quadratic(acc, alpha);
        std::vector<PolyX> v = next.coeffs();
        v[0] += PolyX::constant(c[k]);
        acc = SeriesZ(order, std::move(v));
    }
    return acc;
}

} // namespace orthogen
