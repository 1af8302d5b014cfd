#include <orthogen/orthocheck.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orthogen {

MomentSeq moments_from_recursion(const Recursion& rec, std::size_t max_degree)
{
    return moments_from_recursion(rec, max_degree, max_degree / 2 + 1);
}

MomentSeq moments_from_recursion(const Recursion& rec, std::size_t max_degree,
                                 std::size_t dimension)
{
    if (dimension < max_degree / 2 + 1)
        throw std::invalid_argument("truncation dimension too small for moment " +
                                    std::to_string(max_degree));
    if (dimension > rec.order())
        throw std::invalid_argument("recursion of order " + std::to_string(rec.order()) +
                                    " is too short for moment " + std::to_string(max_degree));

    std::vector<Rational> v(dimension);
    v[0] = 1;
    std::vector<Rational> next(dimension);
    MomentSeq out;
    out.moments.reserve(max_degree + 1);
    out.moments.push_back(v[0]);
    for (std::size_t k = 1; k <= max_degree; ++k) {
        // Only indices <= k can be nonzero after k steps.
        const std::size_t live = std::min(dimension, k + 1);
        for (std::size_t i = 0; i < live; ++i) {
            Rational acc = rec.beta(i) * v[i];
            if (i >= 1)
                acc += v[i - 1];
            if (i + 1 < dimension)
                acc += rec.omega(i + 1) * v[i + 1];
            next[i] = std::move(acc);
        }
        std::swap(v, next);
        out.moments.push_back(v[0]);
    }
    return out;
}

RationalMatrix gram(const MonicFamily& family, const MomentSeq& mom)
{
    const std::size_t size = family.size();
    if (mom.moments.size() < 2 * size - 1)
        throw std::invalid_argument("gram of order " + std::to_string(family.order()) +
                                    " needs moments up to degree " +
                                    std::to_string(2 * family.order()));

    RationalMatrix g(size, std::vector<Rational>(size));
    for (std::size_t j = 0; j < size; ++j) {
        // Pair P_j with the moment functional first: L_j[s] = sum_r [x^r]P_j m_{r+s}.
        const auto& pj = family[j].coeffs();
        for (std::size_t k = j; k < size; ++k) {
            const auto& pk = family[k].coeffs();
            Rational acc(0);
            for (std::size_t r = 0; r < pj.size(); ++r) {
                if (is_zero(pj[r]))
                    continue;
                for (std::size_t s = 0; s < pk.size(); ++s)
                    acc += pj[r] * pk[s] * mom[r + s];
            }
            g[j][k] = acc;
            g[k][j] = std::move(acc);
        }
    }
    return g;
}

OrthogonalityReport verify_orthogonality(const MonicFamily& family, const Recursion& rec)
{
    const std::size_t order = family.order();
    if (rec.order() < order + 1)
        throw std::invalid_argument("recursion must reach omega_" + std::to_string(order) +
                                    " to verify a family of order " + std::to_string(order));

    const RationalMatrix g = gram(family, moments_from_recursion(rec, 2 * order));

    OrthogonalityReport report;
    report.order = order;
    auto fail = [&](std::size_t j, std::size_t k, OrthoCheck check) {
        report.pass = false;
        report.first_failure = {j, k};
        report.value = g[j][k];
        report.failed_check = check;
        return report;
    };

    for (std::size_t j = 0; j <= order; ++j)
        for (std::size_t k = j + 1; k <= order; ++k)
            if (!is_zero(g[j][k]))
                return fail(j, k, OrthoCheck::off_diagonal);

    Rational norm(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n >= 1)
            norm *= rec.omega(n);
        if (g[n][n] != norm)
            return fail(n, n, OrthoCheck::norm_product);
        if (!is_positive(g[n][n]))
            return fail(n, n, OrthoCheck::positivity);
        report.diagonal.push_back(g[n][n]);
    }
    report.pass = true;
    return report;
}

} // namespace orthogen
