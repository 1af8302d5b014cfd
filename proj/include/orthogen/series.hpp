#ifndef ORTHOGEN_SERIES_HPP
#define ORTHOGEN_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <orthogen/poly.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

// Truncated power series in z with PolyX coefficients, terms z^0 ... z^order.
// The truncation order is part of the value; arithmetic between series of
// different orders throws std::invalid_argument.
class SeriesZ {
public:
    explicit SeriesZ(std::size_t order);
    SeriesZ(std::size_t order, std::vector<PolyX> coeffs);

    static SeriesZ one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const PolyX& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<PolyX>& coeffs() const { return coeffs_; }

    friend bool operator==(const SeriesZ&, const SeriesZ&) = default;

private:
    std::vector<PolyX> coeffs_;
};

SeriesZ series_add(const SeriesZ& f, const SeriesZ& g);

// Cauchy product truncated at the shared order.
SeriesZ series_mul(const SeriesZ& f, const SeriesZ& g);

// sum_k c_k (x z - alpha z^2)^k truncated at z^order. Evaluated Horner-style
// on the outer series, so each step is one multiplication by the quadratic.
// Requires c.size() > order and c[0] == 1.
SeriesZ substitute_quadratic(std::span<const Rational> c, const Rational& alpha,
                             std::size_t order);

} // namespace orthogen

#endif
