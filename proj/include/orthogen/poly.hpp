#ifndef ORTHOGEN_POLY_HPP
#define ORTHOGEN_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <orthogen/rational.hpp>

namespace orthogen {

/// Univariate polynomial in x with exact rational coefficients.
///
/// Coefficients are stored in ascending degree order and trimmed so the last
/// stored entry is nonzero; the zero polynomial has no coefficients at all.
class PolyX {
public:
    PolyX() = default;
    explicit PolyX(std::vector<Rational> coeffs);
    PolyX(std::initializer_list<Rational> coeffs);

    static PolyX constant(const Rational& c);
    static PolyX monomial(std::size_t degree, const Rational& c = Rational(1));
    static PolyX x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of a nonzero polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    bool is_monic() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x0) const;

    PolyX& operator+=(const PolyX& other);
    PolyX& operator-=(const PolyX& other);
    PolyX& operator*=(const Rational& s);

    // Multiplication by x.
    PolyX shifted() const;

    // p(s x), i.e. coefficient k scaled by s^k.
    PolyX scale_argument(const Rational& s) const;

    // p(-x)
    PolyX reflected() const { return scale_argument(Rational(-1)); }

    friend bool operator==(const PolyX&, const PolyX&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

PolyX operator+(PolyX p, const PolyX& q);
PolyX operator-(PolyX p, const PolyX& q);
PolyX operator-(PolyX p);
PolyX operator*(const PolyX& p, const PolyX& q);
PolyX operator*(PolyX p, const Rational& s);
PolyX operator*(const Rational& s, PolyX p);

inline PolyX poly_add(const PolyX& p, const PolyX& q) { return p + q; }
inline PolyX poly_mul(const PolyX& p, const PolyX& q) { return p * q; }
inline Rational poly_eval(const PolyX& p, const Rational& x0) { return p(x0); }

// Human-readable form such as "x^3 - 3*x" or "x^2 - 1/2".
std::string to_display_string(const PolyX& p);

} // namespace orthogen

#endif
