#ifndef ORTHOGEN_TESTS_SUPPORT_HPP
#define ORTHOGEN_TESTS_SUPPORT_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/poly.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

// doctest prints these on failure.
inline std::ostream& operator<<(std::ostream& os, const PolyX& p) { return os << to_display_string(p); }

inline std::ostream& operator<<(std::ostream& os, const std::vector<Rational>& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << to_string(v[i]);
    return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Recursion& r)
{
    return os << "betas " << r.betas << " omegas " << r.omegas;
}

} // namespace orthogen

namespace orthogen::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> items)
{
    std::vector<Rational> out;
    for (const char* s : items)
        out.push_back(parse_rational(s));
    return out;
}

inline PolyX P(std::initializer_list<const char*> ascending) { return PolyX(Qs(ascending)); }

inline MonicFamily family_of(std::initializer_list<std::initializer_list<const char*>> polys)
{
    std::vector<PolyX> v;
    for (auto p : polys)
        v.push_back(P(p));
    return MonicFamily(std::move(v));
}

// Small rationals p/q with |p| <= max_num, 1 <= q <= max_den, fixed seed per
// generator so failures reproduce.
class RationalGen {
public:
    explicit RationalGen(unsigned seed, int max_num = 5, int max_den = 4)
        : rng_(seed)
        , num_(-max_num, max_num)
        , den_(1, max_den)
    {
    }

    Rational operator()()
    {
        Rational r(num_(rng_), den_(rng_));
        r.canonicalize();
        return r;
    }

    Rational nonzero()
    {
        for (;;) {
            Rational r = (*this)();
            if (!is_zero(r))
                return r;
        }
    }

    PolyX poly(std::size_t max_degree)
    {
        std::vector<Rational> c(std::uniform_int_distribution<std::size_t>(0, max_degree)(rng_) + 1);
        for (auto& v : c)
            v = (*this)();
        return PolyX(std::move(c));
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
    std::uniform_int_distribution<int> num_;
    std::uniform_int_distribution<int> den_;
};

// ---- independent oracles -----------------------------------------------------

inline Integer binomial(std::size_t n, std::size_t k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(std::size_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// [z^n] sum_k c_k (x z - alpha z^2)^k by the binomial theorem term by term:
// (xz)^{k-j} (-alpha z^2)^j lands on z^{k+j} with x-degree k - j.
inline std::vector<PolyX> binomial_expansion(const std::vector<Rational>& c, const Rational& alpha,
                                             std::size_t order)
{
    std::vector<std::vector<Rational>> coeffs(order + 1, std::vector<Rational>(order + 1));
    for (std::size_t k = 0; k < c.size() && k <= order; ++k)
        for (std::size_t j = 0; j <= k && k + j <= order; ++j)
            coeffs[k + j][k - j] += c[k] * Rational(binomial(k, j)) * pow(-alpha, static_cast<unsigned>(j));
    std::vector<PolyX> out;
    for (auto& v : coeffs)
        out.emplace_back(std::move(v));
    return out;
}

// Monic Hermite He_n = sum_j (-1)^j n! / (j! (n-2j)! 2^j) x^{n-2j}.
inline PolyX monic_hermite(std::size_t n)
{
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        Rational term(factorial(n), factorial(j) * factorial(n - 2 * j) * (Integer(1) << j));
        term.canonicalize();
        c[n - 2 * j] = j % 2 ? Rational(-term) : term;
    }
    return PolyX(std::move(c));
}

// Monic Chebyshev-T: T_n / 2^{n-1} with
// T_n(x) = (n/2) sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^{n-2k}.
inline PolyX monic_chebyshev_t(std::size_t n)
{
    if (n == 0)
        return PolyX::constant(Rational(1));
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        Rational term(Integer(n) * factorial(n - k - 1) * (Integer(1) << (n - 2 * k)),
                      2 * factorial(k) * factorial(n - 2 * k));
        term.canonicalize();
        c[n - 2 * k] = k % 2 ? Rational(-term) : term;
    }
    Rational lead(Integer(1) << (n - 1));
    for (auto& v : c)
        v /= lead;
    return PolyX(std::move(c));
}

// c_n = c prod_{i=1}^{n-1} (a + i b) / n!, evaluated as a product from scratch.
inline std::vector<Rational> product_formula_coeffs(const Rational& a, const Rational& b,
                                                    const Rational& c, std::size_t order)
{
    std::vector<Rational> out(order + 1);
    out[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational prod(1);
        for (std::size_t i = 1; i < n; ++i)
            prod *= a + Rational(i) * b;
        out[n] = c * prod / Rational(factorial(n));
    }
    return out;
}

} // namespace orthogen::testing

#endif
