#ifndef ORTHOGEN_GENFUN_HPP
#define ORTHOGEN_GENFUN_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <orthogen/poly.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

/// Coefficient rule c_n = c * prod_{i=1}^{n-1}(a + i b) / n!, c_0 = 1.
/// Equivalently c_1 = c and c_n = ((a + (n-1) b) / n) c_{n-1} for n >= 2.
struct AbcRule {
    Rational a;
    Rational b;
    Rational c;
    friend bool operator==(const AbcRule&, const AbcRule&) = default;
};

/// Literal coefficients c_0, c_1, ...; c_0 must be 1.
struct ExplicitRule {
    std::vector<Rational> values;
    friend bool operator==(const ExplicitRule&, const ExplicitRule&) = default;
};

enum class NamedKind { exp, geometric, log };

/// Shorthand for the three canonical choices of F:
///   exp       e^{az}            -> (a, 0, a)
///   geometric (1 - bz)^{-1}     -> (b, b, b)
///   log       1 + ln(1/(1-bz))  -> (0, b, b)
struct NamedRule {
    NamedKind kind;
    Rational param;
    friend bool operator==(const NamedRule&, const NamedRule&) = default;
};

using CoeffRule = std::variant<AbcRule, ExplicitRule, NamedRule>;

AbcRule desugar(const NamedRule& rule);

// The (a, b, c) triple behind a rule, if it has one.
std::optional<AbcRule> as_abc(const CoeffRule& rule);

// Throws std::invalid_argument when the rule violates its invariants.
void validate(const CoeffRule& rule);

struct GFSpec {
    CoeffRule rule;
    Rational alpha;
    std::size_t order = 12;
};

/// P_0 ... P_N with P_0 = 1 and P_n monic of degree exactly n. Construction
/// checks those two facts and throws std::invalid_argument otherwise.
class MonicFamily {
public:
    explicit MonicFamily(std::vector<PolyX> polys);

    std::size_t order() const { return polys_.size() - 1; }
    std::size_t size() const { return polys_.size(); }
    const PolyX& operator[](std::size_t n) const { return polys_[n]; }
    const std::vector<PolyX>& polys() const { return polys_; }

    // P_0 ... P_n.
    MonicFamily truncated(std::size_t n) const;

    friend bool operator==(const MonicFamily&, const MonicFamily&) = default;

private:
    std::vector<PolyX> polys_;
};

/// c_n = 0 for some 1 <= n <= N, so P_n is undefined.
class ZeroCoefficientError : public std::domain_error {
public:
    explicit ZeroCoefficientError(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

std::vector<Rational> coeffs_from_rule(const CoeffRule& rule, std::size_t order);

// Index of the first zero among c_1 ... c_{size-1}, if any.
std::optional<std::size_t> first_zero_coefficient(const std::vector<Rational>& c);

/// P_n = [z^n] F(xz - alpha z^2) / c_n for n = 0 ... order.
/// Throws ZeroCoefficientError if some c_n vanishes and std::invalid_argument
/// for alpha = 0 or an invalid rule.
MonicFamily expand(const GFSpec& spec);

// F_C(z) = 1 + C (F(z) - 1); the polynomials do not change.
CoeffRule shift_rule(const CoeffRule& rule, const Rational& C);

/// Taylor coefficients of the closed forms
///   a, b != 0 : 1 + (c/a)((1 - bz)^{-a/b} - 1)
///   a = 0     : 1 + (c/b) ln(1/(1 - bz))
///   b = 0     : 1 + (c/a)(e^{az} - 1)
/// each through its own series recurrence. Agrees with coeffs_from_rule.
std::vector<Rational> closed_form_coeffs(const Rational& a, const Rational& b,
                                         const Rational& c, std::size_t order);

} // namespace orthogen

#endif
