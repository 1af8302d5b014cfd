#ifndef ORTHOGEN_FAVARD_HPP
#define ORTHOGEN_FAVARD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <orthogen/genfun.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

/// Coefficients of x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1}.
///
/// betas holds beta_0 ... beta_{N-1}; omegas holds omega_1 ... omega_{N-1}
/// (there is no omega_0 since P_{-1} = 0), so omegas[0] is omega_1. Use
/// omega(n) to index by the mathematical subscript.
struct Recursion {
    std::vector<Rational> betas;
    std::vector<Rational> omegas;

    Recursion() = default;
    Recursion(std::vector<Rational> betas, std::vector<Rational> omegas);

    // Number of forward steps the recursion supports (N).
    std::size_t order() const { return betas.size(); }

    const Rational& beta(std::size_t n) const { return betas.at(n); }
    const Rational& omega(std::size_t n) const;

    // First `order` steps: beta_0..beta_{order-1}, omega_1..omega_{order-1}.
    Recursion truncated(std::size_t order) const;

    friend bool operator==(const Recursion&, const Recursion&) = default;
};

/// The residual x P_n - P_{n+1} - beta_n P_n - omega_n P_{n-1} is nonzero.
class NotThreeTermError : public std::domain_error {
public:
    explicit NotThreeTermError(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Reads beta_n and omega_n off the top of x P_n - P_{n+1} and requires the
/// remaining residual to vanish. Needs at least P_0, P_1, P_2.
Recursion fit(const MonicFamily& family);

struct PositivityCheck {
    bool positive = true;
    std::optional<std::size_t> first_failure; // subscript n of omega_n
};

PositivityCheck check_positive(const Recursion& rec);

// Q_n(x) = r^n P_n(x / r); beta scales by r and omega by r^2.
MonicFamily rescale(const MonicFamily& family, const Rational& r);

} // namespace orthogen

#endif
