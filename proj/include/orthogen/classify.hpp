#ifndef ORTHOGEN_CLASSIFY_HPP
#define ORTHOGEN_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

// P_n(x) = H_n(sqrt(scale_sq) x) in monic normalization; scale_sq = a / (2 alpha).
struct HermiteVerdict {
    Rational a;
    Rational scale_sq;
    friend bool operator==(const HermiteVerdict&, const HermiteVerdict&) = default;
};

// lambda > -1/2, lambda != 0, b > 0; scale_sq = b / (4 alpha).
struct UltrasphericalVerdict {
    Rational lambda;
    Rational b;
    Rational scale_sq;
    friend bool operator==(const UltrasphericalVerdict&, const UltrasphericalVerdict&) = default;
};

// Chebyshev polynomials of the first kind; scale_sq = b / (4 alpha).
struct ChebyshevTVerdict {
    Rational b;
    Rational scale_sq;
    friend bool operator==(const ChebyshevTVerdict&, const ChebyshevTVerdict&) = default;
};

enum class RejectReason {
    zero_coefficient,
    nonlinear_dn,
    nonpositive_omega,
    nonzero_beta,
    alpha_nonpositive,
    lambda_out_of_range,
};

std::string_view to_string(RejectReason reason);
std::optional<RejectReason> parse_reject_reason(std::string_view text);

// index is set for the reasons that name a position.
struct Rejected {
    RejectReason reason;
    std::optional<std::size_t> index;
    friend bool operator==(const Rejected&, const Rejected&) = default;
};

using Verdict = std::variant<HermiteVerdict, UltrasphericalVerdict, ChebyshevTVerdict, Rejected>;

inline bool is_accepted(const Verdict& v) { return !std::holds_alternative<Rejected>(v); }

// n d_n = a + b (n - 1) for n >= 2 with d_n = c_n / c_{n-1}.
struct LinearDn {
    Rational a;
    Rational b;
    friend bool operator==(const LinearDn&, const LinearDn&) = default;
};

/// Solves (a, b) from n = 2, 3 and checks every n >= 4 up to the end of c.
/// Returns Rejected{zero_coefficient} or Rejected{nonlinear_dn} on failure.
/// Throws std::invalid_argument when c has fewer than five entries.
std::variant<LinearDn, Rejected> fit_linear_dn(const std::vector<Rational>& c);

class DegenerateParametersError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// omega_n = alpha n ((n-1) b + 2a) / (((n-1) b + a)(n b + a)), n >= 1.
///
/// At n = 1 the factor a cancels and the value is 2 alpha / (a + b), which
/// also covers a = 0 (omega_1 = 2 alpha / b for Chebyshev-T). A vanishing
/// denominator throws DegenerateParametersError.
Rational omega_formula(const Rational& a, const Rational& b, const Rational& alpha, std::size_t n);

/// Decides whether F(xz - alpha z^2) generates an orthogonal family. Checks
/// are certified to the given order (>= 5): d_n linearity for explicit rules
/// and omega_n > 0 for 1 <= n < order.
Verdict classify(const CoeffRule& rule, const Rational& alpha, std::size_t order);

/// Inverse direction: names the family from its recursion coefficients.
/// Needs omega_1 ... omega_3 at least.
Verdict identify_from_recursion(const Recursion& rec, const Rational& alpha);

} // namespace orthogen

#endif
