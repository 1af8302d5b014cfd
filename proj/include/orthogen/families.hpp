#ifndef ORTHOGEN_FAMILIES_HPP
#define ORTHOGEN_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

enum class FamilyKind { hermite, charlier, legendre, ultraspherical, chebyshev_t, chebyshev_u };

// Reference families in monic normalization: Hermite for the standard
// Gaussian, Charlier for Poisson(1), the rest on [-1, 1] with weight
// (1 - x^2)^{lambda - 1/2}. lambda is read only for ultraspherical.
struct FamilyId {
    FamilyKind kind;
    Rational lambda;

    static FamilyId hermite() { return {FamilyKind::hermite, Rational(0)}; }
    static FamilyId charlier() { return {FamilyKind::charlier, Rational(0)}; }
    static FamilyId legendre() { return {FamilyKind::legendre, Rational(0)}; }
    static FamilyId chebyshev_t() { return {FamilyKind::chebyshev_t, Rational(0)}; }
    static FamilyId chebyshev_u() { return {FamilyKind::chebyshev_u, Rational(0)}; }
    static FamilyId ultraspherical(const Rational& lambda) { return {FamilyKind::ultraspherical, lambda}; }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string family_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

/// beta_0 ... beta_{N-1}, omega_1 ... omega_{N-1}. Throws
/// std::invalid_argument for N < 2 or lambda <= -1/2 or lambda = 0.
Recursion recursion_of(const FamilyId& id, std::size_t order);

/// P_{n+1} = (x - beta_n) P_n - omega_n P_{n-1} with P_{-1} = 0, P_0 = 1,
/// for n < order.
MonicFamily polys_from_recursion(const Recursion& rec, std::size_t order);

/// k-th moment of the normalized orthogonality measure, computed without the
/// recursion: double factorials (Gaussian), the Bell triangle (Poisson(1)),
/// prod_{i=1}^{j} (2i - 1)/(2 lambda + 2i) for the symmetric beta weight
/// (lambda = 0 for Chebyshev-T, 1/2 for Legendre, 1 for Chebyshev-U).
Rational moment_oracle(const FamilyId& id, std::size_t k);

} // namespace orthogen

#endif
