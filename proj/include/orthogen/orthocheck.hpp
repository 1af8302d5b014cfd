#ifndef ORTHOGEN_ORTHOCHECK_HPP
#define ORTHOGEN_ORTHOCHECK_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/rational.hpp>

namespace orthogen {

// m_0 ... m_K of a normalized measure (m_0 = 1).
struct MomentSeq {
    std::vector<Rational> moments;

    std::size_t max_degree() const { return moments.size() - 1; }
    const Rational& operator[](std::size_t k) const { return moments[k]; }
    friend bool operator==(const MomentSeq&, const MomentSeq&) = default;
};

/// m_k = (J^k)_{00} for the Jacobi matrix J with diagonal beta, subdiagonal 1
/// and superdiagonal omega, by repeated tridiagonal products on e_0.
///
/// A closed walk of length k from index 0 never passes index k/2, so a
/// matrix of dimension floor(K/2) + 1 is exact; this needs rec.order() >
/// floor(K/2), i.e. K <= 2 rec.order() - 1. Throws std::invalid_argument
/// otherwise.
MomentSeq moments_from_recursion(const Recursion& rec, std::size_t max_degree);

// Same, with an explicit truncation dimension (at least floor(K/2) + 1 and
// at most rec.order()). Exposed so the truncation bound can be tested.
MomentSeq moments_from_recursion(const Recursion& rec, std::size_t max_degree,
                                 std::size_t dimension);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// G_{jk} = sum_{r,s} [x^r]P_j [x^s]P_k m_{r+s}. Needs moments up to 2N.
RationalMatrix gram(const MonicFamily& family, const MomentSeq& mom);

enum class OrthoCheck { off_diagonal, norm_product, positivity };

struct OrthogonalityReport {
    bool pass = false;
    std::size_t order = 0;
    std::vector<Rational> diagonal;
    // Set on failure: the first offending (j, k), the Gram entry there and
    // which assertion tripped.
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
    std::optional<Rational> value;
    std::optional<OrthoCheck> failed_check;
};

/// Checks the Gram matrix of family under the moments of rec: off-diagonal
/// entries vanish, <P_n, P_n> = omega_1 ... omega_n, and every norm is
/// positive. rec must reach omega_N for a family of order N.
OrthogonalityReport verify_orthogonality(const MonicFamily& family, const Recursion& rec);

} // namespace orthogen

#endif
