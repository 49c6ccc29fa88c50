#pragma once

// Explicit vectors in C^8 and C^8 (x) C^8 realizing a fitted exemplar.
//
// M projects onto canonical coordinates 5..8 (indices 4..7). Each concept
// vector splits as |X> = u_X (+) v_X with u_X on coordinates 1..4 and v_X on
// 5..8. Orthonormality, <X|M|X> = mu(X) and <X|M|Y> = H_XY hold iff the Gram
// matrices
//
//   G_in  = diag(mu) + H          (of the v's)
//   G_out = diag(1 - mu) - H      (of the u's)
//
// are positive semidefinite. H is taken real, carrying the fitted
// interference on the four (X, Y) conjunction pairs and zero on (A, A') and
// (B, B'); the vectors are read off eigendecompositions of G_in and G_out.
// The sector-2 state places sqrt(alpha_XY) on one coordinate inside the
// range of each product projector M_X (x) M_Y.

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "fockbench/domain.hpp"
#include "fockbench/fockmodel.hpp"

namespace fockbench {

using Complex = std::complex<double>;
using Vector8c = Eigen::Matrix<Complex, 8, 1>;
using Vector64c = Eigen::Matrix<Complex, 64, 1>;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;

// Concept order inside a realization.
enum class Concept { A = 0, B = 1, Ap = 2, Bp = 3 };

struct HilbertRealization {
    std::array<Vector8c, 4> concepts;  // |A>, |B>, |A'>, |B'>
    Vector64c state;                   // |C>, index 8 * i + j for |i> (x) |j>

    const Vector8c& operator[](Concept c) const noexcept {
        return concepts[static_cast<std::size_t>(c)];
    }

    // M = sum_{i=5..8} |i><i|
    static Matrix8c projector();
};

// Deviations of a realization from its targets.
struct RealizationCheck {
    double orthonormality = 0.0;  // max |<X|Y> - delta_XY|
    double membership = 0.0;      // max |<X|M|X> - mu(X)|
    double interference = 0.0;    // max |Re<X|M|Y> - beta cos(phi)| over conjunction pairs
    double sector2 = 0.0;         // max |<C|M_X (x) M_Y|C> - alpha_XY|
    double state_norm = 0.0;      // | ||C|| - 1 |
};

class NoRealizationError : public Error {
public:
    NoRealizationError(const std::string& what, RealizationCheck achieved)
        : Error(what), achieved_(achieved) {}
    const RealizationCheck& achieved() const noexcept { return achieved_; }

private:
    RealizationCheck achieved_;
};

// Throws NoRealizationError when the fitted interference cannot be carried
// by orthonormal vectors (or the result misses its targets by more than 1e-8).
HilbertRealization realize_vectors(const MembershipRecord& record, const FockFit& fit);

RealizationCheck check_realization(const HilbertRealization& realization,
                                   const MembershipRecord& record, const FockFit& fit);

}  // namespace fockbench
