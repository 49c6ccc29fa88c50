#include <algorithm>
#include <cmath>
#include <sstream>

#include "fockbench/realization.hpp"

namespace fockbench {

namespace {

using Matrix4 = Eigen::Matrix4d;

// Indices of the concepts paired by each conjunction.
constexpr std::array<std::pair<Concept, Concept>, 4> kPairs{{
    {Concept::A, Concept::B},
    {Concept::A, Concept::Bp},
    {Concept::Ap, Concept::B},
    {Concept::Ap, Concept::Bp},
}};

// Canonical coordinate of |C> in the range of M_X (x) M_Y: index 4 (inside
// M) for A and B, index 0 (inside 1 - M) for A' and B'.
constexpr std::array<int, 4> kStateIndex{8 * 4 + 4, 8 * 4 + 0, 8 * 0 + 4, 8 * 0 + 0};

constexpr double kNegativeEigenSlack = 1e-10;
constexpr double kTargetTol = 1e-8;

// Rows of the returned matrix have Gram matrix G.
Matrix4 gram_factor(const Matrix4& gram, double& min_eigen) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(gram);
    Eigen::Vector4d lambda = es.eigenvalues();
    min_eigen = lambda.minCoeff();
    for (int i = 0; i < 4; ++i) lambda(i) = std::sqrt(std::max(0.0, lambda(i)));
    return es.eigenvectors() * lambda.asDiagonal();
}

std::size_t idx(Concept c) { return static_cast<std::size_t>(c); }

}  // namespace

Matrix8c HilbertRealization::projector() {
    Matrix8c m = Matrix8c::Zero();
    for (int i = 4; i < 8; ++i) m(i, i) = 1.0;
    return m;
}

HilbertRealization realize_vectors(const MembershipRecord& record, const FockFit& fit) {
    const std::array<double, 4> mu{record.mu_A, record.mu_B, record.mu_Ap, record.mu_Bp};
    const InterferenceMatrix c = fit.interference();

    Matrix4 h = Matrix4::Zero();
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [x, y] = kPairs[k];
        h(idx(x), idx(y)) = c[k];
        h(idx(y), idx(x)) = c[k];
    }
    Matrix4 inside = h;
    Matrix4 outside = -h;
    for (int i = 0; i < 4; ++i) {
        inside(i, i) = mu[static_cast<std::size_t>(i)];
        outside(i, i) = 1.0 - mu[static_cast<std::size_t>(i)];
    }

    double min_in = 0.0;
    double min_out = 0.0;
    const Matrix4 v = gram_factor(inside, min_in);
    const Matrix4 u = gram_factor(outside, min_out);

    HilbertRealization out;
    for (int i = 0; i < 4; ++i) {
        Vector8c vec;
        for (int j = 0; j < 4; ++j) {
            vec(j) = u(i, j);
            vec(4 + j) = v(i, j);
        }
        out.concepts[static_cast<std::size_t>(i)] = vec;
    }

    out.state = Vector64c::Zero();
    for (std::size_t k = 0; k < 4; ++k) {
        out.state(kStateIndex[k]) = std::sqrt(std::max(0.0, fit.params[k].alpha));
    }

    const RealizationCheck check = check_realization(out, record, fit);
    if (std::min(min_in, min_out) < -kNegativeEigenSlack ||
        std::max({check.orthonormality, check.membership, check.interference, check.sector2,
                  check.state_norm}) > kTargetTol) {
        std::ostringstream os;
        os << "no realization found for exemplar '" << record.exemplar_id
           << "': interference is not carried by orthonormal vectors (min Gram eigenvalue "
           << std::min(min_in, min_out) << ", orthonormality error " << check.orthonormality
           << ", membership error " << check.membership << ", interference error "
           << check.interference << ", sector-2 error " << check.sector2 << ")";
        throw NoRealizationError(os.str(), check);
    }
    return out;
}

RealizationCheck check_realization(const HilbertRealization& r, const MembershipRecord& record,
                                   const FockFit& fit) {
    RealizationCheck check;
    const Matrix8c m = HilbertRealization::projector();
    const std::array<double, 4> mu{record.mu_A, record.mu_B, record.mu_Ap, record.mu_Bp};

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Complex ip = r.concepts[i].dot(r.concepts[j]);
            check.orthonormality =
                std::max(check.orthonormality, std::abs(ip - Complex(i == j ? 1.0 : 0.0)));
        }
        const double membership = r.concepts[i].dot(m * r.concepts[i]).real();
        check.membership = std::max(check.membership, std::abs(membership - mu[i]));
    }

    const InterferenceMatrix c = fit.interference();
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [x, y] = kPairs[k];
        const double re = r[x].dot(m * r[y]).real();
        check.interference = std::max(check.interference, std::abs(re - c[k]));

        // <C|M_X (x) M_Y|C>: mass of |C> on the product of the two ranges.
        const int xo = (x == Concept::A) ? 4 : 0;
        const int yo = (y == Concept::B) ? 4 : 0;
        double p = 0.0;
        for (int i = xo; i < xo + 4; ++i) {
            for (int j = yo; j < yo + 4; ++j) p += std::norm(r.state(8 * i + j));
        }
        check.sector2 = std::max(check.sector2, std::abs(p - fit.params[k].alpha));
    }
    check.state_norm = std::abs(r.state.norm() - 1.0);
    return check;
}

}  // namespace fockbench
