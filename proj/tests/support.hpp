#pragma once

// Shared generators and dense reference arithmetic for the test suites.

#include <array>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "fockbench/domain.hpp"
#include "fockbench/fockmodel.hpp"
#include "fockbench/realization.hpp"

namespace fbtest {

using fockbench::ConjunctionParams;
using fockbench::MembershipRecord;

inline MembershipRecord make_record(std::array<double, 8> w, std::string exemplar = "x") {
    MembershipRecord r;
    r.exemplar_id = std::move(exemplar);
    r.mu_A = w[0];
    r.mu_B = w[1];
    r.mu_Ap = w[2];
    r.mu_Bp = w[3];
    r.mu_AandB = w[4];
    r.mu_AandBp = w[5];
    r.mu_ApandB = w[6];
    r.mu_ApandBp = w[7];
    return r;
}

inline MembershipRecord uniform_record() {
    return make_record({0.5, 0.5, 0.5, 0.5, 0.25, 0.25, 0.25, 0.25});
}

inline MembershipRecord random_record(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::array<double, 8> w{};
    for (auto& x : w) x = u(rng);
    return make_record(w);
}

// Atoms drawn from a flat Dirichlet; every weight follows from the atoms.
inline std::array<double, 4> random_atoms(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> a{};
    double s = 0.0;
    for (auto& x : a) s += (x = e(rng));
    for (auto& x : a) x /= s;
    return a;
}

inline MembershipRecord record_from_atoms(const std::array<double, 4>& a) {
    // atoms: AB, AB', A'B, A'B'
    return make_record({a[0] + a[1], a[0] + a[2], a[2] + a[3], a[1] + a[3], a[0], a[1], a[2],
                        a[3]});
}

// Explicit orthonormal A, B, A', B' in C^8 drawn at random; singles and
// interference follow from M = projector onto coordinates 5..8.
struct HilbertSample {
    std::array<Eigen::VectorXcd, 4> vectors;
    std::array<double, 4> mu{};       // A, B, A', B'
    std::array<double, 4> interf{};   // Re<X|M|Y> for AB, AB', A'B, A'B'
};

inline HilbertSample random_hilbert(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd z(8, 4);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) z(i, j) = {g(rng), g(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(8, 4);

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int i = 4; i < 8; ++i) m(i, i) = 1.0;

    HilbertSample s;
    for (int k = 0; k < 4; ++k) s.vectors[static_cast<std::size_t>(k)] = q.col(k);
    for (int k = 0; k < 4; ++k) {
        s.mu[static_cast<std::size_t>(k)] = (q.col(k).adjoint() * m * q.col(k))(0).real();
    }
    constexpr std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {0, 3}, {2, 1}, {2, 3}}};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [x, y] = pairs[k];
        s.interf[k] = (q.col(x).adjoint() * m * q.col(y))(0).real();
    }
    return s;
}

// A record produced by the forward model from genuine Hilbert space
// parameters: random vectors, random sector-2 weights on the simplex.
struct ModelSample {
    MembershipRecord record;
    std::array<ConjunctionParams, 4> params{};
};

inline ModelSample random_model_record(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto h = random_hilbert(rng);
    std::array<double, 4> alpha{};
    {
        std::exponential_distribution<double> e(1.0);
        double s = 0.0;
        for (auto& a : alpha) s += (a = e(rng));
        for (auto& a : alpha) a /= s;
    }
    ModelSample out;
    const std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {0, 3}, {2, 1}, {2, 3}}};
    std::array<double, 4> values{};
    for (std::size_t k = 0; k < 4; ++k) {
        ConjunctionParams p;
        p.m2 = u(rng);
        p.alpha = alpha[k];
        // beta cos(phi) = interference, with phi drawn so that |beta| <= 1
        const double c = h.interf[k];
        const double phi_max = std::acos(std::min(1.0, std::abs(c))) * 180.0 / M_PI;
        const double phi = u(rng) * phi_max;
        p.phi_deg = c >= 0 ? phi : 180.0 - phi;
        const double cosphi = std::cos(p.phi_deg * M_PI / 180.0);
        p.beta = cosphi == 0.0 ? 0.0 : c / cosphi;
        out.params[k] = p;
        const auto [x, y] = pairs[k];
        values[k] = fockbench::eval_fock(p, h.mu[static_cast<std::size_t>(x)],
                                         h.mu[static_cast<std::size_t>(y)])
                        .value;
    }
    out.record = make_record(
        {h.mu[0], h.mu[1], h.mu[2], h.mu[3], values[0], values[1], values[2], values[3]});
    return out;
}

// Dense reference quadratic forms for a realization.
struct DenseCheck {
    double orthonormality = 0.0;
    std::array<double, 4> membership{};  // <X|M|X>
    std::array<double, 4> interf{};      // Re<X|M|Y>, conjunction order
    std::array<double, 4> sector2{};     // <C|M_X (x) M_Y|C>, conjunction order
    double state_norm = 0.0;
};

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline DenseCheck dense_check(const fockbench::HilbertRealization& r) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int i = 4; i < 8; ++i) m(i, i) = 1.0;
    const Eigen::MatrixXcd mc = Eigen::MatrixXcd::Identity(8, 8) - m;

    DenseCheck out;
    Eigen::MatrixXcd vecs(8, 4);
    for (int k = 0; k < 4; ++k) vecs.col(k) = r.concepts[static_cast<std::size_t>(k)];
    const Eigen::MatrixXcd gram = vecs.adjoint() * vecs;
    out.orthonormality = (gram - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
    for (int k = 0; k < 4; ++k) {
        out.membership[static_cast<std::size_t>(k)] =
            (vecs.col(k).adjoint() * m * vecs.col(k))(0).real();
    }
    const std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {0, 3}, {2, 1}, {2, 3}}};
    // A and B use M, A' and B' use 1 - M.
    const std::array<const Eigen::MatrixXcd*, 4> proj{&m, &m, &mc, &mc};
    const Eigen::VectorXcd c = r.state;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [x, y] = pairs[k];
        out.interf[k] = (vecs.col(x).adjoint() * m * vecs.col(y))(0).real();
        const Eigen::MatrixXcd p = kron(*proj[static_cast<std::size_t>(x)],
                                        *proj[static_cast<std::size_t>(y)]);
        out.sector2[k] = (c.adjoint() * p * c)(0).real();
    }
    out.state_norm = c.norm();
    return out;
}

}  // namespace fbtest
