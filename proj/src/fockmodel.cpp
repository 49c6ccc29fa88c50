#include "fockbench/fockmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fockbench {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool unit(double v) { return v >= 0.0 && v <= 1.0; }

// Spectral norm of the 2x2 matrix [[a, b], [c, d]].
double spectral_norm(double a, double b, double c, double d) {
    const double fro2 = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::max(0.0, fro2 * fro2 - 4.0 * det * det);
    return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

// Largest scale keeping [[D1, s C], [s C^T, D2]] positive semidefinite, with
// D1 = diag(rows), D2 = diag(cols). Zero diagonal entries force the matching
// entries of C to vanish.
double psd_scale(const std::array<double, 2>& rows, const std::array<double, 2>& cols,
                 const InterferenceMatrix& c) {
    std::array<double, 4> n{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double v = c[2 * i + j];
            const double denom = rows[i] * cols[j];
            if (v == 0.0) continue;
            if (!(denom > 0.0)) return 0.0;
            n[2 * i + j] = v / std::sqrt(denom);
        }
    }
    const double sigma = spectral_norm(n[0], n[1], n[2], n[3]);
    return sigma <= 1.0 ? 1.0 : 1.0 / sigma;
}

}  // namespace

bool ConjunctionParams::within_bounds() const noexcept {
    return unit(m2) && unit(alpha) && beta >= -1.0 && beta <= 1.0 && phi_deg >= 0.0 &&
           phi_deg <= 180.0;
}

ModelValue eval_sector1(double mu_x, double mu_y, double beta, double phi_deg) noexcept {
    const double v = 0.5 * (mu_x + mu_y) + beta * std::cos(phi_deg * kDegToRad);
    return {v, unit(v)};
}

ModelValue eval_fock(const ConjunctionParams& p, double mu_x, double mu_y) noexcept {
    const double sector1 = eval_sector1(mu_x, mu_y, p.beta, p.phi_deg).value;
    const double v = p.m2 * p.alpha + (1.0 - p.m2) * sector1;
    return {v, unit(v)};
}

double solve_phi(double mu_xy, double mu_x, double mu_y, double m2, double alpha, double beta) {
    if (m2 >= 1.0 || beta == 0.0) {
        std::ostringstream os;
        os << "phi is undefined for m2 = " << m2 << ", beta = " << beta;
        throw DegenerateError(os.str());
    }
    const double mean = 0.5 * (mu_x + mu_y);
    double q = (mu_xy - mean - m2 * (alpha - mean)) / ((1.0 - m2) * beta);
    if (std::abs(q) > 1.0) {
        // rounding slack from a round trip through eval_fock
        if (std::abs(q) > 1.0 + 1e-12) {
            std::ostringstream os;
            os << "infeasible interference: cos(phi) would be " << q;
            throw InfeasibleInterferenceError(os.str(), q);
        }
        q = std::clamp(q, -1.0, 1.0);
    }
    return std::acos(q) / kDegToRad;
}

double realizable_scale(const MembershipRecord& r, const InterferenceMatrix& c) noexcept {
    const double inside = psd_scale({r.mu_A, r.mu_Ap}, {r.mu_B, r.mu_Bp}, c);
    const double outside = psd_scale({1.0 - r.mu_A, 1.0 - r.mu_Ap}, {1.0 - r.mu_B, 1.0 - r.mu_Bp}, c);
    return std::min(inside, outside);
}

double FockFit::max_abs_residual() const noexcept {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, std::abs(r));
    return m;
}

double FockFit::alpha_sum() const noexcept {
    double s = 0.0;
    for (const auto& p : params) s += p.alpha;
    return s;
}

double FockFit::m2_sum() const noexcept {
    double s = 0.0;
    for (const auto& p : params) s += p.m2;
    return s;
}

InterferenceMatrix FockFit::interference() const noexcept {
    InterferenceMatrix c{};
    for (std::size_t k = 0; k < 4; ++k) {
        c[k] = params[k].beta * std::cos(params[k].phi_deg * kDegToRad);
    }
    return c;
}

FockFit evaluate_fit(const MembershipRecord& record,
                     const std::array<ConjunctionParams, 4>& params, double fit_tol) {
    FockFit fit;
    fit.params = params;
    for (auto k : kConjunctions) {
        const auto i = static_cast<std::size_t>(k);
        fit.residuals[i] =
            eval_fock(params[i], record.first(k), record.second(k)).value - record.conjunction(k);
    }
    fit.feasible = fit.max_abs_residual() <= fit_tol;
    return fit;
}

}  // namespace fockbench
