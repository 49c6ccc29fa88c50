#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "fockbench/fockmodel.hpp"

namespace fockbench {

namespace {

using Vec4 = std::array<double, 4>;

// Residual below which a candidate counts as an exact representation.
constexpr double kExact = 1e-13;
// Weight of the |beta| tie-break relative to the sector-2 weight.
constexpr double kBetaWeight = 1e-9;

struct Exemplar {
    Vec4 target{};  // mu(X and Y)
    Vec4 mean{};    // (mu(X) + mu(Y)) / 2
};

// Box on each alpha_k under which the model can come within r of the data,
// given sector-1 values y. The model value is a point of the segment
// [alpha_k, y_k], reached by choosing m2_k.
struct AlphaBox {
    Vec4 lo{};
    Vec4 hi{};

    bool admits_unit_sum() const {
        const double sl = std::accumulate(lo.begin(), lo.end(), 0.0);
        const double sh = std::accumulate(hi.begin(), hi.end(), 0.0);
        return sl <= 1.0 + 1e-15 && sh >= 1.0 - 1e-15;
    }
};

AlphaBox alpha_box(const Vec4& t, const Vec4& y, double r) {
    AlphaBox b;
    for (std::size_t k = 0; k < 4; ++k) {
        if (t[k] > y[k] + r) {
            b.lo[k] = std::clamp(t[k] - r, 0.0, 1.0);
            b.hi[k] = 1.0;
        } else if (t[k] < y[k] - r) {
            b.lo[k] = 0.0;
            b.hi[k] = std::clamp(t[k] + r, 0.0, 1.0);
        } else {
            b.lo[k] = 0.0;
            b.hi[k] = 1.0;
        }
    }
    return b;
}

// Smallest achievable max |residual| for fixed sector-1 values.
double min_residual(const Vec4& t, const Vec4& y) {
    if (alpha_box(t, y, 0.0).admits_unit_sum()) return 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t k = 0; k < 4; ++k) hi = std::max(hi, std::abs(t[k] - y[k]));
    for (int it = 0; it < 64 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (alpha_box(t, y, mid).admits_unit_sum() ? hi : lo) = mid;
    }
    return hi;
}

// Nudges alpha onto the unit simplex without leaving the box.
void repair_sum(Vec4& alpha, const AlphaBox& box) {
    double diff = 1.0 - std::accumulate(alpha.begin(), alpha.end(), 0.0);
    for (std::size_t k = 0; k < 4 && diff != 0.0; ++k) {
        const double room = diff > 0.0 ? box.hi[k] - alpha[k] : box.lo[k] - alpha[k];
        const double step = diff > 0.0 ? std::min(diff, room) : std::max(diff, room);
        alpha[k] += step;
        diff -= step;
    }
}

struct Allocation {
    Vec4 alpha{};
    Vec4 m2{};
};

// Exact case: for every k with gap g = t - y != 0 the sector-2 weight is
// m2 = |g| / |alpha - y|, so alpha is pushed away from y as far as the unit
// sum allows. Minimizes sum(m2) (separable, convex) by bisection on the
// multiplier of sum(alpha) = 1.
Allocation allocate_exact(const Vec4& t, const Vec4& y) {
    Vec4 g{};
    for (std::size_t k = 0; k < 4; ++k) g[k] = t[k] - y[k];
    const AlphaBox box = alpha_box(t, y, 0.0);

    auto alpha_at = [&](double nu, double free_value) {
        Vec4 a{};
        for (std::size_t k = 0; k < 4; ++k) {
            if (g[k] > 0.0) {
                a[k] = nu >= 0.0 ? 1.0 : std::clamp(y[k] + std::sqrt(g[k] / -nu), t[k], 1.0);
            } else if (g[k] < 0.0) {
                a[k] = nu <= 0.0 ? 0.0 : std::clamp(y[k] - std::sqrt(-g[k] / nu), 0.0, t[k]);
            } else {
                a[k] = free_value;
            }
        }
        return a;
    };

    double fixed_sum = 0.0;
    int n_free = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (g[k] > 0.0) fixed_sum += 1.0;
        if (g[k] == 0.0) ++n_free;
    }

    Allocation out;
    if (fixed_sum <= 1.0 && fixed_sum + n_free >= 1.0 && (n_free > 0 || fixed_sum == 1.0)) {
        out.alpha = alpha_at(0.0, n_free > 0 ? (1.0 - fixed_sum) / n_free : 0.0);
    } else {
        const bool shrink = fixed_sum > 1.0;  // nu < 0, free entries at 0
        const double free_value = shrink ? 0.0 : 1.0;
        auto total = [&](double z) {
            const double nu = shrink ? -std::exp(z) : std::exp(z);
            Vec4 a = alpha_at(nu, free_value);
            return std::pair{std::accumulate(a.begin(), a.end(), 0.0), a};
        };
        // The sum increases with nu: for shrink it falls as z grows, else it rises.
        double zlo = -80.0;
        double zhi = 80.0;
        for (int it = 0; it < 200; ++it) {
            const double z = 0.5 * (zlo + zhi);
            const double s = total(z).first;
            const bool too_big = s > 1.0;
            if (shrink == too_big) {
                zlo = z;
            } else {
                zhi = z;
            }
        }
        out.alpha = total(0.5 * (zlo + zhi)).second;
    }
    repair_sum(out.alpha, box);

    for (std::size_t k = 0; k < 4; ++k) {
        if (g[k] == 0.0) continue;
        const double span = std::abs(out.alpha[k] - y[k]);
        out.m2[k] = span > 0.0 ? std::min(1.0, std::abs(g[k]) / span) : 1.0;
    }
    return out;
}

// Residual case: spread alpha over the feasible box at radius r and take the
// m2 that brings each model value closest to its target.
Allocation allocate_best_effort(const Vec4& t, const Vec4& y, double r) {
    const AlphaBox box = alpha_box(t, y, r);
    Allocation out;
    const double sl = std::accumulate(box.lo.begin(), box.lo.end(), 0.0);
    double width = 0.0;
    for (std::size_t k = 0; k < 4; ++k) width += box.hi[k] - box.lo[k];
    for (std::size_t k = 0; k < 4; ++k) {
        out.alpha[k] = box.lo[k];
        if (width > 0.0) out.alpha[k] += (1.0 - sl) * (box.hi[k] - box.lo[k]) / width;
    }
    repair_sum(out.alpha, box);
    for (std::size_t k = 0; k < 4; ++k) {
        const double span = out.alpha[k] - y[k];
        out.m2[k] = span != 0.0 ? std::clamp((t[k] - y[k]) / span, 0.0, 1.0) : 0.0;
    }
    return out;
}

struct Candidate {
    InterferenceMatrix c{};
    double residual = 0.0;
    double objective = std::numeric_limits<double>::infinity();
};

class Objective {
public:
    Objective(const MembershipRecord& record, const Exemplar& ex) : record_(record), ex_(ex) {}

    // Maps an unconstrained point onto the realizable set by radial scaling.
    InterferenceMatrix project(const Vec4& u) const {
        const double s = realizable_scale(record_, u);
        InterferenceMatrix c{};
        for (std::size_t k = 0; k < 4; ++k) c[k] = s * u[k];
        return c;
    }

    Vec4 sector1(const InterferenceMatrix& c) const {
        Vec4 y{};
        for (std::size_t k = 0; k < 4; ++k) y[k] = ex_.mean[k] + c[k];
        return y;
    }

    Candidate operator()(const Vec4& u) {
        ++evaluations_;
        Candidate cand;
        cand.c = project(u);
        const Vec4 y = sector1(cand.c);
        cand.residual = min_residual(ex_.target, y);
        if (cand.residual > kExact) {
            cand.objective = 10.0 + cand.residual;
            return cand;
        }
        const Allocation a = allocate_exact(ex_.target, y);
        double m2 = 0.0;
        double beta = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            m2 += a.m2[k];
            beta += std::abs(cand.c[k]);
        }
        cand.objective = m2 + kBetaWeight * beta;
        return cand;
    }

    int evaluations() const { return evaluations_; }

private:
    const MembershipRecord& record_;
    const Exemplar& ex_;
    int evaluations_ = 0;
};

// Nelder-Mead in four dimensions. Returns the best vertex found.
std::pair<Vec4, Candidate> nelder_mead(Objective& f, const Vec4& start, double step,
                                       int max_evals) {
    constexpr std::size_t n = 4;
    std::array<Vec4, n + 1> x{};
    std::array<Candidate, n + 1> fx{};
    x[0] = start;
    for (std::size_t i = 0; i < n; ++i) {
        x[i + 1] = start;
        x[i + 1][i] += (start[i] > 0.0 ? -step : step);
    }
    int used = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        fx[i] = f(x[i]);
        ++used;
    }

    auto order = [&] {
        std::array<std::size_t, n + 1> idx{};
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fx[a].objective < fx[b].objective; });
        auto xs = x;
        auto fs = fx;
        for (std::size_t i = 0; i <= n; ++i) {
            x[i] = xs[idx[i]];
            fx[i] = fs[idx[i]];
        }
    };
    auto along = [&](const Vec4& centroid, const Vec4& p, double t) {
        Vec4 r{};
        for (std::size_t i = 0; i < n; ++i) r[i] = centroid[i] + t * (p[i] - centroid[i]);
        return r;
    };

    while (used < max_evals) {
        order();
        if (fx[0].objective == 0.0) break;
        double size = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) size = std::max(size, std::abs(x[i][j] - x[0][j]));
        }
        if (size < 1e-11 && fx[n].objective - fx[0].objective < 1e-14) break;

        Vec4 centroid{};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += x[i][j] / n;
        }
        const Vec4 xr = along(centroid, x[n], -1.0);
        const Candidate fr = f(xr);
        ++used;
        if (fr.objective < fx[0].objective) {
            const Vec4 xe = along(centroid, x[n], -2.0);
            const Candidate fe = f(xe);
            ++used;
            if (fe.objective < fr.objective) {
                x[n] = xe;
                fx[n] = fe;
            } else {
                x[n] = xr;
                fx[n] = fr;
            }
        } else if (fr.objective < fx[n - 1].objective) {
            x[n] = xr;
            fx[n] = fr;
        } else {
            const bool outside = fr.objective < fx[n].objective;
            const Vec4 xc = along(centroid, outside ? xr : x[n], 0.5);
            const Candidate fc = f(xc);
            ++used;
            if (fc.objective < std::min(fr.objective, fx[n].objective)) {
                x[n] = xc;
                fx[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    x[i] = along(x[0], x[i], 0.5);
                    fx[i] = f(x[i]);
                    ++used;
                }
            }
        }
    }
    order();
    return {x[0], fx[0]};
}

ConjunctionParams make_params(double m2, double alpha, double c) {
    ConjunctionParams p;
    p.m2 = std::clamp(m2, 0.0, 1.0);
    p.alpha = std::clamp(alpha, 0.0, 1.0);
    if (c == 0.0) {
        p.beta = 0.0;
        p.phi_deg = 90.0;
    } else {
        p.beta = std::clamp(c, -1.0, 1.0);
        p.phi_deg = 0.0;
    }
    return p;
}

}  // namespace

FockFit fit_exemplar(const MembershipRecord& record, const FitConfig& config) {
    require_unit_range(record);
    if (!(config.fit_tol >= 0.0)) throw Error("fit tolerance must be non-negative");

    Exemplar ex;
    for (auto k : kConjunctions) {
        const auto i = static_cast<std::size_t>(k);
        ex.target[i] = record.conjunction(k);
        ex.mean[i] = 0.5 * (record.first(k) + record.second(k));
    }

    Objective objective(record, ex);
    const int budget = std::max(config.budget, 50);

    Vec4 ideal{};
    for (std::size_t k = 0; k < 4; ++k) ideal[k] = ex.target[k] - ex.mean[k];

    Vec4 best_u = ideal;
    Candidate best = objective(ideal);

    // Pure sector 1 fits exactly: nothing can do better.
    const bool done = realizable_scale(record, ideal) >= 1.0;

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    const int per_run = std::max(40, std::min(600, budget / 8));

    auto consider = [&](const std::pair<Vec4, Candidate>& run) {
        if (run.second.objective < best.objective) {
            best_u = run.first;
            best = run.second;
        }
    };

    if (!done) {
        std::vector<Vec4> starts{ideal, Vec4{}};
        int restart = 0;
        while (objective.evaluations() + per_run <= budget) {
            Vec4 start{};
            double step = 0.25;
            if (restart < static_cast<int>(starts.size())) {
                start = starts[static_cast<std::size_t>(restart)];
            } else if (restart % 3 == 2) {
                start = best_u;  // polish around the incumbent
                step = 0.02;
            } else {
                for (auto& v : start) v = uniform(rng);
            }
            ++restart;
            consider(nelder_mead(objective, start, step, per_run));
        }
    }

    const InterferenceMatrix c = objective.project(best_u);
    const Vec4 y = objective.sector1(c);
    const Allocation a = best.residual <= kExact
                             ? allocate_exact(ex.target, y)
                             : allocate_best_effort(ex.target, y, best.residual);

    std::array<ConjunctionParams, 4> params{};
    for (std::size_t k = 0; k < 4; ++k) params[k] = make_params(a.m2[k], a.alpha[k], c[k]);

    FockFit fit = evaluate_fit(record, params, config.fit_tol);
    if (!fit.feasible) {
        std::ostringstream os;
        os << "no Fock representation found for exemplar '" << record.exemplar_id
           << "' (best max |residual| = " << fit.max_abs_residual() << ", residuals";
        for (double r : fit.residuals) os << ' ' << r;
        os << ")";
        throw NoFockRepresentationError(os.str(), fit);
    }
    return fit;
}

}  // namespace fockbench
