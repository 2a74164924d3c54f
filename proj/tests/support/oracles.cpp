#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

namespace {

using Dense = std::vector<std::vector<double>>;

void tridiagonalize(Dense& a, std::vector<double>& diag, std::vector<double>& off) {
    const std::size_t m = a.size();
    for (std::size_t k = 0; k + 2 < m; ++k) {
        double norm = 0.0;
        for (std::size_t i = k + 1; i < m; ++i) norm += a[i][k] * a[i][k];
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = a[k + 1][k] > 0.0 ? -norm : norm;

        std::vector<double> v(m, 0.0);
        for (std::size_t i = k + 1; i < m; ++i) v[i] = a[i][k];
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (double x : v) vnorm += x * x;
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (double& x : v) x /= vnorm;

        // A ← (I − 2vvᵀ) A (I − 2vvᵀ)
        std::vector<double> w(m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) w[i] += a[i][j] * v[j];
        double kappa = 0.0;
        for (std::size_t i = 0; i < m; ++i) kappa += v[i] * w[i];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a[i][j] += -2.0 * v[i] * w[j] - 2.0 * w[i] * v[j] + 4.0 * kappa * v[i] * v[j];
    }
    diag.assign(m, 0.0);
    off.assign(m > 0 ? m - 1 : 0, 0.0);
    for (std::size_t i = 0; i < m; ++i) diag[i] = a[i][i];
    for (std::size_t i = 0; i + 1 < m; ++i) off[i] = 0.5 * (a[i + 1][i] + a[i][i + 1]);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        q = (diag[i] - x) - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

} // namespace

std::vector<double> reference_eigenvalues(const detineq::ComplexMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t m = 2 * n;
    Dense emb(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = a(i, j).real();
            const double y = a(i, j).imag();
            emb[i][j] = x;
            emb[i][j + n] = -y;
            emb[i + n][j] = y;
            emb[i + n][j + n] = x;
        }
    }
    std::vector<double> diag;
    std::vector<double> off;
    tridiagonalize(emb, diag, off);

    double radius = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = std::abs(diag[i]);
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < m) r += std::abs(off[i]);
        radius = std::max(radius, r);
    }
    radius = radius * (1.0 + 1e-12) + 1e-300;

    std::vector<double> all(m);
    for (std::size_t k = 0; k < m; ++k) {
        double lo = -radius;
        double hi = radius;
        for (int it = 0; it < 300 && hi - lo > 1e-15 * radius; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off, mid) > k)
                hi = mid;
            else
                lo = mid;
        }
        all[k] = 0.5 * (lo + hi);
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = 0.5 * (all[2 * k] + all[2 * k + 1]);
    return out;
}

detineq::Complex laplace_determinant(const detineq::ComplexMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    detineq::Complex total = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        detineq::ComplexMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, jj++) = a(i, j);
            }
        }
        const double sign = col % 2 == 0 ? 1.0 : -1.0;
        total += sign * a(0, col) * laplace_determinant(minor);
    }
    return total;
}

double grid_waterfill_best(const double gains[2], const double floors[2], double power, std::size_t points) {
    double best = -INFINITY;
    for (std::size_t i = 0; i < points; ++i) {
        const double t = power * static_cast<double>(i) / static_cast<double>(points - 1);
        const double value = std::log(t * gains[0] + floors[0]) + std::log((power - t) * gains[1] + floors[1]);
        best = std::max(best, value);
    }
    return best;
}

double log_objective(const std::vector<double>& p, const std::vector<double>& gains,
                     const std::vector<double>& floors) {
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) total += std::log(p[k] * gains[k] + floors[k]);
    return total;
}

} // namespace oracle
