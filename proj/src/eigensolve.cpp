#include "xychain/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "xychain/error.hpp"

namespace xychain {

namespace {

// Rows of the accumulated rotation matrix that we keep, row-major:
// rows[t * n + k] is component rows_index[t] of eigenvector k.
struct TrackedRows {
    std::size_t n = 0;
    std::vector<std::size_t> index;
    std::vector<double> values;

    double* row(std::size_t t) { return values.data() + t * n; }
};

TrackedRows make_tracked(std::size_t n, Vectors mode) {
    TrackedRows z;
    z.n = n;
    if (mode == Vectors::Full) {
        z.index.resize(n);
        std::iota(z.index.begin(), z.index.end(), 0);
    } else {
        z.index.push_back(0);
        if (n > 1) z.index.push_back(n - 1);
    }
    z.values.assign(z.index.size() * n, 0.0);
    for (std::size_t t = 0; t < z.index.size(); ++t) z.row(t)[z.index[t]] = 1.0;
    return z;
}

// sqrt(a^2 + b^2), falling back to std::hypot (slow) only when the plain
// formula over- or underflows.
inline double pythag(double a, double b) {
    const double r = std::sqrt(a * a + b * b);
    if (r < 1e300 && r > 1e-150) return r;
    return std::hypot(a, b);
}

// Symmetric tridiagonal QL with implicit Wilkinson shifts (tql2 lineage).
// d: diagonal in, eigenvalues out. e: e[i] = H(i, i+1), destroyed.
void tql2(std::vector<double>& d, std::vector<double>& e, TrackedRows& z) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e.resize(n);
    e[n - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    const std::size_t rows = z.index.size();
    double f = 0.0;
    double tst1 = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

        if (m > l) {
            int iter = 0;
            do {
                if (++iter > kMaxSweepsPerEigenvalue) throw NotConverged(l, std::abs(e[l]));

                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = pythag(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = pythag(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (std::size_t t = 0; t < rows; ++t) {
                        double* zr = z.row(t);
                        h = zr[ii + 1];
                        zr[ii + 1] = s * zr[ii] + c * h;
                        zr[ii] = c * zr[ii] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

std::span<const double> Spectrum::mode(std::size_t k) const {
    if (!has_vectors()) throw Error("spectrum was computed without eigenvectors");
    const std::size_t n = size();
    return {eigenvectors.data() + k * n, n};
}

Spectrum diagonalize(const Tridiagonal& matrix, Vectors vectors) {
    const std::size_t n = matrix.size();
    if (n == 0) throw Error("cannot diagonalize an empty matrix");
    if (matrix.off_diagonal.size() != n - 1) throw Error("off-diagonal must have n-1 entries");

    std::vector<double> d = matrix.diagonal;
    std::vector<double> e = matrix.off_diagonal;
    TrackedRows z = make_tracked(n, vectors);
    tql2(d, e, z);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    Spectrum out;
    out.eigenvalues.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = d[order[k]];

    const std::size_t rows = z.index.size();
    std::vector<double> sign(n, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        // first component above 1e-12 decides the sign
        for (std::size_t t = 0; t < rows; ++t) {
            const double v = z.row(t)[src];
            if (std::abs(v) > 1e-12) {
                sign[k] = v < 0 ? -1.0 : 1.0;
                break;
            }
        }
    }

    out.edge_s.resize(n);
    out.edge_r.resize(n);
    const std::size_t last_row = rows - 1;
    for (std::size_t k = 0; k < n; ++k) {
        out.edge_s[k] = sign[k] * z.row(0)[order[k]];
        out.edge_r[k] = sign[k] * z.row(last_row)[order[k]];
    }

    if (vectors == Vectors::Full) {
        out.eigenvectors.resize(n * n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                out.eigenvectors[k * n + i] = sign[k] * z.row(i)[order[k]];
    }

    for (std::size_t k = 0; k + 1 < n; ++k)
        if (out.eigenvalues[k + 1] - out.eigenvalues[k] < kDegeneracyGap) out.degenerate = true;
    return out;
}

ParticleHoleReport particle_hole_check(const Spectrum& spectrum) {
    ParticleHoleReport report;
    const auto& ev = spectrum.eigenvalues;
    const std::size_t n = ev.size();
    report.zero_mode_gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        report.max_pairing_error = std::max(report.max_pairing_error, std::abs(ev[k] + ev[n - 1 - k]));
        report.zero_mode_gap = std::min(report.zero_mode_gap, std::abs(ev[k]));
    }
    return report;
}

std::size_t select_mode(const Spectrum& spectrum, double target) {
    if (spectrum.size() == 0) throw Error("select_mode on an empty spectrum");
    std::size_t best = 0;
    double best_dist = std::abs(spectrum.eigenvalues[0] - target);
    for (std::size_t k = 1; k < spectrum.size(); ++k) {
        const double dist = std::abs(spectrum.eigenvalues[k] - target);
        if (dist < best_dist) {
            best = k;
            best_dist = dist;
        }
    }
    return best;
}

}  // namespace xychain
