#include "gspectra/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gspectra {

Spectrum eigenvalues(const Graph& g, double zero_tol_scale) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("eigenvalues: empty graph");

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) a(i, j) = a(j, i) = 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolve failed to converge");
    }

    Spectrum s;
    s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    s.zero_tol = n * 1e-9 * std::max(1.0, s.values.front()) * zero_tol_scale;
    return s;
}

Inertia inertia(const Spectrum& s) { return inertia_at(s, s.zero_tol); }

Inertia inertia_at(const Spectrum& s, double tol) {
    Inertia in;
    for (double v : s.values) {
        if (v > tol) {
            ++in.n_plus;
        } else if (v < -tol) {
            ++in.n_minus;
        } else {
            ++in.n_zero;
        }
    }
    return in;
}

double square_sum(const Spectrum& s, int k) {
    if (k < 1 || k > s.n()) throw std::out_of_range("square_sum: k out of range");
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += s.values[i] * s.values[i];
    return sum;
}

double lambda_ratio(const Spectrum& s, int k, long long m) {
    if (m < 1) throw std::invalid_argument("lambda_ratio undefined for m = 0");
    return square_sum(s, k) / static_cast<double>(m);
}

double power_sum(const Spectrum& s, int p) {
    if (p < 1) throw std::invalid_argument("power_sum: p must be >= 1");
    double sum = 0.0;
    for (double v : s.values) sum += std::pow(v, p);
    return sum;
}

double p_norm(const std::vector<double>& x, double p) {
    if (p < 1.0) throw std::invalid_argument("p_norm: p must be >= 1");
    double sum = 0.0;
    for (double v : x) sum += std::pow(std::abs(v), p);
    return std::pow(sum, 1.0 / p);
}

bool is_weakly_majorized(const std::vector<double>& y, const std::vector<double>& x) {
    const size_t n = std::max(y.size(), x.size());
    std::vector<double> ys(y), xs(x);
    ys.resize(n, 0.0);
    xs.resize(n, 0.0);
    std::sort(ys.begin(), ys.end(), std::greater<>());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    double py = 0.0, px = 0.0;
    for (size_t i = 0; i < n; ++i) {
        py += ys[i];
        px += xs[i];
        if (py > px + 1e-12) return false;
    }
    return true;
}

}  // namespace gspectra
