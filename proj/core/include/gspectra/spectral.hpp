#ifndef GSPECTRA_SPECTRAL_HPP
#define GSPECTRA_SPECTRAL_HPP

#include <vector>

#include "gspectra/graph.hpp"

namespace gspectra {

/// Adjacency eigenvalues sorted non-increasing, plus the tolerance used
/// to classify eigenvalues as zero when deriving inertia.
struct Spectrum {
    std::vector<double> values;
    double zero_tol = 0.0;

    int n() const { return static_cast<int>(values.size()); }
    double lambda(int i) const { return values[static_cast<size_t>(i) - 1]; }  // 1-based
};

struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
};

/// Dense symmetric eigensolve of A(G). Eigenvalues accurate to within
/// 1e-9 * max(1, lambda_1). zero_tol = n * 1e-9 * max(1, lambda_1) *
/// zero_tol_scale.
Spectrum eigenvalues(const Graph& g, double zero_tol_scale = 1.0);

/// Signs classified against the given tolerance (defaults to s.zero_tol).
Inertia inertia(const Spectrum& s);
Inertia inertia_at(const Spectrum& s, double tol);

/// s_k = sum of squares of the k largest eigenvalues, 1 <= k <= n.
double square_sum(const Spectrum& s, int k);

/// Lambda_k = s_k / m. Throws std::invalid_argument when m == 0.
double lambda_ratio(const Spectrum& s, int k, long long m);

/// Signed power sum, sum of lambda_i^p.
double power_sum(const Spectrum& s, int p);

/// (sum |x_i|^p)^(1/p), p >= 1. Empty vector gives 0.
double p_norm(const std::vector<double>& x, double p);

/// True iff y is weakly majorized by x: every prefix sum of the
/// non-increasing rearrangement of y is <= the corresponding prefix sum
/// of x's. Shorter vector is padded with zeros. Comparisons carry 1e-12
/// absolute slack.
bool is_weakly_majorized(const std::vector<double>& y, const std::vector<double>& x);

}  // namespace gspectra

#endif
