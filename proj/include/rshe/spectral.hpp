#pragma once

#include <vector>

#include "rshe/fourier.hpp"

// Fractional Sobolev norms/pairings, powers of 1 - Laplacian, and exact
// coefficient-level products with single basis modes.

namespace rshe {

// Weight table w[i] = <i - n_max>^{2*alpha} for a band of size 2*n_max+1.
std::vector<double> sobolev_weights(int n_max, double alpha);

// ( sum_n <n>^{2*alpha} |f(e_n)|^2 )^{1/2} over the stored band.
double sobolev_norm(const FourierField& f, double alpha);

// sum_n <n>^{2*alpha} f(e_n) g(e_n); modes outside a band count as zero.
double pair_alpha(const FourierField& f, const FourierField& g, double alpha);

// (1-Laplacian)^{beta/2}: coefficient n scaled by <n>^beta.
FourierField bessel_power(const FourierField& f, double beta);

// coefficient n scaled by -n^2
FourierField laplacian(const FourierField& f);

// Exact product f * e_m via the cosine/sine product-to-sum identities.
// Result band is f.max_mode + |m|.
FourierField multiply_by_mode(const FourierField& f, int m);

// Smallest C with x^beta <= eps*x^delta + C*x^alpha for all x > 0
// (closed form from the stationary point). Requires alpha < beta < delta,
// eps > 0.
double interpolation_constant(double alpha, double beta, double delta, double eps);

}  // namespace rshe
