#pragma once

// Numeric side of the construction: the alpha thresholds, the class-count
// threshold sigma and s = ceil(sigma), the largest guaranteed window length
// ell_max = floor(alpha * n^(1/t)), the sufficiency condition relating n to
// (k, t, lambda, ell, s), and the local-lemma parameters p and d.

#include <cstdint>
#include <optional>

namespace blockseq {

// Unique positive root of
//   (lambda*(2^(t+1)-1)/t!) * a^t + 2*(e*lambda*(t+1)*(2^(t+1)-1)/t!)^(1/t) * a = 1
// found by bisection; the left side is strictly increasing from 0.
double alpha_main(std::uint32_t t, std::uint32_t lambda);

// Left side of the defining equation above, for residual checks.
double alpha_equation_lhs(std::uint32_t t, std::uint32_t lambda, double alpha);

// Right-hand side ((k-1)*...*(k-t) / (lambda*(2^(t+1)-1)))^(1/t); any alpha
// strictly below it is admissible for large n. Requires k >= t+2.
double alpha_large_k(std::uint32_t k, std::uint32_t t, std::uint32_t lambda);

// sigma = (e*(2^k-1)*(k*lambda*C(n-1,t-1)/C(k-1,t-1) - k + 1))^(1/(k-1)).
double sigma(std::uint64_t n, std::uint32_t k, std::uint32_t t, std::uint32_t lambda);

// ceil(sigma); always >= 3 for valid parameters.
std::uint64_t sigma_class_count(std::uint64_t n, std::uint32_t k, std::uint32_t t,
                                std::uint32_t lambda);

// Strict inequality
//   n > lambda*(2*C(2ell-3,t) - C(ell-2,t)) / C(k-1,t) + (2s-1)*(ell-1) - 1
// evaluated in exact integer arithmetic with the convention C(a,b) = 0 for
// a < b. Requires ell >= 1 and s >= 1.
bool check_condition(std::uint64_t n, std::uint32_t k, std::uint32_t t, std::uint32_t lambda,
                     std::uint64_t ell, std::uint64_t s);

// Floating-point right-hand side of the same inequality, for display.
double condition_rhs(std::uint32_t k, std::uint32_t t, std::uint32_t lambda, std::uint64_t ell,
                     std::uint64_t s);

struct LllParams {
    double p = 0.0;          // (2^k - 1) / s^(k-1), probability of a bad-block event
    double d_bound = 0.0;    // k*lambda*C(n-1,t-1)/C(k-1,t-1) - k, dependency bound
    double ep_d1 = 0.0;      // e * p * (d_bound + 1); <= 1 enables the guarantee
};

// Requires s >= 3 (for s <= 2 every block event is certain and p is
// meaningless).
LllParams lll_params(std::uint32_t k, std::uint64_t n, std::uint32_t t, std::uint32_t lambda,
                     std::uint64_t s);

// floor(alpha_main(t,lambda) * n^(1/t)), with the floor re-derived by integer
// comparison of ell^t against alpha^t * n near the boundary. 0 when even
// ell = 1 is out of reach.
std::uint32_t ell_max(std::uint64_t n, std::uint32_t t, std::uint32_t lambda);

struct BoundsSummary {
    double alpha = 0.0;
    std::optional<double> alpha_large_k;  // only when k >= t+2
    double sigma = 0.0;
    std::uint64_t s = 0;
    std::uint32_t ell_max = 0;
    bool condition_ok = false;            // condition at (n,k,t,lambda, max(ell_max,1), s)
    double p = 0.0;
    double d_bound = 0.0;
    double ep_d1 = 0.0;
};

BoundsSummary bounds_summary(std::uint64_t n, std::uint32_t k, std::uint32_t t,
                             std::uint32_t lambda);

// Largest multiple of a power of ten with `digits` significant figures that
// does not exceed x; display convention for the alpha constants.
double round_down_significant(double x, int digits);

}  // namespace blockseq
