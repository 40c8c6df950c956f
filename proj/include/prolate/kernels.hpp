#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops, provided as a scalar reference implementation
// and an AVX2 variant selected at runtime. The two are equivalence-tested;
// everything above this layer is kernel-agnostic.

namespace prolate::kernels {

enum class Isa { scalar, avx2 };

// Instruction set the dispatcher is currently using.
Isa active_isa();

// True if the AVX2 variant can run on this machine.
bool avx2_supported();

// Force a specific variant (tests, reproducibility experiments). Requesting
// avx2 on a machine without it is ignored. The PROLATE_ISA environment
// variable ("scalar" or "avx2") sets the initial choice.
void force_isa(Isa isa);

// Parity-strided Legendre series
//   f(x)  = sum_i coef[i] * P_{k0+2i}(x)
//   f'(x) = sum_i coef[i] * P'_{k0+2i}(x)
// evaluated at every x[j]. k0 is 0 or 1. out_f must have x.size() entries;
// out_df may be empty (derivative skipped) or x.size() entries.
void legendre_series_batch(std::span<const double> coef, int k0,
                           std::span<const double> x,
                           std::span<double> out_f,
                           std::span<double> out_df);

// cos_out = sum_j w[j]*cos(s*t[j]),  sin_out = sum_j w[j]*sin(s*t[j]).
// Arguments s*t[j] must stay below ~1e6 in magnitude (enforced by falling
// back to the scalar path, whose libm reduction is unconditional).
void weighted_trig_sum(std::span<const double> w, std::span<const double> t,
                       double s, double& cos_out, double& sin_out);

namespace detail {
// Direct entry points, bypassing dispatch (used by equivalence tests).
void legendre_series_batch_scalar(std::span<const double> coef, int k0,
                                  std::span<const double> x,
                                  std::span<double> out_f,
                                  std::span<double> out_df);
void weighted_trig_sum_scalar(std::span<const double> w,
                              std::span<const double> t, double s,
                              double& cos_out, double& sin_out);
#if defined(PROLATE_HAVE_AVX2)
void legendre_series_batch_avx2(std::span<const double> coef, int k0,
                                std::span<const double> x,
                                std::span<double> out_f,
                                std::span<double> out_df);
void weighted_trig_sum_avx2(std::span<const double> w,
                            std::span<const double> t, double s,
                            double& cos_out, double& sin_out);
#endif
}  // namespace detail

}  // namespace prolate::kernels
