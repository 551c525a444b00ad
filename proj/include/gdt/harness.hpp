#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdt/basis.hpp"
#include "gdt/signal.hpp"
#include "gdt/transform.hpp"

namespace gdt {

struct ReconstructionReport {
  std::vector<int> orders;
  std::vector<double> rms_errors;
  RenderMode mode = RenderMode::band_limited;
  std::string basis_label;
};

// Analyze once, then record the RMS reconstruction error when keeping only
// components 1..n for each requested order n.
ReconstructionReport reconstruct_experiment(const Signal& f, const Basis& b,
                                            const std::vector<int>& orders, RenderMode mode);

// Orthonormal Haar decomposition keeping the coeff_count largest-magnitude
// coefficients (scaling coefficient eligible), everything else zeroed.
Signal haar_reconstruct(const Signal& f, int coeff_count);

// Spectrum with all but the count largest-modulus entries zeroed (ties broken
// toward lower k); the generic-basis counterpart of haar_reconstruct's
// best-count-term selection.
PolarSpectrum keep_largest(const PolarSpectrum& ps, int count);

struct SeparationReport {
  Signal kept;      // dc + components 1..cutoff
  Signal residual;  // components cutoff+1..k_max, no dc
  double kept_rms_error_vs_reference = 0.0;
};

// Low/high split of the generic spectrum at the given cutoff.  When a clean
// reference is supplied the kept part is scored against it, otherwise
// against the noisy input.
SeparationReport noise_separation(const Signal& f_noisy, const Basis& b, int cutoff,
                                  RenderMode mode,
                                  const std::optional<Signal>& reference = std::nullopt);

}  // namespace gdt
