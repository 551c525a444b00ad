#pragma once

#include <string>
#include <vector>

#include "gdt/basis.hpp"
#include "gdt/signal.hpp"

namespace gdt {

struct SpectrumEntry {
  double modulus = 0.0;  // M_k >= 0
  double phase = 0.0;    // Phi_k in [0, 2*pi)
};

// Result of the generic transform: f(x) = dc + sum_k M_k S'(k x + Phi_k),
// entries[k-1] for k = 1..k_max where k_max = N/2 - 1.  The Nyquist bin is
// never consumed by the analysis.
struct PolarSpectrum {
  double dc = 0.0;
  std::vector<SpectrumEntry> entries;
  std::string basis_label;
  RenderMode mode = RenderMode::band_limited;

  int k_max() const { return static_cast<int>(entries.size()); }
};

// Residual RMS after each peeling step: norms[0] = ||f - dc||,
// norms[n] = ||f_en|| once components 1..n have been subtracted.
struct ResidualProfile {
  std::vector<double> norms;
};

// Forward transform by residual peeling: for k = 1..N/2-1 read (M_k, Phi_k)
// off the Fourier bin k of the current residual, then subtract the rendered
// component.  Deterministic; one pass in increasing k.
PolarSpectrum analyze(const Signal& f, const NormalizedBasis& nb, RenderMode mode);

Signal synthesize(const PolarSpectrum& ps, const NormalizedBasis& nb, int n, RenderMode mode);

// Partial synthesis over entries k_lo..k_hi (inclusive), optionally with dc.
Signal synthesize_range(const PolarSpectrum& ps, const NormalizedBasis& nb, int n,
                        RenderMode mode, int k_lo, int k_hi, bool include_dc);

// Re-express a spectrum against the raw (unnormalized) basis:
// M' = M/s_1, Phi' = Phi + k*phi_1.
PolarSpectrum rescale_to_raw(const PolarSpectrum& ps, const BasisOrigin& origin);

ResidualProfile residual_profile(const Signal& f, const NormalizedBasis& nb, RenderMode mode);

}  // namespace gdt
