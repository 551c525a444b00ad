#pragma once

#include <vector>

#include "gdt/basis.hpp"
#include "gdt/signal.hpp"
#include "gdt/transform.hpp"

namespace gdt {

// Real per-bin gain applied to the moduli of a generic spectrum.
// gains[k-1] covers bin k; negative gains flip the phase by pi.
struct TransferFunction {
  std::vector<double> gains;
  double dc_gain = 1.0;

  static TransferFunction all_pass(int k_max);
  static TransferFunction low_pass(int k_max, int cutoff);
  static TransferFunction high_pass(int k_max, int cutoff);
  static TransferFunction keep(int k_max, const std::vector<int>& bins);
};

// Analyze in the basis, multiply moduli by G, resynthesize.
Signal apply_filter(const Signal& f, const NormalizedBasis& nb, const TransferFunction& g,
                    RenderMode mode);

// ||G[f(x - x0)] - G[f](x - x0)|| for x0 = 2*pi*j/N.
double time_invariance_gap(const Signal& f, int j, const NormalizedBasis& nb,
                           const TransferFunction& g, RenderMode mode);

// ||G[a*f] - a*G[f]|| for a > 0.
double homogeneity_gap(const Signal& f, double alpha, const NormalizedBasis& nb,
                       const TransferFunction& g, RenderMode mode);

// ||G[f1 + f2] - G[f1] - G[f2]||.  No smallness guarantee: nonzero values
// witness the nonlinearity of the generic-basis system.
double superposition_gap(const Signal& f1, const Signal& f2, const NormalizedBasis& nb,
                         const TransferFunction& g, RenderMode mode);

// Frequency-domain convolution: modulus product, phase sum, resynthesis in
// the same basis.
Signal convolve(const Signal& f, const Signal& g_sig, const NormalizedBasis& nb,
                RenderMode mode);

struct EigenReport {
  bool is_eigenfunction = false;
  double eigen_modulus = 0.0;  // lambda modulus
  double eigen_phase = 0.0;    // lambda phase, as a time shift x0
  double residual_rms = 0.0;   // || output - lambda * shifted candidate ||
};

// Run the filter on the candidate, fit the best modulus scale and circular
// time shift from the candidate's fundamental generic bin, report how far
// the output is from that scaled/shifted copy.
EigenReport eigen_check(const Signal& candidate, const NormalizedBasis& nb,
                        const TransferFunction& g, RenderMode mode);

}  // namespace gdt
