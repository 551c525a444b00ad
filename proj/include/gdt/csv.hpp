#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdt/basis.hpp"
#include "gdt/harness.hpp"
#include "gdt/signal.hpp"
#include "gdt/systems.hpp"
#include "gdt/transform.hpp"

namespace gdt::csv {

// All readers ignore '#' comment lines and blank lines.  Numbers are
// written with 12 significant digits.
std::string format_number(double v);

// Signal files: either one value per line (optional "value" header) or
// "index,value" rows with indices 0..N-1 in order.  Writers emit the
// two-column form.
Signal read_signal(std::istream& in);
Signal read_signal_file(const std::string& path);
void write_signal(std::ostream& out, const Signal& s,
                  const std::vector<std::string>& comments = {});
void write_signal_file(const std::string& path, const Signal& s,
                       const std::vector<std::string>& comments = {});

// Basis files: "m,amplitude,phase" rows, phase in radians.
Basis read_basis(std::istream& in, std::string name = "");
Basis read_basis_file(const std::string& path);
void write_basis(std::ostream& out, const Basis& b);
void write_basis_file(const std::string& path, const Basis& b);

// Spectrum files: "0,<dc>,0" first, then "k,modulus,phase" ascending.
// Mode and basis label ride along as '#' comments.
PolarSpectrum read_spectrum(std::istream& in);
PolarSpectrum read_spectrum_file(const std::string& path);
void write_spectrum(std::ostream& out, const PolarSpectrum& ps);
void write_spectrum_file(const std::string& path, const PolarSpectrum& ps);

// Transfer-function files: "k,gain" rows plus an optional "0,dc_gain" row.
TransferFunction read_transfer(std::istream& in, int k_max);
TransferFunction read_transfer_file(const std::string& path, int k_max);

// Shorthand specs: "allpass", "lowpass:K", "highpass:K", "keep:k1,k2,...".
bool looks_like_transfer_spec(const std::string& text);
TransferFunction parse_transfer_spec(const std::string& text, int k_max);

void write_reconstruction_report(std::ostream& out, const ReconstructionReport& report, int n);
void write_reconstruction_report_file(const std::string& path,
                                      const ReconstructionReport& report, int n);

}  // namespace gdt::csv
