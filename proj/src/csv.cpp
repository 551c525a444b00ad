#include "gdt/csv.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gdt::csv {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Data rows only: '#' comments and blank lines dropped.
std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(t);
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  return fields;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " value: '" + text + "'");
  }
}

long parse_long(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " value: '" + text + "'");
  }
}

bool is_number(const std::string& text) {
  try {
    std::size_t pos = 0;
    (void)std::stod(text, &pos);
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Signal read_signal(std::istream& in) {
  std::vector<std::string> lines = data_lines(in);
  // optional header line ("value" or "index,value")
  if (!lines.empty()) {
    const std::vector<std::string> fields = split_fields(lines.front());
    if (!fields.empty() && !is_number(fields.front())) lines.erase(lines.begin());
  }
  if (lines.empty()) throw std::runtime_error("signal file has no data rows");

  std::vector<double> values;
  values.reserve(lines.size());
  const std::size_t width = split_fields(lines.front()).size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::vector<std::string> fields = split_fields(lines[i]);
    if (fields.size() != width)
      throw std::runtime_error("inconsistent column count in signal file");
    if (width == 1) {
      values.push_back(parse_double(fields[0], "sample"));
    } else if (width == 2) {
      if (parse_long(fields[0], "index") != static_cast<long>(i))
        throw std::runtime_error("signal indices must run 0..N-1 in order");
      values.push_back(parse_double(fields[1], "sample"));
    } else {
      throw std::runtime_error("signal rows must have 1 or 2 columns");
    }
  }
  return Signal::from_samples(std::move(values));
}

Signal read_signal_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_signal(in);
}

void write_signal(std::ostream& out, const Signal& s, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  for (int i = 0; i < s.size(); ++i) {
    out << i << "," << format_number(s[i]) << "\n";
  }
}

void write_signal_file(const std::string& path, const Signal& s,
                       const std::vector<std::string>& comments) {
  std::ofstream out = open_output(path);
  write_signal(out, s, comments);
}

Basis read_basis(std::istream& in, std::string name) {
  std::vector<Harmonic> entries;
  for (const std::string& line : data_lines(in)) {
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() == 3 && !is_number(fields[0])) continue;  // header
    if (fields.size() != 3) throw std::runtime_error("basis rows must be 'm,amplitude,phase'");
    Harmonic h;
    h.index = static_cast<int>(parse_long(fields[0], "harmonic index"));
    h.amplitude = parse_double(fields[1], "amplitude");
    h.phase = parse_double(fields[2], "phase");
    entries.push_back(h);
  }
  return Basis::from_harmonics(std::move(entries), std::move(name));
}

Basis read_basis_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_basis(in, path);
}

void write_basis(std::ostream& out, const Basis& b) {
  if (!b.name().empty()) out << "# basis=" << b.name() << "\n";
  for (const Harmonic& h : b.harmonics()) {
    out << h.index << "," << format_number(h.amplitude) << "," << format_number(h.phase) << "\n";
  }
}

void write_basis_file(const std::string& path, const Basis& b) {
  std::ofstream out = open_output(path);
  write_basis(out, b);
}

PolarSpectrum read_spectrum(std::istream& in) {
  PolarSpectrum ps;
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("basis=", 0) == 0) ps.basis_label = body.substr(6);
      if (body.rfind("mode=", 0) == 0) ps.mode = render_mode_from_string(body.substr(5));
      continue;
    }
    rows.push_back(t);
  }
  if (rows.empty()) throw std::runtime_error("spectrum file has no data rows");

  bool saw_dc = false;
  for (const std::string& row : rows) {
    const std::vector<std::string> fields = split_fields(row);
    if (fields.size() != 3) throw std::runtime_error("spectrum rows must be 'k,modulus,phase'");
    const long k = parse_long(fields[0], "frequency");
    if (k == 0) {
      ps.dc = parse_double(fields[1], "dc");
      saw_dc = true;
      continue;
    }
    if (k != static_cast<long>(ps.entries.size()) + 1)
      throw std::runtime_error("spectrum frequencies must be ascending and contiguous");
    SpectrumEntry e;
    e.modulus = parse_double(fields[1], "modulus");
    e.phase = parse_double(fields[2], "phase");
    ps.entries.push_back(e);
  }
  if (!saw_dc) throw std::runtime_error("spectrum file is missing the '0,<dc>,0' row");
  return ps;
}

PolarSpectrum read_spectrum_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_spectrum(in);
}

void write_spectrum(std::ostream& out, const PolarSpectrum& ps) {
  if (!ps.basis_label.empty()) out << "# basis=" << ps.basis_label << "\n";
  out << "# mode=" << to_string(ps.mode) << "\n";
  out << "0," << format_number(ps.dc) << ",0\n";
  for (int k = 1; k <= ps.k_max(); ++k) {
    const SpectrumEntry& e = ps.entries[static_cast<std::size_t>(k - 1)];
    out << k << "," << format_number(e.modulus) << "," << format_number(e.phase) << "\n";
  }
}

void write_spectrum_file(const std::string& path, const PolarSpectrum& ps) {
  std::ofstream out = open_output(path);
  write_spectrum(out, ps);
}

TransferFunction read_transfer(std::istream& in, int k_max) {
  TransferFunction g{std::vector<double>(static_cast<std::size_t>(k_max), 0.0), 1.0};
  for (const std::string& line : data_lines(in)) {
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 2) throw std::runtime_error("transfer rows must be 'k,gain'");
    const long k = parse_long(fields[0], "frequency");
    const double gain = parse_double(fields[1], "gain");
    if (k == 0) {
      g.dc_gain = gain;
    } else if (k >= 1 && k <= k_max) {
      g.gains[static_cast<std::size_t>(k - 1)] = gain;
    }
    // rows above k_max are allowed and ignored: the file may target a longer signal
  }
  return g;
}

TransferFunction read_transfer_file(const std::string& path, int k_max) {
  std::ifstream in = open_input(path);
  return read_transfer(in, k_max);
}

bool looks_like_transfer_spec(const std::string& text) {
  return text == "allpass" || text.rfind("lowpass:", 0) == 0 || text.rfind("highpass:", 0) == 0 ||
         text.rfind("keep:", 0) == 0;
}

TransferFunction parse_transfer_spec(const std::string& text, int k_max) {
  if (text == "allpass") return TransferFunction::all_pass(k_max);
  if (text.rfind("lowpass:", 0) == 0)
    return TransferFunction::low_pass(k_max,
                                      static_cast<int>(parse_long(text.substr(8), "cutoff")));
  if (text.rfind("highpass:", 0) == 0)
    return TransferFunction::high_pass(k_max,
                                       static_cast<int>(parse_long(text.substr(9), "cutoff")));
  if (text.rfind("keep:", 0) == 0) {
    std::vector<int> bins;
    for (const std::string& f : split_fields(text.substr(5)))
      bins.push_back(static_cast<int>(parse_long(f, "bin")));
    return TransferFunction::keep(k_max, bins);
  }
  throw std::runtime_error("unknown transfer spec: " + text);
}

void write_reconstruction_report(std::ostream& out, const ReconstructionReport& report, int n) {
  out << "# basis=" << report.basis_label << "\n";
  out << "# mode=" << to_string(report.mode) << "\n";
  out << "# N=" << n << "\n";
  out << "order,rms_error\n";
  for (std::size_t i = 0; i < report.orders.size(); ++i) {
    out << report.orders[i] << "," << format_number(report.rms_errors[i]) << "\n";
  }
}

void write_reconstruction_report_file(const std::string& path,
                                      const ReconstructionReport& report, int n) {
  std::ofstream out = open_output(path);
  write_reconstruction_report(out, report, n);
}

}  // namespace gdt::csv
