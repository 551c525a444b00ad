#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "gdt/csv.hpp"
#include "helpers.hpp"

using namespace gdt;
using namespace gdt::testing;

TEST_CASE("signal CSV accepts one- and two-column forms") {
  std::istringstream one("0.5\n-0.25\n1\n0\n");
  const Signal a = csv::read_signal(one);
  CHECK(a.size() == 4);
  CHECK(a[1] == doctest::Approx(-0.25));

  std::istringstream with_header("value\n0.5\n-0.25\n1\n0\n");
  const Signal b = csv::read_signal(with_header);
  CHECK(rms_diff(a, b) == 0.0);

  std::istringstream two("# a comment\nindex,value\n0,0.5\n1,-0.25\n2,1\n3,0\n");
  const Signal c = csv::read_signal(two);
  CHECK(rms_diff(a, c) == 0.0);

  std::istringstream bad("0,0.5\n2,-0.25\n1,1\n3,0\n");
  CHECK_THROWS(csv::read_signal(bad));
}

TEST_CASE("signal CSV round trip") {
  std::mt19937 rng(157);
  const Signal s = random_samples(rng, 32);
  std::stringstream ss;
  csv::write_signal(ss, s, {"test"});
  const Signal back = csv::read_signal(ss);
  CHECK(rms_diff(s, back) < 1e-11);
}

TEST_CASE("basis CSV round trip and error path") {
  const Basis b = Basis::from_harmonics({{1, 1.0, 0.3}, {3, 0.5, 1.0}, {7, 0.1, 2.0}});
  std::stringstream ss;
  csv::write_basis(ss, b);
  const Basis back = csv::read_basis(ss);
  REQUIRE(back.harmonics().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.harmonics()[i].index == b.harmonics()[i].index);
    CHECK(back.harmonics()[i].amplitude == doctest::Approx(b.harmonics()[i].amplitude));
  }

  std::istringstream nofund("2,1.0,0\n3,0.5,0\n");
  CHECK_THROWS_AS(csv::read_basis(nofund), Error);
}

TEST_CASE("spectrum CSV round trip keeps mode and label") {
  PolarSpectrum ps;
  ps.dc = 0.5;
  ps.basis_label = "square";
  ps.mode = RenderMode::sampled;
  ps.entries = {{1.0, 0.1}, {0.5, 2.0}, {0.0, 0.0}};
  std::stringstream ss;
  csv::write_spectrum(ss, ps);
  const PolarSpectrum back = csv::read_spectrum(ss);
  CHECK(back.dc == doctest::Approx(0.5));
  CHECK(back.basis_label == "square");
  CHECK(back.mode == RenderMode::sampled);
  REQUIRE(back.k_max() == 3);
  CHECK(back.entries[1].modulus == doctest::Approx(0.5));
  CHECK(back.entries[1].phase == doctest::Approx(2.0));
}

TEST_CASE("transfer specs") {
  const TransferFunction all = csv::parse_transfer_spec("allpass", 5);
  CHECK(all.gains == std::vector<double>{1, 1, 1, 1, 1});
  CHECK(all.dc_gain == 1.0);

  const TransferFunction lp = csv::parse_transfer_spec("lowpass:2", 5);
  CHECK(lp.gains == std::vector<double>{1, 1, 0, 0, 0});

  const TransferFunction hp = csv::parse_transfer_spec("highpass:2", 5);
  CHECK(hp.gains == std::vector<double>{0, 0, 1, 1, 1});
  CHECK(hp.dc_gain == 0.0);

  const TransferFunction keep = csv::parse_transfer_spec("keep:1,4", 5);
  CHECK(keep.gains == std::vector<double>{1, 0, 0, 1, 0});
  CHECK(keep.dc_gain == 0.0);

  CHECK(csv::looks_like_transfer_spec("keep:3"));
  CHECK_FALSE(csv::looks_like_transfer_spec("gains.csv"));

  std::istringstream file("# gains\n0,0.5\n1,1\n3,-2\n");
  const TransferFunction g = csv::read_transfer(file, 4);
  CHECK(g.dc_gain == doctest::Approx(0.5));
  CHECK(g.gains == std::vector<double>{1, 0, -2, 0});
}

TEST_CASE("numbers are written with 12 significant digits") {
  CHECK(csv::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(csv::format_number(2.0) == "2");
}
