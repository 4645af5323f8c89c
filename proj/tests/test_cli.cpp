#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "spectra/cli.hpp"
#include "spectra/errors.hpp"
#include "spectra/policy.hpp"
#include "spectra/qseries.hpp"
#include "spectra/spectral.hpp"

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("spectraq");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = spectra::run_cli(static_cast<int>(argv.size()),
                                    argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex literal parsing") {
  using spectra::parse_complex;
  CHECK(parse_complex("0.25+1.0i") == std::complex<double>{0.25, 1.0});
  CHECK(parse_complex("2") == std::complex<double>{2.0, 0.0});
  CHECK(parse_complex("i") == std::complex<double>{0.0, 1.0});
  CHECK(parse_complex("-i") == std::complex<double>{0.0, -1.0});
  CHECK(parse_complex("-1.5-2i") == std::complex<double>{-1.5, -2.0});
  CHECK(parse_complex("1e-3-2.5i") == std::complex<double>{1e-3, -2.5});
  CHECK(parse_complex("3.5i") == std::complex<double>{0.0, 3.5});
  CHECK(parse_complex("+0.5+0.5i") == std::complex<double>{0.5, 0.5});

  CHECK_THROWS_AS(parse_complex(""), spectra::usage_error);
  CHECK_THROWS_AS(parse_complex("abc"), spectra::usage_error);
  CHECK_THROWS_AS(parse_complex("1+2"), spectra::usage_error);
  CHECK_THROWS_AS(parse_complex("i5"), spectra::usage_error);
  CHECK_THROWS_AS(parse_complex("1+2i3"), spectra::usage_error);
}

TEST_CASE("eval matches the library") {
  const auto result =
      run({"eval", "zgamma", "--s", "2", "--tau", "0.25+1.0i", "--format",
           "json"});
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  const spectra::ModularParameter tau(0.25, 1.0);
  const auto expected =
      spectra::z_gamma_product({2.0, 0.0}, tau, spectra::TruncationPolicy{});
  CHECK(j["value"]["re"].get<double>() == expected.value.real());
  CHECK(j["value"]["im"].get<double>() == expected.value.imag());
  CHECK(j["tail"].get<double>() == expected.tail);
}

TEST_CASE("eval echoes conventions and accepts tau = i") {
  const auto result = run({"eval", "f3", "--tau", "i"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("conventions: m_base=0 eta_sign=+") !=
        std::string::npos);
  CHECK(result.out.find("value = ") != std::string::npos);
  CHECK(result.out.find("tail = ") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"eval", "zgamma", "--s", "2"}).exit_code == 2);      // no tau
  CHECK(run({"eval", "nosuch", "--tau", "i"}).exit_code == 2);    // bad fn
  CHECK(run({"eval", "zgamma", "--tau", "i"}).exit_code == 2);    // no s
  CHECK(run({"expand", "partition", "--order", "0"}).exit_code == 2);
  CHECK(run({"verify", "bogus"}).exit_code == 2);
  CHECK(run({"eval", "f1", "--tau", "0.25-1.0i"}).exit_code == 2);  // Im<0
  CHECK(run({"eval", "f1", "--tau", "junk"}).exit_code == 2);
  CHECK(run({"expand", "goettsche"}).exit_code == 2);  // missing betti
  CHECK(run({"nonsense"}).exit_code == 2);
}

TEST_CASE("expand partition yields p(0..9)") {
  const auto result =
      run({"expand", "partition", "--order", "10", "--format", "json"});
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["grid_denominator"] == 1);
  CHECK(j["offset"] == "0");
  const std::vector<std::string> expected = {"1",  "1",  "2",  "3",  "5",
                                             "7",  "11", "15", "22", "30"};
  REQUIRE(j["terms"].size() == expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(j["terms"][n]["exponent"] == std::to_string(n));
    CHECK(j["terms"][n]["coefficient"] == expected[n]);
  }
}

TEST_CASE("expand goettsche emits the bivariate table") {
  const auto result = run({"expand", "goettsche", "--betti", "1,0,22,0,1",
                           "--order-q", "3", "--format", "json"});
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j["rows"][1]["coefficients"] ==
        nlohmann::json({"1", "0", "22", "0", "1"}));
  // the hilbert subcommand is an alias
  const auto alias = run({"hilbert", "--betti", "1,0,22,0,1", "--order-q",
                          "3", "--format", "json"});
  CHECK(alias.out == result.out);
}

TEST_CASE("expand csv and plain formats") {
  const auto csv =
      run({"expand", "eta", "--order", "3", "--format", "csv"});
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.find("exponent,coefficient\n") == 0);
  CHECK(csv.out.find("1/24,1") != std::string::npos);
  CHECK(csv.out.find("25/24,-1") != std::string::npos);

  const auto plain = run({"expand", "f1", "--order", "2"});
  REQUIRE(plain.exit_code == 0);
  CHECK(plain.out.find("-1/48\t1") != std::string::npos);
  CHECK(plain.out.find("23/48\t-1") != std::string::npos);
}

TEST_CASE("verify suites map hard failures to the exit code") {
  const auto crossz = run({"verify", "crossz"});
  CHECK(crossz.exit_code == 0);
  const auto j = nlohmann::json::parse(crossz.out);
  REQUIRE(j.is_array());
  for (const auto& report : j) {
    CHECK(report["pass"] == true);
    CHECK(report["audit"] == false);
  }

  CHECK(run({"verify", "ftriple", "--m-base", "0"}).exit_code == 0);
  CHECK(run({"verify", "zeros", "--tau", "0.3+1.1i", "--box", "-3,1,-7,7"})
            .exit_code == 0);
  // audits alone never fail the run
  CHECK(run({"verify", "ruelletriple"}).exit_code == 0);
  CHECK(run({"verify", "goettsche-spectral"}).exit_code == 0);
}

TEST_CASE("verify output is byte-identical across runs") {
  const auto a = run({"verify", "eulerbracket"});
  const auto b = run({"verify", "eulerbracket"});
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("zeros subcommand lists the lattice") {
  const auto result = run({"zeros", "--tau", "0.3+1.1i"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("n\tk1\tk2\tre\tim\tresidual") == 0);
  const auto json_result =
      run({"zeros", "--tau", "0.3+1.1i", "--format", "json"});
  const auto j = nlohmann::json::parse(json_result.out);
  REQUIRE(j.is_array());
  CHECK(!j.empty());
  for (const auto& zero : j) {
    CHECK(zero["residual"].get<double>() <= 1e-10);
  }
}

TEST_CASE("--out writes to a file") {
  const std::string path = "cli_test_output.json";
  const auto result = run({"expand", "partition", "--order", "5", "--format",
                           "json", "--out", path});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  const auto j = nlohmann::json::parse(content.str());
  CHECK(j["terms"].size() == 5);
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("environment variable overrides the default tolerance") {
  setenv("SPECTRA_QKIT_EPS", "1e-6", 1);
  CHECK(spectra::TruncationPolicy::default_tolerance() == 1e-6);
  unsetenv("SPECTRA_QKIT_EPS");
  CHECK(spectra::TruncationPolicy::default_tolerance() == 1e-12);
}
