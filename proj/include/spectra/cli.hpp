#pragma once

#include <complex>
#include <iosfwd>
#include <string_view>

namespace spectra {

// Entry point for the command-line front end.  Exit codes: 0 success /
// all-pass, 1 hard verification failure, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Parses the literal complex forms "a+bi", "a-bi", "bi", "a", "i", "-i".
// usage_error on anything else.
std::complex<double> parse_complex(std::string_view text);

}  // namespace spectra
