#pragma once

#include <complex>
#include <ostream>
#include <string>

namespace resurgentia::tools {

// Exit status: 0 success, 1 domain/tolerance failure (a JSON error record or a
// failing result is written to `out`), 2 usage error (message on `err`).
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "3", "0.05i", "-i", "1-2.5i", "1,-2.5"
std::complex<long double> parse_complex(const std::string& s);
// "1.2", "pi", "-pi", "0.25pi"
long double parse_angle(const std::string& s);

}  // namespace resurgentia::tools
