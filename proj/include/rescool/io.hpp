#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rescool/linalg.hpp"

namespace rescool {

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_number(double value);

/// Locale-independent; the whole token must be consumed. Throws ParseError.
double parse_double(std::string_view text);

/// "re,im"
cplx parse_complex(std::string_view text);

// Matrix file: a header line "dim N" followed by N rows of N entries "re,im"
// separated by whitespace. Blank lines and lines starting with '#' are ignored.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

// Amplitude file: one "re,im" per line in basis order, '#' comments allowed.
// The norm must be within 1e-6 of one; the result is renormalized exactly.
ComplexVector read_amplitudes(std::istream& in);
ComplexVector read_amplitude_file(const std::string& path);
void write_amplitudes(std::ostream& out, const ComplexVector& v);

}  // namespace rescool
