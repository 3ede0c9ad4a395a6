#include "rescool/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rescool/errors.hpp"

namespace rescool {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    if (ec != std::errc{}) throw Error("format_number: conversion failed");
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

cplx parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected re,im but got '" + std::string(text) + "'");
    return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

ComplexMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<cplx> data;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::istringstream tokens(line);
        if (!have_header) {
            std::string word, count;
            tokens >> word >> count;
            if (word != "dim" || count.empty()) throw ParseError("matrix file must start with 'dim N'");
            const double d = parse_double(count);
            if (d < 1 || d != std::floor(d)) throw ParseError("bad matrix dimension '" + count + "'");
            n = static_cast<std::size_t>(d);
            data.reserve(n * n);
            have_header = true;
            continue;
        }
        std::string entry;
        std::size_t in_row = 0;
        while (tokens >> entry) {
            data.push_back(parse_complex(entry));
            ++in_row;
        }
        if (in_row != n) {
            throw ParseError("matrix row has " + std::to_string(in_row) + " entries, expected " + std::to_string(n));
        }
    }
    if (!have_header) throw ParseError("matrix file is empty");
    if (data.size() != n * n) {
        throw ParseError("matrix file has " + std::to_string(data.size() / n) + " rows, expected " + std::to_string(n));
    }
    return ComplexMatrix(n, n, std::move(data));
}

ComplexMatrix read_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("write_matrix: matrix must be square");
    out << "dim " << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_number(m(i, j).real()) << ',' << format_number(m(i, j).imag());
        }
        out << '\n';
    }
}

ComplexVector read_amplitudes(std::istream& in) {
    std::string line;
    std::vector<cplx> amps;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        amps.push_back(parse_complex(trim(line)));
    }
    if (amps.empty()) throw ParseError("amplitude file is empty");
    ComplexVector v(std::move(amps));
    if (std::abs(v.norm() - 1.0) > 1e-6) {
        throw NotNormalized("amplitude file has norm " + format_number(v.norm()));
    }
    return v.normalized();
}

ComplexVector read_amplitude_file(const std::string& path) {
    auto in = open_input(path);
    return read_amplitudes(in);
}

void write_amplitudes(std::ostream& out, const ComplexVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out << format_number(v[i].real()) << ',' << format_number(v[i].imag()) << '\n';
    }
}

}  // namespace rescool
