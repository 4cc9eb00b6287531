// SPDX-License-Identifier: Apache-2.0
//
// zfbend - sum-rate bend-point analysis for zero-forcing multiuser MIMO
// Copyright (C) 2026 The zfbend authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Channel matrix file format: line 1 holds N, then N lines each with 2N
// whitespace-separated decimal floats, re/im interleaved per entry,
// row-major. Saved with 17 significant digits so a reload is bit-identical.

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "complex_mat.hpp"
#include "format.hpp"

namespace zfbend {

/// Malformed matrix file; the message names the offending 1-based line.
class MatrixFileError : public IoError {
  public:
    MatrixFileError(std::size_t line, const std::string& what)
        : IoError("matrix file line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

}  // namespace detail

inline ComplexMat read_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw MatrixFileError(1, "missing dimension line");
    const auto dim_tokens = detail::split_whitespace(line);
    std::size_t dim = 0;
    if (dim_tokens.size() != 1)
        throw MatrixFileError(1, "malformed dimension line: expected a single integer");
    {
        const std::string_view tok = dim_tokens.front();
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), dim);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || dim == 0)
            throw MatrixFileError(1, "malformed dimension line: '" + std::string(tok) + "'");
    }

    ComplexMat m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t line_no = r + 2;
        if (!std::getline(in, line))
            throw MatrixFileError(line_no, "unexpected end of file: expected " +
                                               std::to_string(dim) + " matrix rows");
        const auto tokens = detail::split_whitespace(line);
        if (tokens.size() != 2 * dim)
            throw MatrixFileError(line_no, "expected " + std::to_string(2 * dim) +
                                               " values, got " + std::to_string(tokens.size()));
        for (std::size_t c = 0; c < dim; ++c) {
            double re = 0.0;
            double im = 0.0;
            if (!parse_double(tokens[2 * c], re))
                throw MatrixFileError(line_no, "non-numeric token '" + std::string(tokens[2 * c]) + "'");
            if (!parse_double(tokens[2 * c + 1], im))
                throw MatrixFileError(line_no,
                                      "non-numeric token '" + std::string(tokens[2 * c + 1]) + "'");
            m(r, c) = Complex(re, im);
        }
    }
    if (!all_finite(m)) throw MatrixFileError(1, "matrix contains non-finite entries");
    return m;
}

inline ComplexMat load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file: " + path.string());
    return read_matrix(in);
}

inline void save_matrix(std::ostream& os, const ComplexMat& m) {
    os << m.dim() << '\n';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c != 0) os << ' ';
            os << format_exact(m(r, c).real()) << ' ' << format_exact(m(r, c).imag());
        }
        os << '\n';
    }
    if (!os) throw IoError("save_matrix: stream write failed");
}

inline void save_matrix(const std::filesystem::path& path, const ComplexMat& m) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open output file: " + path.string());
    save_matrix(os, m);
}

}  // namespace zfbend
