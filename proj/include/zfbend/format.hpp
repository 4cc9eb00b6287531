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

#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zfbend {

/// File/stream failure, distinct from usage and numeric errors so the CLI
/// can map it to its own exit code.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Locale-independent %g-style formatting ('.' decimal separator always).
inline std::string format_general(double value, int significant_digits) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, significant_digits);
    return std::string(buf, res.ptr);
}

/// 12 significant digits: every CSV and report value.
inline std::string format_value(double value) { return format_general(value, 12); }

/// 17 significant digits: round-trips any double bit-exactly (matrix files).
inline std::string format_exact(double value) { return format_general(value, 17); }

/// Strict locale-independent parse of a whole token as a double.
inline bool parse_double(std::string_view token, double& out) {
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(token.data(), last, out);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace zfbend
