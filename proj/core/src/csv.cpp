// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0

#include "gsa/csv.hpp"

#include <cstdio>
#include <fstream>

#include "gsa/errors.hpp"

namespace gsa {

std::string csv_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF endings
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw ConfigError("failed writing '" + path + "'");
    }
}

}  // namespace gsa
