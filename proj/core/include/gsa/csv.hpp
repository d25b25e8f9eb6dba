// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>

namespace gsa {

// Round-trip-exact decimal rendering of a double (17 significant digits,
// '.' decimal point, no locale dependence).
std::string csv_double(double value);

// Writes text (CSV or Markdown) to `path` byte-for-byte with LF endings.
// Throws ConfigError on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

// Accumulates a CSV file as text: '#'-prefixed comment lines first, then a
// header row, then data rows; comma separators and LF line endings
// throughout. Doubles go through csv_double, so identical inputs always
// produce byte-identical files.
class CsvBuilder {
public:
    // Adds "# <text>" above the header. Call before header()/row().
    void comment(std::string_view text) {
        text_ += "# ";
        text_ += text;
        text_ += '\n';
    }

    void header(std::span<const std::string> columns) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) text_ += ',';
            text_ += columns[i];
        }
        text_ += '\n';
    }

    class RowRef {
    public:
        explicit RowRef(std::string& out) : out_(out) {}
        RowRef(const RowRef&) = delete;
        RowRef& operator=(const RowRef&) = delete;
        ~RowRef() { out_ += '\n'; }

        RowRef& cell(std::string_view text) {
            if (!first_) out_ += ',';
            first_ = false;
            out_ += text;
            return *this;
        }
        RowRef& cell(double value) {
            return cell(std::string_view(csv_double(value)));
        }
        template <std::integral T>
        RowRef& cell(T value) {
            return cell(std::string_view(std::to_string(value)));
        }

    private:
        std::string& out_;
        bool first_ = true;
    };

    // Starts a data row; cells are appended through the returned reference
    // and the row is terminated when it goes out of scope.
    RowRef row() { return RowRef(text_); }

    const std::string& text() const { return text_; }

    void write(const std::string& path) const { write_text_file(path, text_); }

private:
    std::string text_;
};

}  // namespace gsa
