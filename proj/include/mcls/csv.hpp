#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcls/errors.hpp"

namespace mcls {

// RFC 4180 parsing over a whole buffer: quoted fields may contain commas,
// doubled quotes, and line breaks. Accepts both LF and CRLF records.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view data) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') {
            end_row();
            ++i;
        } else if (c == '\n') {
            end_row();
        } else {
            field.push_back(c);
            field_started = true;
        }
    }
    if (in_quotes) throw MalformedRecord("csv: unterminated quoted field");
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

inline std::string csv_escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    out += '\n';
    return out;
}

}  // namespace mcls
