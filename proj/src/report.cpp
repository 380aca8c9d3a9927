#include "condlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "condlab/errors.hpp"

namespace condlab {

nlohmann::ordered_json make_report(const std::string& command,
                                   nlohmann::ordered_json config,
                                   nlohmann::ordered_json result) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["result"] = std::move(result);
    return doc;
}

std::string render_json(const nlohmann::ordered_json& doc) {
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\r\n") != std::string::npos;
}

void append_field(std::string& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out += field;
        return;
    }
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

} // namespace

std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        append_field(out, header[i]);
    }
    out += "\r\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv row width differs from the header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_field(out, row[i]);
        }
        out += "\r\n";
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t i = 0;
    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(row);
        row.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
            continue;
        }
        if (c == '"' && !field_started && field.empty()) {
            quoted = true;
            field_started = true;
            ++i;
        } else if (c == ',') {
            end_field();
            ++i;
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_row();
            i += 2;
        } else if (c == '\n') {
            end_row();
            ++i;
        } else {
            field += c;
            field_started = true;
            ++i;
        }
    }
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

} // namespace condlab
