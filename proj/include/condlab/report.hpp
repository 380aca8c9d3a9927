#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace condlab {

// Single output document per command run: the command name, the echoed
// configuration, and the result payload. No timestamps or host details,
// so identical runs render identical bytes.
nlohmann::ordered_json make_report(const std::string& command,
                                   nlohmann::ordered_json config,
                                   nlohmann::ordered_json result);

std::string render_json(const nlohmann::ordered_json& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Number formatting used in CSV cells: shortest form at 17 significant
// digits, which round-trips binary doubles.
std::string csv_number(double v);

// RFC 4180: CRLF records, fields quoted when they hold commas, quotes or
// line breaks, quotes doubled. An empty table renders as the header only.
std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

std::vector<std::vector<std::string>> parse_csv(const std::string& text);

} // namespace condlab
