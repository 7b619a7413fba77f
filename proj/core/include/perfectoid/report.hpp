#pragma once

#include <string>
#include <utility>
#include <vector>

namespace perfectoid {

/// Report model shared by the CLI subcommands: named sections with key/value
/// fields and tables. Renders to JSON (stable field ordering) or TSV; all
/// norm values arrive here as exact strings, never decimals.
struct ReportTable {
    std::string name;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

struct ReportSection {
    std::string title;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<ReportTable> tables;
};

struct Report {
    std::vector<ReportSection> sections;

    ReportSection& section(const std::string& title);
};

std::string render_report(const Report& report, const std::string& format);

} // namespace perfectoid
