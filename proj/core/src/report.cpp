#include "perfectoid/report.hpp"

#include <sstream>

#include <json.hpp>

#include "perfectoid/errors.hpp"

namespace perfectoid {

ReportSection& Report::section(const std::string& title) {
    sections.push_back(ReportSection{title, {}, {}});
    return sections.back();
}

namespace {

std::string render_json(const Report& report) {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const auto& sec : report.sections) {
        nlohmann::ordered_json s;
        s["section"] = sec.title;
        for (const auto& [k, v] : sec.fields) s[k] = v;
        for (const auto& table : sec.tables) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : table.rows) {
                nlohmann::ordered_json r;
                for (std::size_t i = 0; i < table.headers.size() && i < row.size(); ++i)
                    r[table.headers[i]] = row[i];
                rows.push_back(std::move(r));
            }
            s[table.name] = std::move(rows);
        }
        root.push_back(std::move(s));
    }
    return root.dump(1) + "\n";
}

std::string render_tsv(const Report& report) {
    std::ostringstream os;
    for (const auto& sec : report.sections) {
        os << "# " << sec.title << "\n";
        for (const auto& [k, v] : sec.fields) os << k << "\t" << v << "\n";
        for (const auto& table : sec.tables) {
            os << "## " << table.name << "\n";
            for (std::size_t i = 0; i < table.headers.size(); ++i)
                os << (i ? "\t" : "") << table.headers[i];
            os << "\n";
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
                os << "\n";
            }
        }
    }
    return os.str();
}

} // namespace

std::string render_report(const Report& report, const std::string& format) {
    if (format == "json") return render_json(report);
    if (format == "tsv") return render_tsv(report);
    throw UnsupportedConfig("output format must be json or tsv");
}

} // namespace perfectoid
