#include "report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace suq2::cli {

Format parse_format(const std::string& s) {
    if (s == "pretty") return Format::Pretty;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format: " + s);
}

Table::Table(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {}

void Table::add(std::vector<std::string> row) {
    if (row.size() != columns_.size()) throw std::logic_error("table row width mismatch in " + title_);
    rows_.push_back(std::move(row));
}

std::string Table::pretty() const {
    std::vector<size_t> w(columns_.size());
    for (size_t c = 0; c < columns_.size(); ++c) w[c] = columns_[c].size();
    for (const auto& r : rows_)
        for (size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    std::ostringstream os;
    os << "== " << title_ << "\n";
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) {
            os << r[c];
            if (c + 1 < r.size()) os << std::string(w[c] - r[c].size() + 2, ' ');
        }
        os << "\n";
    };
    line(columns_);
    for (const auto& r : rows_) line(r);
    return os.str();
}

std::string Table::csv() const {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    for (size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << cell(columns_[c]);
    os << "\n";
    for (const auto& r : rows_) {
        for (size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << cell(r[c]);
        os << "\n";
    }
    return os.str();
}

nlohmann::json Table::json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rows_) {
        nlohmann::json o = nlohmann::json::object();
        for (size_t c = 0; c < r.size(); ++c) o[columns_[c]] = r[c];
        rows.push_back(o);
    }
    return {{"title", title_}, {"rows", rows}};
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::filesystem::path output_path(const std::string& output_flag, const std::string& default_name) {
    if (!output_flag.empty()) return output_flag;
    const char* dir = std::getenv("SUQ2_OUTPUT_DIR");
    return std::filesystem::path(dir && *dir ? dir : ".") / default_name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

}  // namespace suq2::cli
