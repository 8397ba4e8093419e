#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace suq2::cli {

enum class Format { Pretty, Csv, Json };
Format parse_format(const std::string& s);

// A rectangular report; cells are already formatted.
class Table {
public:
    Table(std::string title, std::vector<std::string> columns);
    void add(std::vector<std::string> row);
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    const std::string& title() const { return title_; }

    std::string pretty() const;
    std::string csv() const;
    nlohmann::json json() const;

private:
    std::string title_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string fmt(double x);
std::string pass_fail(bool ok);

// Resolve a file name against --output or the SUQ2_OUTPUT_DIR directory (default ".").
std::filesystem::path output_path(const std::string& output_flag, const std::string& default_name);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace suq2::cli
