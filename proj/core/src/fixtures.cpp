#include "srk/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srk {

params fixture_row::to_params() const { return normalize_params(q, n, m); }

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& cell) {
    std::vector<int> out;
    std::istringstream is(cell);
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

}  // namespace

table_fixture load_fixture_file(const std::string& path, int table_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    table_fixture fix;
    fix.table_id = table_id;

    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, ',');
        if (header.empty()) {
            header = fields;
            for (const auto& h : header)
                if (h != "t" && h != "q" && h != "n" && h != "m" && h != "d" && h != "V")
                    fix.value_columns.push_back(h);
            continue;
        }
        if (fields.size() != header.size())
            throw std::runtime_error("fixture row arity mismatch in " + path);
        fixture_row row;
        for (size_t i = 0; i < header.size(); ++i) {
            const std::string& key = header[i];
            const std::string& cell = fields[i];
            if (key == "t") row.t = std::stoi(cell);
            else if (key == "q") row.q = std::stol(cell);
            else if (key == "n") row.n = parse_int_list(cell);
            else if (key == "m") row.m = parse_int_list(cell);
            else if (key == "d") row.d = std::stoi(cell);
            else if (key == "V") row.cells["V"] = {true, Int(cell)};
            else if (cell == "?") row.cells[key] = {false, 0};
            else row.cells[key] = {true, Int(cell)};
        }
        if (row.d == 0) row.d = (table_id == 1) ? 3 : 4;
        fix.rows.push_back(std::move(row));
    }
    if (header.empty()) throw std::runtime_error("fixture file " + path + " has no header");
    return fix;
}

std::string locate_data_file(const std::string& name, const std::string& dir_hint) {
    namespace fs = std::filesystem;
    std::vector<std::string> candidates;
    if (!dir_hint.empty()) candidates.push_back(dir_hint);
    if (const char* env = std::getenv("SRK_DATA_DIR")) candidates.push_back(env);
    candidates.push_back("data");
#ifdef SRK_SOURCE_DATA_DIR
    candidates.push_back(SRK_SOURCE_DATA_DIR);
#endif
    for (const auto& dir : candidates) {
        fs::path p = fs::path(dir) / name;
        if (fs::exists(p)) return p.string();
    }
    throw std::runtime_error("data file " + name + " not found (set SRK_DATA_DIR)");
}

table_fixture load_table(int table_id, const std::string& dir_hint) {
    std::string name = "table" + std::to_string(table_id) + ".csv";
    return load_fixture_file(locate_data_file(name, dir_hint), table_id);
}

}  // namespace srk
