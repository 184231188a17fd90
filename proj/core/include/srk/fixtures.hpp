#pragma once

#include <map>
#include <string>
#include <vector>

#include "srk/params.hpp"

namespace srk {

// One cell of a reference table: either a transcribed integer (0 means
// "bound not applicable" in the tables' convention) or an explicit unknown
// marker "?" for entries the reference left uncomputed.
struct fixture_cell {
    bool known = false;
    Int value;
};

struct fixture_row {
    int t = 0;
    long q = 0;
    std::vector<int> n, m;
    int d = 0;
    std::map<std::string, fixture_cell> cells;

    params to_params() const;
};

struct table_fixture {
    int table_id = 0;
    std::vector<std::string> value_columns;  // columns after the parameter key
    std::vector<fixture_row> rows;
};

// Parses one of the shipped reference CSV files. Lines starting with '#'
// are comments; the first data line is the header. n and m cells hold
// space-separated block lists.
table_fixture load_fixture_file(const std::string& path, int table_id);

// Resolves data/<name>: explicit dir argument, then $SRK_DATA_DIR, then
// ./data relative to the working directory, then the build-time source dir.
std::string locate_data_file(const std::string& name, const std::string& dir_hint = "");

table_fixture load_table(int table_id, const std::string& dir_hint = "");

}  // namespace srk
