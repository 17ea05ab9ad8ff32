#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eaqecc/params.hpp"

namespace eaqecc {

/// One published parameter row. Fixture files are plain text: a header line
/// "q n k d c" followed by one whitespace-separated integer row per code;
/// blank lines and lines starting with '#' are ignored.
struct TableRow {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t c = 0;
};

std::vector<TableRow> load_table_fixture(const std::filesystem::path& path);

/// File name of the fixture for quantum alphabet q, e.g. "table_q4.txt".
std::string table_fixture_name(std::uint64_t q);

struct TableMatch {
    TableRow row;
    std::optional<EAQECCParams> match;  // sweep row with equal (n, k, c) and d_lower >= d
    std::optional<EAQECCParams> nearest;  // closest sweep row with equal (n, c), for diagnostics
};

/// Exact (n, k, c) match with d_lower >= d; among several candidates the one
/// with the smallest d_lower wins.
std::vector<TableMatch> match_table(const std::vector<TableRow>& rows,
                                    const std::vector<EAQECCParams>& sweep_rows);

}  // namespace eaqecc
