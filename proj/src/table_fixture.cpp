#include "eaqecc/table_fixture.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "eaqecc/error.hpp"

namespace eaqecc {

std::vector<TableRow> load_table_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open table fixture " + path.string());
    std::vector<TableRow> rows;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (!header_seen) {
            std::string q, n, k, d, c;
            fields >> q >> n >> k >> d >> c;
            if (q != "q" || n != "n" || k != "k" || d != "d" || c != "c")
                throw Error(Errc::invalid_argument, path.string() + ": expected header 'q n k d c'");
            header_seen = true;
            continue;
        }
        TableRow row;
        std::string extra;
        if (!(fields >> row.q >> row.n >> row.k >> row.d >> row.c) || (fields >> extra))
            throw Error(Errc::invalid_argument, path.string() + ":" + std::to_string(line_no) + ": malformed row");
        rows.push_back(row);
    }
    if (!header_seen) throw Error(Errc::invalid_argument, path.string() + ": empty fixture");
    return rows;
}

std::string table_fixture_name(std::uint64_t q) { return "table_q" + std::to_string(q) + ".txt"; }

std::vector<TableMatch> match_table(const std::vector<TableRow>& rows, const std::vector<EAQECCParams>& sweep_rows) {
    std::vector<TableMatch> out;
    out.reserve(rows.size());
    for (const TableRow& row : rows) {
        TableMatch m{row, std::nullopt, std::nullopt};
        for (const EAQECCParams& p : sweep_rows) {
            if (p.n != row.n || p.c != row.c) continue;
            if (p.k == row.k && p.d_lower >= row.d && (!m.match || p.d_lower < m.match->d_lower)) m.match = p;
            auto gap = [&](const EAQECCParams& x) {
                return std::llabs(x.k - row.k) + std::llabs(static_cast<long long>(x.d_lower) - static_cast<long long>(row.d));
            };
            if (!m.nearest || gap(p) < gap(*m.nearest)) m.nearest = p;
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace eaqecc
