#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eaqecc/eaqecc.h"

#ifndef EAQECC_DEFAULT_FIXTURE_DIR
#define EAQECC_DEFAULT_FIXTURE_DIR "data/tables"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Failure : std::runtime_error {
    int exit_code;
    Failure(const std::string& what, int code = kExitUsage) : std::runtime_error(what), exit_code(code) {}
};

void check(eaqecc_status st) {
    if (st != EAQECC_OK) throw Failure(eaqecc_last_error());
}

struct SettingDeleter {
    void operator()(eaqecc_setting* s) const { eaqecc_setting_destroy(s); }
};
struct ReportDeleter {
    void operator()(eaqecc_report* r) const { eaqecc_report_destroy(r); }
};
using SettingPtr = std::unique_ptr<eaqecc_setting, SettingDeleter>;
using ReportPtr = std::unique_ptr<eaqecc_report, ReportDeleter>;

struct SettingFlags {
    std::string family;
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t degree = 0;
    std::string metric;
    bool extended = false;
};

void add_setting_flags(CLI::App* cmd, SettingFlags& f) {
    auto* family = cmd->add_option("--family", f.family, "rs-hermitian | bch-euclidean | bch-hermitian")
                       ->check(CLI::IsMember({"rs-hermitian", "bch-euclidean", "bch-hermitian"}));
    auto* q = cmd->add_option("--q", f.q, "EAQECC alphabet size (with --family)");
    auto* p = cmd->add_option("--p", f.p, "characteristic");
    auto* r = cmd->add_option("--r", f.r, "alphabet exponent: the code alphabet is GF(p^r)");
    auto* degree = cmd->add_option("--degree", f.degree, "extension degree, 1 or 2");
    auto* metric = cmd->add_option("--metric", f.metric, "euclidean | hermitian")
                       ->check(CLI::IsMember({"euclidean", "hermitian"}));
    family->needs(q)->excludes(p)->excludes(r)->excludes(degree)->excludes(metric);
    q->needs(family);
    p->needs(r)->needs(degree)->needs(metric);
    cmd->add_flag("--extended", f.extended, "also evaluate at zero (length n + 1)");
}

eaqecc_family family_of(const std::string& name) {
    if (name == "rs-hermitian") return EAQECC_FAMILY_RS_HERMITIAN;
    if (name == "bch-euclidean") return EAQECC_FAMILY_BCH_EUCLIDEAN;
    return EAQECC_FAMILY_BCH_HERMITIAN;
}

SettingPtr open_setting(const SettingFlags& f) {
    eaqecc_setting* raw = nullptr;
    if (!f.family.empty()) {
        check(eaqecc_setting_create_family(family_of(f.family), f.q, f.extended, &raw));
    } else if (f.p != 0) {
        const auto metric = f.metric == "hermitian" ? EAQECC_HERMITIAN : EAQECC_EUCLIDEAN;
        check(eaqecc_setting_create(f.p, f.r, f.degree, metric, f.extended, &raw));
    } else {
        throw Failure("a setting is required: --family/--q or --p/--r/--degree/--metric");
    }
    return SettingPtr(raw);
}

eaqecc_setting_info info_of(const eaqecc_setting* s) {
    eaqecc_setting_info info{};
    check(eaqecc_setting_get_info(s, &info));
    return info;
}

unsigned thread_count() {
    const char* env = std::getenv("EAQECC_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > 4096) throw Failure("EAQECC_THREADS must be a small non-negative integer");
    return static_cast<unsigned>(v);
}

eaqecc_c_source source_of(const std::string& s) {
    if (s == "formula") return EAQECC_SOURCE_FORMULA;
    if (s == "matrix") return EAQECC_SOURCE_MATRIX;
    return EAQECC_SOURCE_COSET;
}

const char* kind_name(eaqecc_coset_kind k) {
    switch (k) {
        case EAQECC_SYMMETRIC: return "symmetric";
        case EAQECC_FR_ASYMMETRIC: return "fr-asymmetric";
        case EAQECC_SR_ASYMMETRIC: return "sr-asymmetric";
    }
    return "?";
}

// Integer-only grid shared by the csv, json and markdown renderers.
struct Grid {
    std::vector<std::string> columns;
    std::vector<std::vector<std::int64_t>> rows;
};

void render_csv(std::ostream& out, const Grid& g) {
    for (std::size_t i = 0; i < g.columns.size(); ++i) out << (i ? "," : "") << g.columns[i];
    out << '\n';
    for (const auto& row : g.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

void render_json(std::ostream& out, const Grid& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : g.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[g.columns[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void render_markdown(std::ostream& out, const Grid& g) {
    out << '|';
    for (const auto& c : g.columns) out << ' ' << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < g.columns.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : g.rows) {
        out << '|';
        for (auto v : row) out << ' ' << v << " |";
        out << '\n';
    }
}

std::string bracket(const eaqecc_params& p) {
    std::ostringstream s;
    s << "[[" << p.n << ',' << p.k << ",>=" << p.d_lower << ';' << p.c << "]]_" << p.q;
    return s.str();
}

const std::vector<std::string> kParamColumns = {"t", "m_t", "q", "n", "k", "d_lower", "c", "catalytic", "valid"};

std::vector<std::int64_t> param_cells(const eaqecc_params& p) {
    return {static_cast<std::int64_t>(p.t), static_cast<std::int64_t>(p.m_t), static_cast<std::int64_t>(p.q),
            static_cast<std::int64_t>(p.n), p.k, static_cast<std::int64_t>(p.d_lower),
            static_cast<std::int64_t>(p.c), p.catalytic, p.valid};
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw Failure("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const std::string& format, const Grid& g, std::ostream& out) {
    if (format == "csv") render_csv(out, g);
    else if (format == "json") render_json(out, g);
    else render_markdown(out, g);
}

int cmd_cosets(const SettingFlags& flags, const std::string& format, const std::string& out_path) {
    const auto setting = open_setting(flags);
    const auto info = info_of(setting.get());
    Sink sink(out_path);
    auto& out = sink.stream();
    Grid grid{{"index", "min_rep", "size", "kind", "partner"}, {}};
    std::vector<std::string> text;
    std::vector<std::uint64_t> elements;
    for (std::size_t i = 0; i < info.coset_count; ++i) {
        eaqecc_coset_info c{};
        std::size_t size = 0;
        check(eaqecc_coset_get(setting.get(), i, &c, nullptr, 0, &size));
        elements.resize(size);
        check(eaqecc_coset_get(setting.get(), i, &c, elements.data(), elements.size(), &size));
        grid.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(c.min_rep),
                             static_cast<std::int64_t>(c.size), static_cast<std::int64_t>(c.kind),
                             static_cast<std::int64_t>(c.partner)});
        std::ostringstream line;
        line << "I_" << c.min_rep << " = {";
        for (std::size_t j = 0; j < elements.size(); ++j) line << (j ? ", " : "") << elements[j];
        line << "}  " << kind_name(c.kind);
        if (c.kind != EAQECC_SYMMETRIC) line << " (reciprocal I_" << c.partner << ')';
        text.push_back(line.str());
    }
    if (format == "text") {
        out << info.coset_count << " cosets modulo " << info.n << " (multiplier " << info.multiplier << ", "
            << (info.metric == EAQECC_HERMITIAN ? "hermitian" : "euclidean") << ")\n";
        for (const auto& l : text) out << l << '\n';
    } else {
        emit(format, grid, out);
    }
    return kExitOk;
}

int cmd_params(const SettingFlags& flags, std::optional<std::size_t> t, std::optional<std::uint64_t> mt,
               const std::string& source, const std::string& format, bool dump) {
    const auto setting = open_setting(flags);
    std::size_t index = 0;
    if (t) index = *t;
    else if (mt) check(eaqecc_index_of_rep(setting.get(), *mt, &index));
    else throw Failure("one of --t or --mt is required");
    eaqecc_params p{};
    check(eaqecc_compute_params(setting.get(), index, source_of(source), &p));
    if (format == "text") {
        std::cout << bracket(p) << '\n';
    } else {
        emit(format, Grid{kParamColumns, {param_cells(p)}}, std::cout);
    }
    if (dump) {
        std::size_t needed = 0;
        check(eaqecc_dump_matrices(setting.get(), index, nullptr, 0, &needed));
        std::string buffer(needed, '\0');
        check(eaqecc_dump_matrices(setting.get(), index, buffer.data(), buffer.size(), &needed));
        std::cerr << buffer.c_str();
    }
    return kExitOk;
}

std::vector<eaqecc_params> run_sweep(const eaqecc_setting* setting, eaqecc_c_source source) {
    const auto info = info_of(setting);
    std::vector<eaqecc_params> rows(info.coset_count);
    std::size_t written = 0;
    check(eaqecc_sweep(setting, source, thread_count(), rows.data(), rows.size(), &written));
    rows.resize(written);
    return rows;
}

int cmd_sweep(const SettingFlags& flags, const std::string& source, const std::string& format,
              const std::string& out_path) {
    const auto setting = open_setting(flags);
    const auto rows = run_sweep(setting.get(), source_of(source));
    Sink sink(out_path);
    auto& out = sink.stream();
    if (format == "text") {
        for (const auto& p : rows) {
            out << "t=" << p.t << " m_t=" << p.m_t << ' ' << bracket(p);
            if (!p.valid) out << " invalid";
            else if (p.catalytic) out << " catalytic";
            out << '\n';
        }
        return kExitOk;
    }
    Grid grid{kParamColumns, {}};
    for (const auto& p : rows) grid.rows.push_back(param_cells(p));
    emit(format, grid, out);
    return kExitOk;
}

int cmd_verify(const SettingFlags& flags, bool matrix, const std::string& format) {
    const auto setting = open_setting(flags);
    eaqecc_report* raw = nullptr;
    check(eaqecc_verify(setting.get(), matrix, thread_count(), &raw));
    const ReportPtr report(raw);
    const std::size_t size = eaqecc_report_size(report.get());
    const std::size_t mismatches = eaqecc_report_mismatch_count(report.get());
    Grid grid{{"t", "m_t", "c_formula", "c_coset", "c_matrix", "agrees"}, {}};
    for (std::size_t i = 0; i < size; ++i) {
        eaqecc_record r{};
        check(eaqecc_report_get(report.get(), i, &r));
        // -1 marks a source that was not run
        grid.rows.push_back({static_cast<std::int64_t>(r.t), static_cast<std::int64_t>(r.m_t),
                             r.has_formula ? static_cast<std::int64_t>(r.c_formula) : -1,
                             static_cast<std::int64_t>(r.c_coset),
                             r.has_matrix ? static_cast<std::int64_t>(r.c_matrix) : -1, r.agrees});
    }
    if (format == "text") {
        for (const auto& row : grid.rows) {
            if (row[5]) continue;
            std::cout << "mismatch t=" << row[0] << " m_t=" << row[1] << " formula=" << row[2] << " coset=" << row[3]
                      << " matrix=" << row[4] << '\n';
        }
        std::cout << (mismatches ? "FAIL" : "OK") << ": " << size << " values of t, " << mismatches
                  << " mismatches\n";
    } else {
        emit(format, grid, std::cout);
    }
    return mismatches ? kExitMismatch : kExitOk;
}

int cmd_tables(std::uint64_t q, const std::string& fixtures, const std::string& format) {
    const auto path = std::filesystem::path(fixtures) / ("table_q" + std::to_string(q) + ".txt");
    if (!std::filesystem::exists(path)) throw Failure("no table for q=" + std::to_string(q));
    eaqecc_setting* raw = nullptr;
    check(eaqecc_setting_create_family(EAQECC_FAMILY_BCH_HERMITIAN, q, 0, &raw));
    const SettingPtr setting(raw);
    std::size_t count = 0;
    check(eaqecc_match_table(setting.get(), path.c_str(), nullptr, 0, &count));
    std::vector<eaqecc_table_row> rows(count);
    check(eaqecc_match_table(setting.get(), path.c_str(), rows.data(), rows.size(), &count));
    std::size_t unmatched = 0;
    Grid grid{{"n", "k", "d", "c", "matched", "t", "d_lower"}, {}};
    for (const auto& r : rows) {
        if (!r.matched) ++unmatched;
        grid.rows.push_back({static_cast<std::int64_t>(r.n), r.k, static_cast<std::int64_t>(r.d),
                             static_cast<std::int64_t>(r.c), r.matched,
                             r.matched ? static_cast<std::int64_t>(r.match.t) : -1,
                             r.matched ? static_cast<std::int64_t>(r.match.d_lower) : -1});
    }
    if (format == "text") {
        for (const auto& r : rows) {
            std::cout << "[[" << r.n << ',' << r.k << ",>=" << r.d << ';' << r.c << "]]_" << r.q;
            if (r.matched) {
                std::cout << "  matched t=" << r.match.t << " m_t=" << r.match.m_t << " d_lower=" << r.match.d_lower;
            } else {
                std::cout << "  UNMATCHED";
                if (r.has_nearest) std::cout << " (nearest " << bracket(r.nearest) << " at t=" << r.nearest.t << ')';
            }
            std::cout << '\n';
        }
        std::cout << (rows.size() - unmatched) << '/' << rows.size() << " rows matched\n";
    } else {
        emit(format, grid, std::cout);
    }
    return unmatched ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parameters [[n,k,d;c]]_q of entanglement-assisted quantum codes from RS and BCH codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(eaqecc_version()));

    const std::vector<std::string> formats = {"text", "csv", "json", "markdown"};
    const std::vector<std::string> sources = {"formula", "coset", "matrix"};

    SettingFlags flags;
    std::string format = "text";
    std::string out_path;
    std::string source = "coset";

    auto* cosets = app.add_subcommand("cosets", "cyclotomic cosets and their classification");
    add_setting_flags(cosets, flags);
    cosets->add_option("--format", format)->check(CLI::IsMember(formats));
    cosets->add_option("--out", out_path);

    std::optional<std::size_t> t;
    std::optional<std::uint64_t> mt;
    bool dump = false;
    auto* params = app.add_subcommand("params", "parameters for one defining set");
    add_setting_flags(params, flags);
    auto* t_opt = params->add_option("--t", t, "index of the last coset in the defining set");
    params->add_option("--mt", mt, "minimal representative of the last coset")->excludes(t_opt);
    params->add_option("--source", source)->check(CLI::IsMember(sources));
    params->add_option("--format", format)->check(CLI::IsMember(formats));
    params->add_flag("--dump-matrices", dump, "print E and its dual as exponent grids on stderr");

    auto* sweep = app.add_subcommand("sweep", "parameters for every t");
    add_setting_flags(sweep, flags);
    sweep->add_option("--source", source)->check(CLI::IsMember(sources));
    sweep->add_option("--format", format)->check(CLI::IsMember(formats));
    sweep->add_option("--out", out_path);

    bool matrix = false;
    auto* verify = app.add_subcommand("verify", "cross-check the closed form, coset and matrix values of c");
    add_setting_flags(verify, flags);
    verify->add_flag("--matrix", matrix, "include the finite-field matrix computation");
    verify->add_option("--format", format)->check(CLI::IsMember(formats));

    std::uint64_t table_q = 0;
    std::string fixtures = EAQECC_DEFAULT_FIXTURE_DIR;
    auto* tables = app.add_subcommand("tables", "match the published Hermitian BCH tables against a sweep");
    tables->add_option("--q", table_q)->required();
    tables->add_option("--fixtures", fixtures, "directory holding table_q<q>.txt");
    tables->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cosets) return cmd_cosets(flags, format, out_path);
        if (*params) return cmd_params(flags, t, mt, source, format, dump);
        if (*sweep) return cmd_sweep(flags, source, format, out_path);
        if (*verify) return cmd_verify(flags, matrix, format);
        if (*tables) return cmd_tables(table_q, fixtures, format);
    } catch (const Failure& e) {
        std::cerr << "eaqecc: " << e.what() << '\n';
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "eaqecc: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
