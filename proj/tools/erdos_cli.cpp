// Command-line front end; links only the public C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "erdos/erdos.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct StringOut {
    char* value = nullptr;
    ~StringOut() { erdos_string_free(value); }
    char** out() { return &value; }
    std::string str() const { return value ? value : ""; }
};

using MatrixPtr = std::unique_ptr<erdos_matrix, decltype(&erdos_matrix_free)>;
using ReportPtr = std::unique_ptr<erdos_report, decltype(&erdos_report_free)>;

[[noreturn]] void fail(int code, const std::string& context) {
    std::cerr << "error: " << context << ": " << erdos_error_string(code);
    const char* detail = erdos_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(kExitUsage);
}

void check(int code, const std::string& context) {
    if (code != ERDOS_OK) fail(code, context);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read file: " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

MatrixPtr load_matrix(const std::string& path) {
    erdos_matrix* m = nullptr;
    check(erdos_matrix_parse(read_file(path).c_str(), &m), "parsing " + path);
    return MatrixPtr(m, erdos_matrix_free);
}

std::string approx_of(const std::string& token) {
    StringOut a;
    check(erdos_rational_approx(token.c_str(), a.out()), "approximating " + token);
    return a.str();
}

int run_verify(const std::string& path, bool approx) {
    MatrixPtr m = load_matrix(path);
    int bistochastic = 0;
    check(erdos_matrix_is_bistochastic(m.get(), &bistochastic), "verify");
    std::cout << "bistochastic=" << (bistochastic ? "true" : "false") << "\n";
    if (!bistochastic) return kExitVerificationFailure;

    int rcds = 0, is_erdos = 0;
    check(erdos_matrix_is_rcds(m.get(), &rcds), "verify");
    check(erdos_matrix_is_erdos(m.get(), &is_erdos), "verify");
    StringOut value, argmax, frob, traces;
    check(erdos_matrix_maxtrace(m.get(), value.out(), argmax.out()), "verify");
    check(erdos_matrix_frobenius_sq(m.get(), frob.out()), "verify");
    check(erdos_matrix_inner_trace_set(m.get(), traces.out()), "verify");

    std::cout << "rcds=" << (rcds ? "true" : "false") << "\n"
              << "erdos=" << (is_erdos ? "true" : "false") << "\n"
              << "maxtrace=" << value.str();
    if (approx) std::cout << " (~" << approx_of(value.str()) << ")";
    std::cout << "\nmaxtrace_argmax=" << argmax.str() << "\n"
              << "frobenius_sq=" << frob.str() << "\n"
              << "inner_traces=" << traces.str() << "\n";
    return is_erdos ? kExitOk : kExitVerificationFailure;
}

int run_family(const std::string& spec, bool verify) {
    erdos_matrix* raw = nullptr;
    check(erdos_family_make(spec.c_str(), &raw), "family spec '" + spec + "'");
    MatrixPtr m(raw, erdos_matrix_free);
    StringOut text;
    check(erdos_matrix_format(m.get(), text.out()), "family");
    std::cout << text.str();
    if (!verify) return kExitOk;

    int rcds = 0, is_erdos = 0;
    check(erdos_matrix_is_rcds(m.get(), &rcds), "family verify");
    check(erdos_matrix_is_erdos(m.get(), &is_erdos), "family verify");
    StringOut value, traces;
    check(erdos_matrix_maxtrace(m.get(), value.out(), nullptr), "family verify");
    check(erdos_matrix_inner_trace_set(m.get(), traces.out()), "family verify");
    std::cout << "rcds=" << (rcds ? "true" : "false") << " inner_trace=" << traces.str()
              << " maxtrace=" << value.str() << " erdos=" << (is_erdos ? "true" : "false") << "\n";
    return is_erdos ? kExitOk : kExitVerificationFailure;
}

int run_rcds(const std::string& path) {
    MatrixPtr m = load_matrix(path);
    StringOut uv;
    int criterion = 0, sufficient = 0;
    check(erdos_matrix_rcds_decompose(m.get(), uv.out(), &criterion, &sufficient), "rcds");
    std::cout << uv.str() << "\n"
              << "criterion=" << (criterion ? "true" : "false") << "\n"
              << "sufficient=" << (sufficient ? "true" : "false") << "\n";
    return criterion ? kExitOk : kExitVerificationFailure;
}

int run_maxtrace(const std::string& path, bool approx) {
    MatrixPtr m = load_matrix(path);
    StringOut value, argmax;
    check(erdos_matrix_maxtrace(m.get(), value.out(), argmax.out()), "maxtrace");
    std::cout << "maxtrace=" << value.str();
    if (approx) std::cout << " (~" << approx_of(value.str()) << ")";
    std::cout << "\nargmax=" << argmax.str() << "\n";
    return kExitOk;
}

int run_canonical(const std::string& path) {
    StringOut text, hex;
    check(erdos_skeleton_canonical(read_file(path).c_str(), text.out(), hex.out()), "canonical");
    std::cout << text.str() << "hex=" << hex.str() << "\n";
    return kExitOk;
}

int run_enumerate(int n, bool fix_identity, int workers, const std::string& out_path,
                  const std::string& summary_path, const std::string& checkpoint, bool allow_n6,
                  bool csv) {
    erdos_report* raw = nullptr;
    check(erdos_enumerate(n, fix_identity ? 1 : 0, workers,
                          checkpoint.empty() ? nullptr : checkpoint.c_str(), allow_n6 ? 1 : 0, &raw),
          "enumerate");
    ReportPtr report(raw, erdos_report_free);
    StringOut line;
    check(erdos_report_summary(report.get(), line.out()), "enumerate");
    std::cout << line.str() << "\n";
    if (csv) {
        StringOut row;
        check(erdos_report_csv_row(report.get(), row.out()), "enumerate");
        std::cout << "n,count,total\n" << row.str() << "\n";
    }
    if (!out_path.empty()) check(erdos_report_write_jsonl(report.get(), out_path.c_str()), out_path);
    if (!summary_path.empty()) {
        StringOut json;
        check(erdos_report_summary_json(report.get(), json.out()), "enumerate");
        std::ofstream out(summary_path, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write file: " << summary_path << "\n";
            return kExitUsage;
        }
        out << json.str() << "\n";
    }
    return kExitOk;
}

int run_stats(const std::string& records_path, int workers, bool allow_n6) {
    erdos_report* loaded_raw = nullptr;
    check(erdos_report_load_jsonl(records_path.c_str(), &loaded_raw), records_path);
    ReportPtr loaded(loaded_raw, erdos_report_free);
    int n = 0;
    check(erdos_report_dimension(loaded.get(), &n), "stats");
    long file_records = 0;
    check(erdos_report_record_count(loaded.get(), &file_records), "stats");

    erdos_report* fresh_raw = nullptr;
    check(erdos_enumerate(n, 0, workers, nullptr, allow_n6 ? 1 : 0, &fresh_raw), "stats");
    ReportPtr fresh(fresh_raw, erdos_report_free);
    StringOut table;
    check(erdos_report_stats(fresh.get(), table.out()), "stats");
    std::cout << table.str();

    long fresh_records = 0;
    check(erdos_report_record_count(fresh.get(), &fresh_records), "stats");
    if (fresh_records != file_records) {
        std::cout << "records file disagrees with enumeration: " << file_records << " vs "
                  << fresh_records << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int run_query(const std::string& records_path, bool distinct, bool max_den) {
    erdos_report* raw = nullptr;
    check(erdos_report_load_jsonl(records_path.c_str(), &raw), records_path);
    ReportPtr report(raw, erdos_report_free);
    if (distinct) {
        StringOut jsonl;
        check(erdos_report_query_distinct(report.get(), jsonl.out()), "query");
        std::cout << jsonl.str();
    }
    if (max_den) {
        StringOut json;
        check(erdos_report_query_max_denominator(report.get(), json.out()), "query");
        std::cout << json.str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration, verification, and construction of Erdos matrices"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate all classes for a dimension");
    int n = 0;
    bool fix_identity = false, allow_n6 = false, csv = false;
    int workers = 1;
    std::string out_path, summary_path, checkpoint;
    cmd_enum->add_option("--n", n, "matrix dimension (1..6)")->required();
    cmd_enum->add_flag("--fix-identity", fix_identity, "scan only skeletons containing the diagonal");
    cmd_enum->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    cmd_enum->add_option("--out", out_path, "write records as JSON lines");
    cmd_enum->add_option("--summary-json", summary_path, "write the summary report as JSON");
    cmd_enum->add_option("--checkpoint", checkpoint, "checkpoint file (resumed if present)");
    cmd_enum->add_flag("--allow-n6", allow_n6, "permit the hours-scale n=6 run");
    cmd_enum->add_flag("--csv", csv, "also print the n,count,total CSV summary");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a matrix file");
    std::string verify_path;
    bool approx = false;
    cmd_verify->add_option("--matrix", verify_path, "matrix file (rows of p/q tokens)")->required();
    cmd_verify->add_flag("--approx", approx, "also print decimal approximations");

    // family
    auto* cmd_family = app.add_subcommand("family", "construct a family matrix");
    std::string spec;
    bool family_verify = false;
    cmd_family->add_option("--spec", spec, "family spec string")->required();
    cmd_family->add_flag("--verify", family_verify, "also check RCDS/Erdos properties");

    // rcds
    auto* cmd_rcds = app.add_subcommand("rcds", "u,v decomposition and Erdos criterion");
    std::string rcds_path;
    cmd_rcds->add_option("--matrix", rcds_path, "matrix file")->required();

    // maxtrace
    auto* cmd_max = app.add_subcommand("maxtrace", "exact maximum diagonal sum");
    std::string max_path;
    bool max_approx = false;
    cmd_max->add_option("--matrix", max_path, "matrix file")->required();
    cmd_max->add_flag("--approx", max_approx, "also print a decimal approximation");

    // canonical
    auto* cmd_canon = app.add_subcommand("canonical", "canonical form of a skeleton");
    std::string skel_path;
    cmd_canon->add_option("--skeleton", skel_path, "skeleton file (n lines over {0,1})")->required();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "recompute the classification table");
    std::string stats_path;
    int stats_workers = 1;
    bool stats_allow_n6 = false;
    cmd_stats->add_option("--records", stats_path, "records JSON-lines file")->required();
    cmd_stats->add_option("--workers", stats_workers, "worker threads")->check(CLI::PositiveNumber);
    cmd_stats->add_flag("--allow-n6", stats_allow_n6, "permit the hours-scale n=6 recomputation");

    // query
    auto* cmd_query = app.add_subcommand("query", "query a records file");
    std::string query_path;
    bool q_distinct = false, q_maxden = false;
    cmd_query->add_option("--records", query_path, "records JSON-lines file")->required();
    cmd_query->add_flag("--distinct", q_distinct, "records with all nonzero entries distinct");
    cmd_query->add_flag("--max-denominator", q_maxden, "record with the largest denominator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_enum->parsed())
        return run_enumerate(n, fix_identity, workers, out_path, summary_path, checkpoint, allow_n6,
                             csv);
    if (cmd_verify->parsed()) return run_verify(verify_path, approx);
    if (cmd_family->parsed()) return run_family(spec, family_verify);
    if (cmd_rcds->parsed()) return run_rcds(rcds_path);
    if (cmd_max->parsed()) return run_maxtrace(max_path, max_approx);
    if (cmd_canon->parsed()) return run_canonical(skel_path);
    if (cmd_stats->parsed()) return run_stats(stats_path, stats_workers, stats_allow_n6);
    if (cmd_query->parsed()) {
        if (!q_distinct && !q_maxden) {
            std::cerr << "error: query needs --distinct or --max-denominator\n";
            return kExitUsage;
        }
        return run_query(query_path, q_distinct, q_maxden);
    }
    return kExitUsage;
}
