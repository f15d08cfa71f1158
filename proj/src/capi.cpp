#include "erdos/erdos.h"

#include <cstring>
#include <set>
#include <sstream>

#include "erdos/enumerate.hpp"
#include "erdos/errors.hpp"
#include "erdos/families.hpp"
#include "erdos/perm.hpp"
#include "erdos/rcds.hpp"

using namespace erdos;

struct erdos_matrix {
    RatMatrix m;
};
struct erdos_report {
    EnumerationReport r;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translates C++ exceptions from the core into error codes, remembering the
// message for erdos_last_error().
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return ERDOS_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return ERDOS_ERR_PARSE;
    } catch (const DimensionMismatch& e) {
        g_last_error = e.what();
        return ERDOS_ERR_DIMENSION;
    } catch (const DimensionTooLarge& e) {
        g_last_error = e.what();
        return ERDOS_ERR_DIMENSION;
    } catch (const SingularMatrix& e) {
        g_last_error = e.what();
        return ERDOS_ERR_SINGULAR;
    } catch (const NotBistochastic& e) {
        g_last_error = e.what();
        return ERDOS_ERR_NOT_BISTOCHASTIC;
    } catch (const NotInnerPermutation& e) {
        g_last_error = e.what();
        return ERDOS_ERR_NOT_INNER;
    } catch (const NotAdmissible& e) {
        g_last_error = e.what();
        return ERDOS_ERR_NOT_ADMISSIBLE;
    } catch (const NotRCDS& e) {
        g_last_error = e.what();
        return ERDOS_ERR_NOT_RCDS;
    } catch (const InvalidSpec& e) {
        g_last_error = e.what();
        return ERDOS_ERR_INVALID_SPEC;
    } catch (const EmptyReport& e) {
        g_last_error = e.what();
        return ERDOS_ERR_EMPTY_REPORT;
    } catch (const CorruptCheckpoint& e) {
        g_last_error = e.what();
        return ERDOS_ERR_CHECKPOINT;
    } catch (const IoError& e) {
        g_last_error = e.what();
        return ERDOS_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ERDOS_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* erdos_version(void) {
    return "1.0.0";
}

const char* erdos_error_string(int code) {
    switch (code) {
        case ERDOS_OK: return "ok";
        case ERDOS_ERR_PARSE: return "parse error";
        case ERDOS_ERR_DIMENSION: return "dimension error";
        case ERDOS_ERR_SINGULAR: return "singular matrix";
        case ERDOS_ERR_NOT_BISTOCHASTIC: return "matrix is not bistochastic";
        case ERDOS_ERR_NOT_INNER: return "permutation is not inner";
        case ERDOS_ERR_NOT_ADMISSIBLE: return "skeleton is not admissible";
        case ERDOS_ERR_NOT_RCDS: return "matrix is not RCDS";
        case ERDOS_ERR_INVALID_SPEC: return "invalid family spec";
        case ERDOS_ERR_EMPTY_REPORT: return "empty report";
        case ERDOS_ERR_CHECKPOINT: return "corrupt checkpoint";
        case ERDOS_ERR_IO: return "i/o error";
        case ERDOS_ERR_NULL_ARGUMENT: return "null argument";
        default: return "internal error";
    }
}

const char* erdos_last_error(void) {
    return g_last_error.c_str();
}

void erdos_string_free(char* s) {
    std::free(s);
}

int erdos_matrix_parse(const char* text, erdos_matrix** out) {
    if (!text || !out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = new erdos_matrix{parse_matrix(text)}; });
}

void erdos_matrix_free(erdos_matrix* m) {
    delete m;
}

int erdos_matrix_format(const erdos_matrix* m, char** out) {
    if (!m || !out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = dup_string(format_matrix(m->m)); });
}

int erdos_matrix_dimension(const erdos_matrix* m, int* out) {
    if (!m || !out) return ERDOS_ERR_NULL_ARGUMENT;
    *out = m->m.rows;
    return ERDOS_OK;
}

int erdos_matrix_is_bistochastic(const erdos_matrix* m, int* result) {
    if (!m || !result) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *result = is_bistochastic(m->m) ? 1 : 0; });
}

int erdos_matrix_is_rcds(const erdos_matrix* m, int* result) {
    if (!m || !result) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *result = is_rcds(m->m) ? 1 : 0; });
}

int erdos_matrix_is_erdos(const erdos_matrix* m, int* result) {
    if (!m || !result) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *result = is_erdos(m->m) ? 1 : 0; });
}

int erdos_matrix_maxtrace(const erdos_matrix* m, char** value, char** argmax) {
    if (!m || !value) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const MaxtraceResult r = maxtrace(m->m);
        *value = dup_string(to_string(r.value));
        if (argmax) *argmax = dup_string(r.argmax.to_string());
    });
}

int erdos_matrix_frobenius_sq(const erdos_matrix* m, char** value) {
    if (!m || !value) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *value = dup_string(to_string(frobenius_norm_sq(m->m))); });
}

int erdos_matrix_inner_trace_set(const erdos_matrix* m, char** values) {
    if (!m || !values) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        std::set<Rational> traces;
        for (const auto& sigma : inner_permutations(skel(m->m)))
            traces.insert(sigma_trace(m->m, sigma));
        std::string out;
        for (const auto& t : traces) {
            if (!out.empty()) out += ',';
            out += to_string(t);
        }
        *values = dup_string(out);
    });
}

int erdos_rational_approx(const char* token, char** out) {
    if (!token || !out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const Rational q = parse_rational(token);
        std::ostringstream os;
        os << q.get_d();
        *out = dup_string(os.str());
    });
}

int erdos_matrix_rcds_decompose(const erdos_matrix* m, char** uv_json, int* criterion,
                                int* sufficient) {
    if (!m || !uv_json) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const UVDecomposition d = uv_decompose(m->m);
        *uv_json = dup_string(d.to_json());
        if (criterion) *criterion = erdos_criterion(d) ? 1 : 0;
        if (sufficient) *sufficient = sufficient_condition(d) ? 1 : 0;
    });
}

int erdos_family_make(const char* spec, erdos_matrix** out) {
    if (!spec || !out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = new erdos_matrix{parse_family_spec(spec)}; });
}

int erdos_skeleton_canonical(const char* text, char** canonical_text, char** hex) {
    if (!text || !canonical_text) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const Skeleton s = Skeleton::from_text(text);
        const CanonicalKey key = canonical_key(s);
        const Skeleton canon{key.n, key.bits};
        *canonical_text = dup_string(canon.to_text());
        if (hex) *hex = dup_string(canon.to_hex());
    });
}

int erdos_enumerate(int n, int fix_identity, int workers, const char* checkpoint_path_or_null,
                    int allow_n6, erdos_report** out) {
    if (!out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        EnumerateOptions opts;
        opts.fix_identity = fix_identity != 0;
        opts.workers = workers;
        if (checkpoint_path_or_null) opts.checkpoint_path = checkpoint_path_or_null;
        opts.allow_n6 = allow_n6 != 0;
        EnumerationResult res = enumerate_erdos(n, opts);
        *out = new erdos_report{std::move(res.report)};
    });
}

void erdos_report_free(erdos_report* r) {
    delete r;
}

int erdos_report_summary(const erdos_report* r, char** line) {
    if (!r || !line) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *line = dup_string(r->r.summary_line()); });
}

int erdos_report_stats(const erdos_report* r, char** table) {
    if (!r || !table) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *table = dup_string(r->r.stats_table()); });
}

int erdos_report_summary_json(const erdos_report* r, char** json) {
    if (!r || !json) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *json = dup_string(r->r.summary_json()); });
}

int erdos_report_csv_row(const erdos_report* r, char** row) {
    if (!r || !row) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *row = dup_string(r->r.csv_row()); });
}

int erdos_report_record_count(const erdos_report* r, long* count) {
    if (!r || !count) return ERDOS_ERR_NULL_ARGUMENT;
    *count = static_cast<long>(r->r.records.size());
    return ERDOS_OK;
}

int erdos_report_write_jsonl(const erdos_report* r, const char* path) {
    if (!r || !path) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { write_records_jsonl(r->r, path); });
}

int erdos_report_load_jsonl(const char* path, erdos_report** out) {
    if (!path || !out) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = new erdos_report{load_records_jsonl(path)}; });
}

int erdos_report_dimension(const erdos_report* r, int* n) {
    if (!r || !n) return ERDOS_ERR_NULL_ARGUMENT;
    *n = r->r.n;
    return ERDOS_OK;
}

int erdos_report_query_distinct(const erdos_report* r, char** jsonl) {
    if (!r || !jsonl) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] {
        std::string out;
        for (const auto& rec : query_distinct_entries(r->r)) {
            out += rec.to_json();
            out += '\n';
        }
        *jsonl = dup_string(out);
    });
}

int erdos_report_query_max_denominator(const erdos_report* r, char** json) {
    if (!r || !json) return ERDOS_ERR_NULL_ARGUMENT;
    return guarded([&] { *json = dup_string(max_denominator(r->r).to_json()); });
}

}  // extern "C"
