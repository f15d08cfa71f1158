#include "erdos/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Stage 1: collect the canonical representative of every class of skeletons
// that survives the cheap pre-filters (no empty row or column).
//
// Default mode walks only masks whose rows are sorted by their bit-string
// value and keeps those equal to their own canonical form; every orbit is
// seen exactly once, at its representative. Chunks are indexed by the first
// (smallest) row, which in a canonical form is always 0...01...1.
//
// fix-identity mode walks the 2^(n^2-n) masks containing the full diagonal
// and canonicalizes each, deduplicating through a key set. Both modes yield
// the same class set: an admissible skeleton always contains an inner
// permutation that row/column shifts can move onto the diagonal.
// ---------------------------------------------------------------------------

struct ScanShape {
    int n;
    long total_chunks;
};

ScanShape scan_shape(int n, bool fix_identity) {
    if (fix_identity) {
        const int free_bits = n * n - n;
        const long chunks = free_bits <= 6 ? 1 : 64;
        return {n, chunks};
    }
    return {n, n};  // one chunk per admissible first-row popcount
}

void scan_chunk_sorted_rows(int n, long chunk, std::vector<uint64_t>& out) {
    const int k0 = static_cast<int>(chunk) + 1;  // first row popcount
    const uint16_t first_row = static_cast<uint16_t>((1u << k0) - 1);
    const uint64_t full = (uint64_t(1) << n) - 1;

    // rows[] hold col0-MSB row values; convert to the storage layout at the end
    std::vector<uint16_t> rows(n);
    rows[0] = first_row;

    auto emit = [&] {
        Skeleton s{n, 0};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> (n - 1 - j)) & 1) s.set(i, j);
        if (is_self_canonical(s)) out.push_back(static_cast<uint64_t>(s.bits));
    };

    auto descend = [&](auto&& self, int depth, uint64_t col_cover) -> void {
        if (depth == n) {
            if (col_cover == full) emit();
            return;
        }
        // rows sorted by value; a row with fewer ones than the first row
        // would force a smaller canonical first row
        for (uint16_t r = rows[depth - 1]; r <= full; ++r) {
            if (std::popcount(static_cast<unsigned>(r)) < k0) continue;
            rows[depth] = r;
            self(self, depth + 1, col_cover | r);
        }
    };
    if (n == 1) {
        emit();
        return;
    }
    descend(descend, 1, first_row);
}

void scan_chunk_fix_identity(int n, long chunk, long total_chunks, std::vector<uint64_t>& out) {
    const int free_bits = n * n - n;
    const uint64_t space = uint64_t(1) << free_bits;
    const uint64_t begin = space * static_cast<uint64_t>(chunk) / total_chunks;
    const uint64_t end = space * static_cast<uint64_t>(chunk + 1) / total_chunks;

    std::vector<int> off_diag;  // bit positions of off-diagonal cells
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) off_diag.push_back(i * n + j);

    uint64_t diagonal = 0;
    for (int i = 0; i < n; ++i) diagonal |= uint64_t(1) << (i * n + i);

    for (uint64_t m = begin; m < end; ++m) {
        uint64_t bits = diagonal;
        for (int b = 0; b < free_bits; ++b)
            if ((m >> b) & 1) bits |= uint64_t(1) << off_diag[b];
        out.push_back(canonical_key(Skeleton{n, bits}).bits);
    }
}

// ---------------------------------------------------------------------------
// Checkpoint file: versioned JSON with the scan cursor and the key set
// gathered so far, guarded by a digest.
// ---------------------------------------------------------------------------

struct ScanState {
    long next_chunk = 0;
    std::set<uint64_t> keys;
};

std::string checkpoint_payload(int n, bool fix_identity, long total_chunks, const ScanState& st) {
    std::ostringstream os;
    os << n << '|' << fix_identity << '|' << total_chunks << '|' << st.next_chunk;
    for (uint64_t k : st.keys) os << '|' << std::hex << k << std::dec;
    return os.str();
}

void save_checkpoint(const std::string& path, int n, bool fix_identity, long total_chunks,
                     const ScanState& st) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = n;
    j["fix_identity"] = fix_identity;
    j["total_chunks"] = total_chunks;
    j["next_chunk"] = st.next_chunk;
    nlohmann::ordered_json keys = nlohmann::ordered_json::array();
    for (uint64_t k : st.keys) {
        char buf[24];
        snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(k));
        keys.push_back(std::string(buf));
    }
    j["keys"] = keys;
    char buf[24];
    snprintf(buf, sizeof buf, "%llx",
             static_cast<unsigned long long>(fnv1a(checkpoint_payload(n, fix_identity, total_chunks, st))));
    j["digest"] = std::string(buf);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint: " + path);
    out << j.dump() << '\n';
}

bool load_checkpoint(const std::string& path, int n, bool fix_identity, long total_chunks,
                     ScanState& st) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        throw CorruptCheckpoint("unreadable checkpoint: " + path);
    }
    try {
        if (j.at("version").get<int>() != 1) throw CorruptCheckpoint("unknown checkpoint version");
        if (j.at("n").get<int>() != n || j.at("fix_identity").get<bool>() != fix_identity ||
            j.at("total_chunks").get<long>() != total_chunks)
            throw CorruptCheckpoint("checkpoint parameters do not match this run");
        ScanState loaded;
        loaded.next_chunk = j.at("next_chunk").get<long>();
        for (const auto& k : j.at("keys"))
            loaded.keys.insert(std::stoull(k.get<std::string>(), nullptr, 16));
        char buf[24];
        snprintf(buf, sizeof buf, "%llx",
                 static_cast<unsigned long long>(
                     fnv1a(checkpoint_payload(n, fix_identity, total_chunks, loaded))));
        if (j.at("digest").get<std::string>() != buf)
            throw CorruptCheckpoint("checkpoint digest mismatch");
        st = std::move(loaded);
        return true;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptCheckpoint(std::string("malformed checkpoint: ") + e.what());
    }
}

}  // namespace

EnumerationResult enumerate_erdos(int n, const EnumerateOptions& options) {
    if (n < 1 || n > 6) throw DimensionTooLarge("enumerate: n must be in 1..6");
    if (n == 6 && !options.allow_n6)
        throw DimensionTooLarge("enumerate: n=6 is an extended run; pass allow_n6");
    const int workers = std::max(1, options.workers);
    const ScanShape shape = scan_shape(n, options.fix_identity);

    ScanState st;
    if (!options.checkpoint_path.empty())
        load_checkpoint(options.checkpoint_path, n, options.fix_identity, shape.total_chunks, st);

    long budget = options.stop_after_chunks;
    while (st.next_chunk < shape.total_chunks) {
        if (budget == 0) {
            if (!options.checkpoint_path.empty())
                save_checkpoint(options.checkpoint_path, n, options.fix_identity, shape.total_chunks, st);
            return EnumerationResult{false, {}};
        }
        long batch = std::min<long>(workers, shape.total_chunks - st.next_chunk);
        if (budget > 0) batch = std::min(batch, budget);

        std::vector<std::vector<uint64_t>> found(batch);
        std::vector<std::thread> threads;
        for (long t = 0; t < batch; ++t) {
            threads.emplace_back([&, t] {
                if (options.fix_identity)
                    scan_chunk_fix_identity(n, st.next_chunk + t, shape.total_chunks, found[t]);
                else
                    scan_chunk_sorted_rows(n, st.next_chunk + t, found[t]);
            });
        }
        for (auto& th : threads) th.join();
        for (const auto& chunk_keys : found) st.keys.insert(chunk_keys.begin(), chunk_keys.end());
        st.next_chunk += batch;
        if (budget > 0) budget -= batch;
        if (!options.checkpoint_path.empty())
            save_checkpoint(options.checkpoint_path, n, options.fix_identity, shape.total_chunks, st);
    }

    // In fix-identity mode the scan emitted canonical keys of arbitrary
    // masks; keep only admissible classes. In default mode candidates are
    // already canonical representatives, also filtered here.
    std::vector<Skeleton> admissible;
    {
        std::vector<uint64_t> keys(st.keys.begin(), st.keys.end());
        std::vector<uint8_t> keep(keys.size(), 0);
        std::atomic<size_t> cursor{0};
        auto work = [&] {
            for (size_t i; (i = cursor.fetch_add(1)) < keys.size();)
                keep[i] = is_admissible(Skeleton{n, keys[i]}) ? 1 : 0;
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(work);
        for (auto& th : threads) th.join();
        for (size_t i = 0; i < keys.size(); ++i)
            if (keep[i]) admissible.push_back(Skeleton{n, keys[i]});
    }

    // Stage 2: candidate construction and classification, data-parallel over
    // classes; reduction in key order keeps the report deterministic.
    std::vector<CandidateOutcome> outcomes(admissible.size());
    {
        std::atomic<size_t> cursor{0};
        auto work = [&] {
            for (size_t i; (i = cursor.fetch_add(1)) < admissible.size();)
                outcomes[i] = candidate_for_skeleton(admissible[i]);
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(work);
        for (auto& th : threads) th.join();
    }

    EnumerationResult result;
    result.complete = true;
    EnumerationReport& rep = result.report;
    rep.n = n;
    rep.admissible_classes = static_cast<long>(admissible.size());
    for (auto& oc : outcomes) {
        if (oc.simplicial) {
            ++rep.simplicial_admissible;
            if (oc.verdict != Verdict::Erdos) ++rep.simplicial_failures;
        }
        switch (oc.verdict) {
            case Verdict::Erdos:
                ++rep.erdos_count;
                rep.records.push_back(std::move(*oc.record));
                break;
            case Verdict::SkeletonShrink: ++rep.shrink_count; break;
            case Verdict::NegativeEntry: ++rep.negative_count; break;
            case Verdict::OuterTraceExcess: ++rep.outer_excess_count; break;
            case Verdict::NegativeAndExcess: ++rep.both_count; break;
        }
    }
    return result;
}

std::vector<ErdosRecord> query_distinct_entries(const EnumerationReport& report) {
    std::vector<ErdosRecord> out;
    for (const auto& rec : report.records) {
        const int nonzero = rec.skeleton.n * rec.skeleton.n - rec.zeros;
        if (rec.distinct_nonzero == nonzero) out.push_back(rec);
    }
    std::stable_sort(out.begin(), out.end(), [](const ErdosRecord& a, const ErdosRecord& b) {
        if (a.zeros != b.zeros) return a.zeros < b.zeros;
        return a.denominator > b.denominator;
    });
    return out;
}

const ErdosRecord& max_denominator(const EnumerationReport& report) {
    if (report.records.empty()) throw EmptyReport("max_denominator: no records");
    const ErdosRecord* best = &report.records.front();
    for (const auto& rec : report.records) {
        if (rec.denominator > best->denominator ||
            (rec.denominator == best->denominator && rec.skeleton.bits < best->skeleton.bits))
            best = &rec;
    }
    return *best;
}

std::string EnumerationReport::summary_line() const {
    std::ostringstream os;
    os << "n=" << n << " erdos=" << erdos_count << " admissible=" << admissible_classes;
    return os.str();
}

std::string EnumerationReport::stats_table() const {
    std::ostringstream os;
    os << "n                     " << n << '\n'
       << "admissible classes    " << admissible_classes << '\n'
       << "erdos                 " << erdos_count << '\n'
       << "skeleton shrink       " << shrink_count << '\n'
       << "negative entry only   " << negative_count << '\n'
       << "outer excess only     " << outer_excess_count << '\n'
       << "negative and excess   " << both_count << '\n'
       << "negative total        " << negative_total() << '\n'
       << "outer excess total    " << excess_total() << '\n'
       << "simplicial admissible " << simplicial_admissible << '/' << admissible_classes << '\n'
       << "simplicial failures   " << simplicial_failures << '/' << failure_classes() << '\n';
    return os.str();
}

std::string EnumerationReport::summary_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["admissible_classes"] = admissible_classes;
    j["erdos"] = erdos_count;
    j["skeleton_shrink"] = shrink_count;
    j["negative_only"] = negative_count;
    j["outer_excess_only"] = outer_excess_count;
    j["negative_and_excess"] = both_count;
    j["negative_total"] = negative_total();
    j["outer_excess_total"] = excess_total();
    j["simplicial_admissible"] = simplicial_admissible;
    j["simplicial_failures"] = simplicial_failures;
    return j.dump();
}

std::string EnumerationReport::csv_row() const {
    std::ostringstream os;
    os << n << ',' << erdos_count << ',' << admissible_classes;
    return os.str();
}

void write_records_jsonl(const EnumerationReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write records file: " + path);
    for (const auto& rec : report.records) out << rec.to_json() << '\n';
}

EnumerationReport load_records_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read records file: " + path);
    EnumerationReport rep;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ErdosRecord rec = ErdosRecord::from_json(line);
        if (!verify_record(rec)) throw ParseError("record failed verification: " + line.substr(0, 60));
        if (rep.records.empty()) rep.n = rec.skeleton.n;
        if (rec.skeleton.n != rep.n) throw ParseError("mixed dimensions in records file");
        rep.records.push_back(std::move(rec));
    }
    rep.erdos_count = static_cast<long>(rep.records.size());
    return rep;
}

}  // namespace erdos
