#include "ccolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "ccolor/approx.hpp"
#include "ccolor/exact.hpp"
#include "ccolor/greedy.hpp"
#include "ccolor/io.hpp"

namespace ccolor {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void finish(BenchRecord& r) {
    if (r.oracle && *r.oracle > 0)
        r.ratio = static_cast<double>(r.value) / static_cast<double>(*r.oracle);
}

std::vector<BenchRecord> bench_one(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open " + file.string());
    Instance inst = parse_instance(in);
    const Hypergraph& h = inst.hg;
    std::string stem = file.stem().string();

    std::vector<BenchRecord> records;
    auto base = [&](const char* algo) {
        BenchRecord r;
        r.instance = stem;
        r.n = h.n;
        r.m = h.m();
        r.algo = algo;
        return r;
    };

    if (h.m() >= 1) {
        BenchRecord r = base("general");
        auto t0 = std::chrono::steady_clock::now();
        DecApproxResult res = approx_decrement_general(h);
        r.ms = elapsed_ms(t0);
        r.value = decrement_of_coloring(res.coloring);
        r.bound = res.bound;
        if (h.n <= kMaxPartitionVertices) r.oracle = exact_upper_chromatic(h).decrement;
        finish(r);
        records.push_back(std::move(r));
    }

    if (inst.tree) {
        BenchRecord r = base("hypertree");
        auto t0 = std::chrono::steady_clock::now();
        DecApproxResult res = approx_decrement_hypertree(h, *inst.tree);
        r.ms = elapsed_ms(t0);
        r.value = decrement_of_coloring(res.coloring);
        r.bound = res.bound;
        if (h.n <= kMaxHypertreeVertices)
            r.oracle = exact_decrement_hypertree(h, *inst.tree).decrement;
        finish(r);
        records.push_back(std::move(r));
    }

    if (inst.demands) {
        BenchRecord r = base("multitransversal");
        auto t0 = std::chrono::steady_clock::now();
        std::vector<int> s = greedy_multitransversal(h, *inst.demands);
        r.ms = elapsed_ms(t0);
        r.value = static_cast<long long>(s.size());
        r.bound = harmonic_sum(static_cast<int>(inst.demands->total));
        if (h.n <= kMaxSubsetVertices)
            r.oracle = exact_multitransversal(h, *inst.demands).size;
        finish(r);
        records.push_back(std::move(r));
    }

    if (h.m() >= 1 && h.n - 1 <= kMaxSubsetVertices && hyperstar_center(h)) {
        BenchRecord r = base("hyperstar");
        auto t0 = std::chrono::steady_clock::now();
        StripResult stripped = strip_center(h);
        SetResult indep = exact_independence(stripped.reduced);
        std::vector<int> s;
        for (int v : indep.witness) s.push_back(stripped.original_ids[v]);
        CColoring coloring = hyperstar_coloring_from_independent_set(h, s);
        r.ms = elapsed_ms(t0);
        r.value = decrement_of_coloring(coloring);
        r.bound = 1.0;
        if (h.n <= kMaxPartitionVertices) r.oracle = exact_upper_chromatic(h).decrement;
        finish(r);
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::string& corpus_dir, const BenchOptions& opt) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir))
        throw InvalidInput("not a directory: " + corpus_dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".hgx")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    // workers write into per-file slots, so the report order is stable
    std::vector<std::vector<BenchRecord>> slots(files.size());
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<std::size_t> cursor{0};
    int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(files.size())));

    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= files.size()) return;
            try {
                slots[i] = bench_one(files[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<BenchRecord> records;
    for (auto& slot : slots)
        for (auto& r : slot) records.push_back(std::move(r));
    return records;
}

void write_bench_tsv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "instance\tn\tm\talgo\tvalue\toracle\tbound\tratio\tms\n";
    for (const auto& r : records) {
        out << r.instance << '\t' << r.n << '\t' << r.m << '\t' << r.algo << '\t' << r.value
            << '\t';
        if (r.oracle) out << *r.oracle;
        else out << '-';
        out << '\t' << std::fixed << std::setprecision(4) << r.bound << '\t';
        if (r.ratio) out << std::fixed << std::setprecision(4) << *r.ratio;
        else out << '-';
        out << '\t' << std::fixed << std::setprecision(3) << r.ms << '\n';
    }
}

void write_bench_json(const std::vector<BenchRecord>& records, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row{{"instance", r.instance}, {"n", r.n},         {"m", r.m},
                           {"algo", r.algo},         {"value", r.value}, {"bound", r.bound},
                           {"ms", r.ms}};
        row["oracle"] = r.oracle ? nlohmann::json(*r.oracle) : nlohmann::json();
        row["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json();
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace ccolor
