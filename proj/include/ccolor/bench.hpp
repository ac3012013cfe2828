#ifndef CCOLOR_BENCH_HPP
#define CCOLOR_BENCH_HPP

#include <iosfwd>
#include <string>

#include "ccolor/core.hpp"

// Benchmark harness: runs every applicable pipeline on each .hgx instance of
// a corpus directory and tabulates achieved value, oracle value (when the
// instance is within oracle limits), proven bound and empirical ratio.
// Output is deterministic apart from the time column.

namespace ccolor {

struct BenchRecord {
    std::string instance;  // file stem
    int n = 0;
    int m = 0;
    std::string algo;
    long long value = 0;
    std::optional<long long> oracle;
    double bound = 0.0;
    std::optional<double> ratio;  // value / oracle
    double ms = 0.0;
};

struct BenchOptions {
    bool json = false;
    int threads = 1;
};

std::vector<BenchRecord> run_bench(const std::string& corpus_dir, const BenchOptions& opt);

void write_bench_tsv(const std::vector<BenchRecord>& records, std::ostream& out);
void write_bench_json(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace ccolor

#endif
