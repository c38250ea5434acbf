#ifndef LRC_BENCH_HPP
#define LRC_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "lrc/recovery.hpp"

namespace lrc {

struct BenchRecord {
    std::uint32_t q = 0;
    int n = 0, k = 0, trial = 0;
    double elapsed_ms = 0.0;
    std::uint64_t candidates = 0;  // vectors drawn from the candidate stream
    int loc = 0;
    int dual_distance = 0;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    double mean_ms = 0.0;
    double mean_candidates = 0.0;
};

// Seeded random full-rank k x n generator matrices; codes with d(C) <= 1 or
// d(dual) <= 1 are regenerated, and each surviving code is timed through
// sharp_structure. Deterministic in everything but the wall-clock column.
BenchResult bench(std::uint32_t q, int n, int k, int trials, std::uint64_t seed);

// Uniform random [n,k] code over f; rejects rank deficiency, zero columns of
// G and zero columns of H (the d > 1 filters). Shared by bench and the
// verification sweeps.
LinearCode random_code(const FieldPtr& f, int n, int k, std::mt19937_64& rng);

// Header, one row per record, then mean lines as '#' comments.
void write_csv(std::ostream& os, const BenchResult& result);

}  // namespace lrc

#endif
