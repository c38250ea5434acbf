#include "lrc/bench.hpp"

#include <chrono>
#include <ostream>

namespace lrc {

LinearCode random_code(const FieldPtr& f, int n, int k, std::mt19937_64& rng) {
    // gen() % q keeps the draw deterministic across platforms; the bias is
    // immaterial (2^64 >> q) and irrelevant to correctness anyway.
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Matrix G(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) G(r, c) = static_cast<Elem>(rng() % f->q());
        try {
            LinearCode C = LinearCode::from_generator(f, G);
            if (C.k() != k) continue;  // rank-deficient draw
            bool dist_one = false;
            for (int c = 0; c < n && !dist_one; ++c) {
                bool hz = true;
                for (std::size_t r = 0; r < C.H().rows() && hz; ++r) hz = (C.H()(r, c) == 0);
                dist_one = hz;
            }
            if (dist_one) continue;  // d(C) = 1
            return C;
        } catch (const DegenerateCode&) {
            continue;  // d(dual) = 1
        } catch (const ZeroMatrix&) {
            continue;
        }
    }
    throw Error("random_code: no acceptable code after 100000 attempts");
}

BenchResult bench(std::uint32_t q, int n, int k, int trials, std::uint64_t seed) {
    if (n < 1 || k < 1 || k >= n) throw Error("bench needs 1 <= k < n");
    const FieldPtr f = Field::make_default(q);
    std::mt19937_64 rng(seed);
    BenchResult out;
    out.records.reserve(trials);
    for (int trial = 0; trial < trials; ++trial) {
        LinearCode C = random_code(f, n, k, rng);
        const auto t0 = std::chrono::steady_clock::now();
        RecoveryStructure S = sharp_structure(C);
        const auto t1 = std::chrono::steady_clock::now();
        BenchRecord rec;
        rec.q = q;
        rec.n = n;
        rec.k = k;
        rec.trial = trial;
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rec.candidates = S.candidates_consumed();
        rec.loc = S.locality();
        rec.dual_distance = S.dual_distance();
        out.records.push_back(rec);
        out.mean_ms += rec.elapsed_ms;
        out.mean_candidates += static_cast<double>(rec.candidates);
    }
    if (trials > 0) {
        out.mean_ms /= trials;
        out.mean_candidates /= trials;
    }
    return out;
}

void write_csv(std::ostream& os, const BenchResult& result) {
    os << "q,n,k,trial,elapsed_ms,candidates,loc,dual_distance\n";
    char buf[64];
    for (const auto& r : result.records) {
        std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
        os << r.q << ',' << r.n << ',' << r.k << ',' << r.trial << ',' << buf << ','
           << r.candidates << ',' << r.loc << ',' << r.dual_distance << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.3f", result.mean_ms);
    os << "# mean_elapsed_ms=" << buf;
    std::snprintf(buf, sizeof buf, "%.1f", result.mean_candidates);
    os << " mean_candidates=" << buf << '\n';
}

}  // namespace lrc
