#include "lrc/testset.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>
#include <unordered_map>

namespace lrc {

bool divides(std::span<const Elem> g, std::span<const Elem> w) noexcept {
    bool nonzero = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] == 0) continue;
        if (w[j] != g[j]) return false;
        nonzero = true;
    }
    return nonzero;
}

bool divides(const Vec& g, const Vec& w) {
    if (!g.field->same(*w.field)) throw FieldMismatch("divides: different fields");
    if (g.entries.size() != w.entries.size()) throw LengthMismatch("divides: lengths differ");
    return divides(std::span<const Elem>(g.entries), std::span<const Elem>(w.entries));
}

void TestSet::add_element(Syzygy s) {
    const auto id = static_cast<std::uint32_t>(elements_.size());
    for (std::size_t j = 0; j < s.lead.size(); ++j)
        if (s.lead[j] != 0) {
            lead_buckets_[j * code_.field()->q() + s.lead[j]].push_back(id);
            break;
        }
    elements_.push_back(std::move(s));
}

int TestSet::find_divisor(std::span<const Elem> v) const {
    const std::uint32_t q = code_.field()->q();
    int best = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::uint32_t id : lead_buckets_[j * q + v[j]]) {
            if (best >= 0 && static_cast<int>(id) >= best) continue;
            if (divides(std::span<const Elem>(elements_[id].lead), v))
                best = static_cast<int>(id);
        }
    }
    return best;
}

namespace {

// Coset lookup. The syndrome H_D v^T identifies the coset of v modulo D;
// keys pack the syndrome into a u64 when it fits, byte strings otherwise.
class CosetIndex {
   public:
    CosetIndex(const LinearCode& D)
        : field_(D.field().get()), H_(&D.H()), dim_(D.H().rows()) {
        bits_ = std::max(1, static_cast<int>(std::bit_width(field_->q() - 1)));
        packed_ = bits_ * dim_ <= 64;
        syn_.resize(dim_);
    }

    // Returns the stored representative id for v's coset, or records
    // new_id and returns -1 when the coset is fresh.
    std::int64_t lookup_or_record(std::span<const Elem> v, std::uint32_t new_id) {
        compute_syndrome(v);
        if (packed_) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < dim_; ++i)
                key = (key << bits_) | syn_[i];
            auto [it, fresh] = map64_.try_emplace(key, new_id);
            return fresh ? -1 : static_cast<std::int64_t>(it->second);
        }
        std::string key(dim_ * 2, '\0');
        for (std::size_t i = 0; i < dim_; ++i) {
            key[2 * i] = static_cast<char>(syn_[i] & 0xff);
            key[2 * i + 1] = static_cast<char>((syn_[i] >> 8) & 0xff);
        }
        auto [it, fresh] = mapstr_.try_emplace(std::move(key), new_id);
        return fresh ? -1 : static_cast<std::int64_t>(it->second);
    }

   private:
    void compute_syndrome(std::span<const Elem> v) {
        for (std::size_t r = 0; r < dim_; ++r) {
            Elem s = 0;
            for (std::size_t c = 0; c < v.size(); ++c)
                s = field_->add(s, field_->mul((*H_)(r, c), v[c]));
            syn_[r] = s;
        }
    }

    const Field* field_;
    const Matrix* H_;
    std::size_t dim_;
    int bits_ = 1;
    bool packed_ = true;
    std::vector<Elem> syn_;
    std::unordered_map<std::uint64_t, std::uint32_t> map64_;
    std::unordered_map<std::string, std::uint32_t> mapstr_;
};

}  // namespace

TestSet compute_test_set(const LinearCode& D, const TestSetOptions& opts) {
    const int n = D.n();
    const int r = D.k();
    const auto& field = D.field();

    TestSet T;
    T.code_ = D;
    T.lead_buckets_.assign(static_cast<std::size_t>(n) * field->q(), {});
    T.weight_bound_ = opts.weight_bound > 0 ? std::min(opts.weight_bound, n)
                                            : std::min(std::max(r, n - r) + 1, n);

    CosetIndex cosets(D);
    std::vector<std::vector<Elem>> reps;
    reps.emplace_back(n, 0);  // the zero vector represents the code itself
    cosets.lookup_or_record(reps[0], 0);

    std::vector<bool> covered(n, false);
    int covered_count = 0;
    bool coverage_done = false;
    int coverage_weight = 0;

    WeightOrderedStream stream(field, n, T.weight_bound_);
    std::vector<Elem> v;
    T.exhausted_ = true;
    while (stream.next(v)) {
        if (coverage_done) {
            if (opts.stop == StopPolicy::Coverage ||
                (opts.stop == StopPolicy::WeightLevel && stream.current_weight() > coverage_weight)) {
                T.exhausted_ = false;
                break;
            }
        }
        ++T.candidates_;
        if (T.find_divisor(v) >= 0) continue;
        const auto rep_candidate_id = static_cast<std::uint32_t>(reps.size());
        const std::int64_t hit = cosets.lookup_or_record(v, rep_candidate_id);
        if (hit < 0) {
            reps.push_back(v);
            continue;
        }
        const auto& rep = reps[static_cast<std::size_t>(hit)];
        Syzygy s;
        s.lead = v;
        s.trail = rep;
        s.word.resize(n);
        for (int c = 0; c < n; ++c) s.word[c] = field->sub(v[c], rep[c]);
        for (int c = 0; c < n; ++c)
            if (s.word[c] != 0 && !covered[c]) {
                covered[c] = true;
                ++covered_count;
            }
        T.add_element(std::move(s));
        if (!coverage_done && covered_count == n) {
            coverage_done = true;
            coverage_weight = stream.current_weight();
        }
    }
    return T;
}

TestSet compute_test_set(FieldPtr field, const Matrix& M, const TestSetOptions& opts) {
    return compute_test_set(LinearCode::from_generator(std::move(field), M), opts);
}

Vec reduce(const TestSet& T, const Vec& x) {
    const auto& D = T.code();
    if (!x.field->same(*D.field())) throw FieldMismatch("reduce: different fields");
    if (static_cast<int>(x.entries.size()) != D.n()) throw LengthMismatch("reduce: wrong length");
    const Field& f = *D.field();
    const std::uint32_t q = f.q();

    std::vector<Elem> cur = x.entries;
    std::vector<Elem> y(cur.size());
    for (;;) {
        // Exact-divisor step first: cancelling a matched lead is a guaranteed
        // strict decrease and skips the lambda scan.
        const int div = T.find_divisor(cur);
        if (div >= 0) {
            const auto& w = T.elements()[div].word;
            for (std::size_t c = 0; c < cur.size(); ++c) cur[c] = f.sub(cur[c], w[c]);
            continue;
        }
        bool stepped = false;
        const int wcur = weight(std::span<const Elem>(cur));
        for (const auto& t : T.elements()) {
            for (Elem lambda = 1; lambda < q && !stepped; ++lambda) {
                for (std::size_t c = 0; c < cur.size(); ++c)
                    y[c] = f.sub(cur[c], f.mul(lambda, t.word[c]));
                const int wy = weight(std::span<const Elem>(y));
                if (wy > wcur) continue;
                if (wy < wcur) {
                    stepped = true;
                    break;
                }
                for (std::size_t c = 0; c < cur.size(); ++c) {
                    const int ey = f.dlog(y[c]), ec = f.dlog(cur[c]);
                    if (ey != ec) {
                        stepped = (ey < ec);
                        break;
                    }
                }
                if (stepped) break;
            }
            if (stepped) break;
        }
        if (!stepped) return Vec{x.field, std::move(cur)};
        cur.swap(y);
    }
}

bool is_member(const TestSet& T, const Vec& x) {
    Vec r = reduce(T, x);
    return weight(r) == 0;
}

void print_test_set(std::ostream& os, const TestSet& T) {
    auto put = [&os](const char* tag, const std::vector<Elem>& v) {
        os << tag << '=';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ' ';
            os << v[i];
        }
    };
    for (const auto& t : T.elements()) {
        put("lead", t.lead);
        os << ' ';
        put("trail", t.trail);
        os << ' ';
        put("word", t.word);
        os << '\n';
    }
}

}  // namespace lrc
