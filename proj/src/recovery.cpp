#include "lrc/recovery.hpp"

#include <algorithm>
#include <string>

#include "lrc/oracle.hpp"

namespace lrc {

namespace {

void check_recoverable(const LinearCode& C) {
    // d(C) = 1 iff some unit vector is a codeword iff H has a zero column;
    // a zero column of G is a degenerate coordinate. Both checks are free
    // compared to a distance computation.
    for (int c = 0; c < C.n(); ++c) {
        bool gz = true, hz = true;
        for (std::size_t r = 0; r < C.G().rows() && gz; ++r) gz = (C.G()(r, c) == 0);
        for (std::size_t r = 0; r < C.H().rows() && hz; ++r) hz = (C.H()(r, c) == 0);
        if (gz)
            throw DegenerateCode("coordinate " + std::to_string(c + 1) +
                                 " is identically zero");
        if (hz)
            throw DistanceOne("coordinate " + std::to_string(c + 1) +
                              " admits no recovery set (minimum distance 1)");
    }
}

}  // namespace

RecoveryStructure structure_from_test_set(const LinearCode& C, const TestSet& T) {
    const int n = C.n();
    const Field& f = *C.field();

    // Keep the lightest word through each coordinate; among equals prefer the
    // lexicographically smallest support, then the order-smallest word. The
    // support tie-break does not depend on which scalar multiple of a word
    // the engine happened to emit.
    std::vector<const std::vector<Elem>*> best(n, nullptr);
    auto better = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
        const int wa = weight(std::span<const Elem>(a));
        const int wb = weight(std::span<const Elem>(b));
        if (wa != wb) return wa < wb;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const bool za = (a[j] == 0), zb = (b[j] == 0);
            if (za != zb) return zb;  // support present earlier wins
        }
        return compare(f, a, b) == Ordering::Less;
    };
    for (const auto& t : T.elements())
        for (std::size_t j = 0; j < t.word.size(); ++j)
            if (t.word[j] != 0 && (!best[j] || better(t.word, *best[j])))
                best[j] = &t.word;

    RecoveryStructure S;
    S.code_ = C;
    S.candidates_ = T.candidates_consumed();
    S.words_.reserve(n);
    S.sets_.reserve(n);
    const LinearCode dual = C.dual();
    for (int i = 0; i < n; ++i) {
        if (!best[i])
            throw Unrecoverable("no dual codeword through coordinate " +
                                std::to_string(i + 1) + " found by the test set");
        Vec w{C.field(), *best[i]};
        if (!dual.is_codeword(w))
            throw Error("internal: selected word is not a dual codeword");
        std::vector<int> R = support(w);
        R.erase(std::find(R.begin(), R.end(), i + 1));
        // Prop. 1(ii): adjoining i must not raise the projection rank.
        std::vector<int> Ri = R;
        Ri.push_back(i + 1);
        if (C.projection_rank(R) != C.projection_rank(Ri))
            throw Error("internal: recovery-set rank invariant failed");
        S.words_.push_back(std::move(w));
        S.sets_.push_back(std::move(R));
    }
    S.locality_ = 0;
    S.dual_distance_ = n + 1;
    for (int i = 0; i < n; ++i) {
        S.locality_ = std::max(S.locality_, static_cast<int>(S.sets_[i].size()));
        S.dual_distance_ = std::min(S.dual_distance_, weight(S.words_[i]));
    }
    return S;
}

RecoveryStructure sharp_structure(const LinearCode& C, StopPolicy stop) {
    check_recoverable(C);
    TestSetOptions opts;
    opts.stop = stop;
    TestSet T = compute_test_set(C.dual(), opts);
    return structure_from_test_set(C, T);
}

std::vector<int> MaskedVec::erased_positions() const {
    std::vector<int> out;
    for (std::size_t j = 0; j < erased.size(); ++j)
        if (erased[j]) out.push_back(static_cast<int>(j) + 1);
    return out;
}

namespace {

// Shared fill step; no completed-word validation here.
Elem fill_value(const MaskedVec& x, int i, const RecoveryStructure& S) {
    const Field& f = *x.field;
    const Vec& w = S.word(i);
    Elem acc = 0;
    for (int j : S.set(i)) {
        if (x.erased[j - 1])
            throw RecoverySetErased("position " + std::to_string(j) +
                                    " of the recovery set for " + std::to_string(i) +
                                    " is also erased");
        acc = f.add(acc, f.mul(w[j - 1], x.entries[j - 1]));
    }
    // x_i = -w_i^{-1} (w . x) restricted to the support
    return f.neg(f.mul(f.inv(w[i - 1]), acc));
}

void validate(const LinearCode& C, const std::vector<Elem>& word) {
    if (!C.is_codeword(std::span<const Elem>(word)))
        throw NotACodeword("completed word fails the parity check; input was corrupt");
}

}  // namespace

Elem recover(const MaskedVec& x, const RecoveryStructure& S) {
    if (!x.field->same(*S.code().field())) throw FieldMismatch("recover: different fields");
    if (static_cast<int>(x.entries.size()) != S.n()) throw LengthMismatch("recover: wrong length");
    const auto erased = x.erased_positions();
    if (erased.size() != 1)
        throw Error("recover expects exactly one erasure, got " +
                    std::to_string(erased.size()));
    const int i = erased[0];
    const Elem value = fill_value(x, i, S);
    std::vector<Elem> full = x.entries;
    full[i - 1] = value;
    validate(S.code(), full);
    return value;
}

Vec recover_multi(const MaskedVec& x, const RecoveryStructure& S) {
    if (!x.field->same(*S.code().field())) throw FieldMismatch("recover: different fields");
    if (static_cast<int>(x.entries.size()) != S.n()) throw LengthMismatch("recover: wrong length");
    MaskedVec cur = x;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i <= S.n(); ++i) {
            if (!cur.erased[i - 1]) continue;
            bool ready = true;
            for (int j : S.set(i))
                if (cur.erased[j - 1]) {
                    ready = false;
                    break;
                }
            if (!ready) continue;
            cur.entries[i - 1] = fill_value(cur, i, S);
            cur.erased[i - 1] = 0;
            progress = true;
        }
    }
    auto residual = cur.erased_positions();
    if (!residual.empty()) {
        std::string msg = "unrecoverable positions remain:";
        for (int p : residual) msg += ' ' + std::to_string(p);
        throw Stalled(msg, residual);
    }
    validate(S.code(), cur.entries);
    return Vec{cur.field, std::move(cur.entries)};
}

bool singleton_bound_check(int n, int k, int d, int r) {
    return k + d + (k + r - 1) / r <= n + 2;
}

int locality_lower_bound(int n, int k, int d, int dual_distance) {
    int from_singleton = k;
    for (int r = 1; r <= k; ++r)
        if (singleton_bound_check(n, k, d, r)) {
            from_singleton = r;
            break;
        }
    return std::max(from_singleton, dual_distance - 1);
}

Classification classify(const RecoveryStructure& S, int d, std::uint64_t budget) {
    Classification c;
    const int n = S.code().n(), k = S.code().k();
    const int r = S.locality();
    c.optimal = (k + d + (k + r - 1) / r == n + 2);
    c.sharp = true;  // by construction; re-checked below when affordable
    if (budget == 0) budget = default_budget();
    std::uint64_t dual_size = 1;
    bool affordable = true;
    for (int i = 0; i < n - k; ++i) {
        dual_size *= S.code().field()->q();
        if (dual_size > budget) {
            affordable = false;
            break;
        }
    }
    if (affordable) {
        const auto exact = oracle::loc_exact_all(S.code(), budget);
        for (int i = 1; i <= n; ++i)
            if (S.loc(i) != exact[i - 1]) c.sharp = false;
        c.sharp_verified = true;
    }
    return c;
}

}  // namespace lrc
