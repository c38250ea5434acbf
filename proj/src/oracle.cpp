#include "lrc/oracle.hpp"

#include <algorithm>
#include <string>

#include "lrc/order.hpp"

namespace lrc::oracle {

namespace {

void check_budget(const LinearCode& C, int dim, std::uint64_t& budget) {
    if (budget == 0) budget = default_budget();
    std::uint64_t count = 1;
    for (int i = 0; i < dim; ++i) {
        count *= C.field()->q();
        if (count > budget)
            throw BudgetExceeded("q^" + std::to_string(dim) + " exceeds budget " +
                                 std::to_string(budget));
    }
}

}  // namespace

CodewordStream::CodewordStream(const LinearCode& C, std::uint64_t budget) : code_(C) {
    check_budget(C, C.k(), budget);
    digits_.assign(C.k(), 0);
    partial_.assign(C.k() + 1, std::vector<Elem>(C.n(), 0));
}

bool CodewordStream::next(std::vector<Elem>& out) {
    const int k = code_.k();
    const Field& f = *code_.field();
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        out = partial_[0];  // zero codeword
        return true;
    }
    // increment the base-q odometer; digit j scales row j
    int j = 0;
    while (j < k && digits_[j] + 1 == f.q()) {
        digits_[j] = 0;
        ++j;
    }
    if (j == k) {
        done_ = true;
        return false;
    }
    ++digits_[j];
    // partial_[t] = digits_[t] * row_t + partial_[t+1], rebuilt for t <= j
    for (int t = j; t >= 0; --t) {
        const auto& up = partial_[t + 1];
        auto& dst = partial_[t];
        const Elem lambda = static_cast<Elem>(digits_[t]);
        for (int c = 0; c < code_.n(); ++c)
            dst[c] = f.add(up[c], f.mul(lambda, code_.G()(t, c)));
    }
    out = partial_[0];
    return true;
}

std::vector<int> loc_exact_all(const LinearCode& C, std::uint64_t budget) {
    const LinearCode dual = C.dual();
    if (dual.k() == 0)
        throw Unrecoverable("dual code is trivial; no coordinate has a recovery set");
    CodewordStream stream(dual, budget);
    const int n = C.n();
    std::vector<int> best(n, n + 2);
    std::vector<Elem> w;
    while (stream.next(w)) {
        const int wt = weight(std::span<const Elem>(w));
        if (wt == 0) continue;
        for (int c = 0; c < n; ++c)
            if (w[c] != 0 && wt < best[c]) best[c] = wt;
    }
    for (int c = 0; c < n; ++c) {
        if (best[c] > n + 1)
            throw Unrecoverable("no dual codeword through coordinate " +
                                std::to_string(c + 1));
        best[c] -= 1;
    }
    return best;
}

int loc_exact(const LinearCode& C, int i, std::uint64_t budget) {
    if (i < 1 || i > C.n()) throw IndexOutOfRange("coordinate outside 1..n");
    return loc_exact_all(C, budget)[i - 1];
}

namespace {

// supp(a) subset of supp(b), strictness via the weights.
bool support_inside(std::span<const Elem> a, std::span<const Elem> b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != 0 && b[j] == 0) return false;
    return true;
}

}  // namespace

bool is_minimal(const LinearCode& C, const Vec& x, std::uint64_t budget) {
    if (!C.is_codeword(x) || weight(x) == 0)
        throw NotACodeword("minimality is defined for nonzero codewords");
    CodewordStream stream(C, budget);
    std::vector<Elem> y;
    const int wx = weight(x);
    while (stream.next(y)) {
        const int wy = weight(std::span<const Elem>(y));
        if (wy == 0 || wy >= wx) continue;
        if (support_inside(y, x.entries)) return false;
    }
    return true;
}

bool is_i_minimal(const LinearCode& C, const Vec& x, int i, std::uint64_t budget) {
    if (!C.is_codeword(x) || weight(x) == 0)
        throw NotACodeword("i-minimality is defined for nonzero codewords");
    if (i < 1 || i > C.n()) throw IndexOutOfRange("coordinate outside 1..n");
    if (x.entries[i - 1] == 0) return false;
    CodewordStream stream(C, budget);
    std::vector<Elem> y;
    const int wx = weight(x);
    while (stream.next(y)) {
        if (y[i - 1] == 0) continue;
        if (weight(std::span<const Elem>(y)) >= wx) continue;
        if (support_inside(y, x.entries)) return false;
    }
    return true;
}

Prop1Equivalence recovery_set_equiv(const LinearCode& C, std::span<const int> R, int i,
                                    std::uint64_t budget) {
    if (i < 1 || i > C.n()) throw IndexOutOfRange("coordinate outside 1..n");
    for (int j : R) {
        if (j < 1 || j > C.n()) throw IndexOutOfRange("coordinate outside 1..n");
        if (j == i) throw IndexOutOfRange("recovery set must not contain i");
    }
    const Field& f = *C.field();
    const int k = C.k();
    Prop1Equivalence out;

    // (i) solve sum_j lambda_j c_j = c_i by elimination on [cols_R | c_i]:
    // consistent iff no pivot lands in the last column.
    {
        Matrix A(k, R.size() + 1);
        for (std::size_t j = 0; j < R.size(); ++j)
            for (int r = 0; r < k; ++r) A(r, j) = C.G()(r, R[j] - 1);
        for (int r = 0; r < k; ++r) A(r, R.size()) = C.G()(r, i - 1);
        auto pivots = rref(f, A);
        out.span_membership =
            pivots.empty() || pivots.back() != R.size();
    }

    // (ii) projection ranks.
    {
        std::vector<int> Ri(R.begin(), R.end());
        Ri.push_back(i);
        out.rank_equality = C.projection_rank(R) == C.projection_rank(Ri);
    }

    // (iii) exhaustive dual witness with i in supp(w) within R + i.
    {
        std::vector<bool> allowed(C.n(), false);
        for (int j : R) allowed[j - 1] = true;
        allowed[i - 1] = true;
        const LinearCode dual = C.dual();
        if (dual.k() > 0) {
            CodewordStream stream(dual, budget);
            std::vector<Elem> w;
            while (stream.next(w)) {
                if (w[i - 1] == 0) continue;
                bool inside = true;
                for (int c = 0; c < C.n() && inside; ++c)
                    if (w[c] != 0 && !allowed[c]) inside = false;
                if (inside) {
                    out.dual_witness = true;
                    break;
                }
            }
        }
    }
    return out;
}

std::uint64_t d_bound(int n, int k, std::uint32_t q) {
    const std::uint64_t tail = stream_cardinality(n, std::min(n - k + 1, n), q);
    const std::uint64_t cap = ~std::uint64_t{0};
    return tail == cap ? cap : tail + 1;
}

}  // namespace lrc::oracle
