#include "lrc/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lrc {

int weight(std::span<const Elem> v) noexcept {
    int w = 0;
    for (Elem x : v) w += (x != 0);
    return w;
}

std::vector<int> support(std::span<const Elem> v) {
    std::vector<int> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

namespace {

void check_same_field(const Vec& a, const Vec& b) {
    if (!a.field->same(*b.field)) throw FieldMismatch("vectors over different fields");
    if (a.entries.size() != b.entries.size())
        throw LengthMismatch("vector lengths differ: " + std::to_string(a.entries.size()) +
                             " vs " + std::to_string(b.entries.size()));
}

}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_field(a, b);
    Vec r{a.field, a.entries};
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = a.field->add(a.entries[i], b.entries[i]);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_field(a, b);
    Vec r{a.field, a.entries};
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = a.field->sub(a.entries[i], b.entries[i]);
    return r;
}

Vec vec_scale(Elem lambda, const Vec& a) {
    Vec r{a.field, a.entries};
    for (auto& x : r.entries) x = a.field->mul(lambda, x);
    return r;
}

std::vector<std::size_t> rref(const Field& f, Matrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        std::size_t sel = row;
        while (sel < M.rows() && M(sel, col) == 0) ++sel;
        if (sel == M.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(sel, c), M(row, c));
        const Elem piv_inv = f.inv(M(row, col));
        for (std::size_t c = 0; c < M.cols(); ++c) M(row, c) = f.mul(piv_inv, M(row, c));
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == row || M(r, col) == 0) continue;
            const Elem factor = M(r, col);
            for (std::size_t c = 0; c < M.cols(); ++c)
                M(r, c) = f.sub(M(r, c), f.mul(factor, M(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

LinearCode LinearCode::from_generator(FieldPtr field, const Matrix& G_in) {
    if (G_in.rows() == 0 || G_in.cols() == 0) throw ZeroMatrix("empty generator matrix");
    for (std::size_t r = 0; r < G_in.rows(); ++r)
        for (std::size_t c = 0; c < G_in.cols(); ++c)
            if (G_in(r, c) >= field->q())
                throw Error("matrix entry out of field range");

    Matrix R = G_in;
    auto pivots = rref(*field, R);
    const std::size_t k = pivots.size();
    if (k == 0) throw ZeroMatrix("generator matrix has rank 0");
    const std::size_t n = G_in.cols();

    Matrix G(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) G(r, c) = R(r, c);

    for (std::size_t c = 0; c < n; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < k && zero; ++r) zero = (G(r, c) == 0);
        if (zero)
            throw DegenerateCode("coordinate " + std::to_string(c + 1) +
                                 " is zero in every codeword");
    }

    // Standard-form construction: with pivots P and non-pivots N, the rows
    // h_j (one per non-pivot column c_j) satisfy h_j[c_j] = 1 and
    // h_j[P_i] = -G[i][c_j].
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix H(n - k, n);
    std::size_t hr = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        H(hr, c) = 1;
        for (std::size_t i = 0; i < k; ++i) H(hr, pivots[i]) = field->neg(G(i, c));
        ++hr;
    }

    LinearCode code;
    code.field_ = std::move(field);
    code.n_ = static_cast<int>(n);
    code.k_ = static_cast<int>(k);
    code.G_ = std::move(G);
    code.H_ = std::move(H);

    // G H^T = 0 by construction; verify anyway, it is cheap.
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t h = 0; h + k < n; ++h) {
            Elem s = 0;
            for (std::size_t c = 0; c < n; ++c)
                s = code.field_->add(s, code.field_->mul(code.G_(r, c), code.H_(h, c)));
            if (s != 0) throw Error("internal: G H^T != 0");
        }
    return code;
}

LinearCode LinearCode::dual() const {
    LinearCode d;
    d.field_ = field_;
    d.n_ = n_;
    d.k_ = n_ - k_;
    d.G_ = H_;
    d.H_ = G_;
    return d;
}

bool LinearCode::is_codeword(std::span<const Elem> x) const {
    if (static_cast<int>(x.size()) != n_)
        throw LengthMismatch("word length " + std::to_string(x.size()) + " != n = " +
                             std::to_string(n_));
    for (std::size_t r = 0; r < H_.rows(); ++r) {
        Elem s = 0;
        for (int c = 0; c < n_; ++c) s = field_->add(s, field_->mul(H_(r, c), x[c]));
        if (s != 0) return false;
    }
    return true;
}

bool LinearCode::is_codeword(const Vec& x) const {
    if (!x.field->same(*field_)) throw FieldMismatch("word over a different field");
    return is_codeword(std::span<const Elem>(x.entries));
}

int LinearCode::projection_rank(std::span<const int> S) const {
    Matrix sub(static_cast<std::size_t>(k_), S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (S[j] < 1 || S[j] > n_)
            throw IndexOutOfRange("coordinate " + std::to_string(S[j]) + " outside 1.." +
                                  std::to_string(n_));
        for (int r = 0; r < k_; ++r) sub(r, j) = G_(r, S[j] - 1);
    }
    return static_cast<int>(rref(*field_, sub).size());
}

std::uint64_t default_budget() {
    static const std::uint64_t budget = [] {
        if (const char* env = std::getenv("LRC_BUDGET")) {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return std::uint64_t{1} << 24;
    }();
    return budget;
}

int LinearCode::min_distance_exhaustive(std::uint64_t budget) const {
    if (budget == 0) budget = default_budget();
    if (k_ == 0) throw ZeroMatrix("code has no nonzero codewords");
    std::uint64_t count = 1;
    for (int i = 0; i < k_; ++i) {
        count *= field_->q();
        if (count > budget)
            throw BudgetExceeded("q^k = " + std::to_string(field_->q()) + "^" +
                                 std::to_string(k_) + " exceeds budget " +
                                 std::to_string(budget));
    }

    // DFS over message digits, one scaled-row addition per level.
    const std::uint32_t q = field_->q();
    std::vector<std::vector<Elem>> partial(k_ + 1, std::vector<Elem>(n_, 0));
    int best = n_ + 1;
    auto dfs = [&](auto&& self, int level) -> void {
        if (level == k_) {
            int w = weight(std::span<const Elem>(partial[k_]));
            if (w > 0 && w < best) best = w;
            return;
        }
        auto& dst = partial[level + 1];
        const auto& src = partial[level];
        for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
            if (lambda == 0)
                dst = src;
            else
                for (int c = 0; c < n_; ++c)
                    dst[c] = field_->add(src[c], field_->mul(static_cast<Elem>(lambda), G_(level, c)));
            self(self, level + 1);
        }
    };
    dfs(dfs, 0);
    return best;
}

Vec LinearCode::encode(std::span<const Elem> message) const {
    if (static_cast<int>(message.size()) != k_)
        throw LengthMismatch("message length != k");
    Vec out{field_, std::vector<Elem>(n_, 0)};
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < n_; ++c)
            out.entries[c] = field_->add(out.entries[c], field_->mul(message[r], G_(r, c)));
    return out;
}

}  // namespace lrc
