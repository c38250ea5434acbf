#include "lrc/order.hpp"

#include <limits>

namespace lrc {

std::vector<int> exponent_vector(const Field& f, std::span<const Elem> x) {
    std::vector<int> e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) e[i] = f.dlog(x[i]);
    return e;
}

Ordering compare(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
    if (x.size() != y.size()) throw LengthMismatch("compare: lengths differ");
    const int wx = weight(x), wy = weight(y);
    if (wx != wy) return wx < wy ? Ordering::Less : Ordering::Greater;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int ex = f.dlog(x[i]), ey = f.dlog(y[i]);
        if (ex != ey) return ex < ey ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Ordering compare(const Vec& x, const Vec& y) {
    if (!x.field->same(*y.field)) throw FieldMismatch("compare: different fields");
    return compare(*x.field, x.entries, y.entries);
}

bool reduces(const Field& f, std::span<const Elem> w, std::span<const Elem> x) {
    const int wx = weight(x);
    std::vector<Elem> y(x.begin(), x.end());
    for (Elem lambda = 1; lambda < f.q(); ++lambda) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.sub(x[i], f.mul(lambda, w[i]));
        const int wy = weight(std::span<const Elem>(y));
        if (wy < wx) return true;
        if (wy > wx) continue;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const int ey = f.dlog(y[i]), ex = f.dlog(x[i]);
            if (ey != ex) {
                if (ey < ex) return true;
                break;
            }
        }
    }
    return false;
}

WeightOrderedStream::WeightOrderedStream(FieldPtr field, int n, int wmax)
    : field_(std::move(field)), n_(n), wmax_(wmax) {
    if (n < 1) throw IndexOutOfRange("stream length must be >= 1");
    if (wmax < 0 || wmax > n)
        throw IndexOutOfRange("weight bound outside 0..n");
    expo_.assign(n_, -1);
}

bool WeightOrderedStream::start_weight(int w) {
    if (w > wmax_) return false;
    w_ = w;
    // lexicographically smallest weight-w exponent string: bottoms, then 0s
    for (int i = 0; i < n_; ++i) expo_[i] = (i < n_ - w) ? -1 : 0;
    return true;
}

// Successor within the current weight class: find the rightmost position
// whose symbol can grow while the suffix can still carry the leftover weight,
// then minimize the suffix (bottoms first, trailing exponents 0).
bool WeightOrderedStream::advance() {
    const int emax = static_cast<int>(field_->q()) - 2;
    int prefix_w = w_;
    for (int i = n_ - 1; i >= 0; --i) {
        if (expo_[i] >= 0) --prefix_w;  // weight of expo_[0..i)
        const int r = w_ - prefix_w - 1;  // suffix weight after raising slot i
        if (expo_[i] < emax && r >= 0 && r <= n_ - i - 1) {
            expo_[i] = (expo_[i] < 0) ? 0 : expo_[i] + 1;
            for (int j = i + 1; j < n_; ++j) expo_[j] = (j < n_ - r) ? -1 : 0;
            return true;
        }
    }
    return start_weight(w_ + 1);
}

bool WeightOrderedStream::next(std::vector<Elem>& out) {
    if (fresh_) {
        fresh_ = false;
        if (!start_weight(1)) return false;
    } else if (!advance()) {
        return false;
    }
    out.resize(n_);
    for (int i = 0; i < n_; ++i)
        out[i] = expo_[i] < 0 ? 0 : field_->exp(static_cast<std::uint32_t>(expo_[i]));
    return true;
}

std::uint64_t stream_cardinality(int n, int wmax, std::uint32_t q) {
    const auto cap = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;   // C(n, i)
    unsigned __int128 scale = 1;   // (q-1)^i
    for (int i = 1; i <= wmax; ++i) {
        binom = binom * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
        if (binom > cap || scale > cap / (q - 1)) return cap;  // term alone saturates
        scale *= (q - 1);
        total += binom * scale;
        if (total > cap) return cap;
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace lrc
