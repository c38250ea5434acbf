#include "lrc/gf.hpp"

#include <algorithm>
#include <unordered_set>

namespace lrc {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<std::uint32_t> digits(Elem code, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        d[j] = code % p;
        code /= p;
    }
    return d;
}

Elem pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Elem c = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) c = c * p + *it;
    return c;
}

}  // namespace

Elem Field::add_slow(Elem a, Elem b) const {
    auto da = digits(a, p_, m_);
    auto db = digits(b, p_, m_);
    for (std::uint32_t j = 0; j < m_; ++j) da[j] = (da[j] + db[j]) % p_;
    return pack(da, p_);
}

Elem Field::mul_beta(Elem a) const {
    auto d = digits(a, p_, m_);
    std::uint32_t carry = d[m_ - 1];
    for (std::uint32_t j = m_; j-- > 1;) d[j] = d[j - 1];
    d[0] = 0;
    if (carry != 0) {
        // subtract carry * primpoly (beta^m = -sum c_j beta^j)
        for (std::uint32_t j = 0; j < m_; ++j)
            d[j] = (d[j] + (p_ - primpoly_[j] % p_) * carry) % p_;
    }
    return pack(d, p_);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     const std::vector<std::uint32_t>& primpoly) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");
    if (primpoly.size() != m + 1)
        throw DegreeMismatch("primitive polynomial needs m+1 coefficients, got " +
                             std::to_string(primpoly.size()));
    if (primpoly[m] % p != 1) throw DegreeMismatch("primitive polynomial must be monic");

    std::uint64_t q64 = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
        q64 *= p;
        if (q64 > kMaxQ) throw Error("field size exceeds the 2^16 cap");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q64);
    f->primpoly_ = primpoly;
    for (auto& c : f->primpoly_) c %= p;
    f->primpoly_[m] = 1;

    const std::uint32_t q = f->q_;
    f->exp_.assign(q - 1, 0);
    f->log_.assign(q, kLogZero);

    // zeta = beta for m > 1; for m = 1 the root of x + c0 is -c0.
    Elem zeta = (m == 1) ? (p - f->primpoly_[0]) % p : static_cast<Elem>(p);
    Elem x = 1;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
        if (x == 0 || x >= q || f->log_[x] != kLogZero)
            throw NotPrimitive("polynomial root does not generate the multiplicative group");
        f->exp_[e] = x;
        f->log_[x] = static_cast<int>(e);
        x = (m == 1) ? static_cast<Elem>((static_cast<std::uint64_t>(x) * zeta) % p)
                     : f->mul_beta(x);
    }
    if (x != 1) throw NotPrimitive("zeta^(q-1) != 1");

    f->neg_.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
        auto d = digits(a, p, m);
        for (auto& c : d) c = (p - c) % p;
        f->neg_[a] = pack(d, p);
    }
    if (p != 2 && q <= 2048) {
        f->add_.assign(static_cast<std::size_t>(q) * q, 0);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = a; b < q; ++b) {
                Elem s = f->add_slow(a, b);
                f->add_[static_cast<std::size_t>(a) * q + b] = s;
                f->add_[static_cast<std::size_t>(b) * q + a] = s;
            }
    }
    return f;
}

FieldPtr Field::make_default(std::uint32_t q) {
    if (q < 2) throw Error("field size must be >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    std::uint32_t m = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw Error(std::to_string(q) + " is not a prime power");
        t /= p;
        ++m;
    }
    if (q > 1024)
        throw Error("no built-in primitive polynomial for q > 1024; supply one explicitly");

    // Lexicographically first (c0, c1, ..., c_{m-1}) monic primitive polynomial.
    // For GF(4) this picks x^2+x+1, for GF(8) x^3+x+1.
    std::vector<std::uint32_t> coeffs(m + 1, 0);
    coeffs[m] = 1;
    std::uint64_t total = 1;
    for (std::uint32_t j = 0; j < m; ++j) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::uint32_t j = 0; j < m; ++j) {  // c_0 varies fastest
            coeffs[j] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (coeffs[0] == 0) continue;
        try {
            return make(p, m, coeffs);
        } catch (const NotPrimitive&) {
        }
    }
    throw NotPrimitive("no primitive polynomial found");  // unreachable for prime powers
}

bool Field::same(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && primpoly_ == other.primpoly_;
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw DivisionByZero("0 raised to a negative power");
    }
    const std::int64_t ord = q_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % ord)) % ord;
    if (r < 0) r += ord;
    return exp_[static_cast<std::uint32_t>(r)];
}

}  // namespace lrc
