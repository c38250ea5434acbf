#ifndef LRC_GF_HPP
#define LRC_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

// Canonical integer code of a field element. An element sum c_j * beta^j of
// GF(p^m) (beta a root of the primitive polynomial) is packed as sum c_j * p^j,
// so codes range over [0, q) and 0 is the zero element.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) with table-driven arithmetic. The designated primitive element zeta
// is the root beta of the primitive polynomial (for m = 1, zeta = -c0 mod p).
// exp/log tables are built at construction and primitivity is verified, so a
// constructed Field is immutable and safe to share across threads.
//
// q is capped at 2^16: the enumeration algorithms downstream walk
// (q-1)-scaled candidate spaces, so larger fields are outside the intended
// scale anyway.
class Field {
   public:
    // dlog(0); stands for the -infinity exponent marker.
    static constexpr int kLogZero = -1;
    static constexpr std::uint32_t kMaxQ = 1u << 16;

    // primpoly holds c0..cm of a monic primitive polynomial over GF(p).
    // Throws NotPrime, DegreeMismatch, NotPrimitive.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         const std::vector<std::uint32_t>& primpoly);

    // Factors q = p^m and picks the lexicographically first primitive
    // polynomial (the built-in default, available for q <= 1024).
    static FieldPtr make_default(std::uint32_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& primpoly() const noexcept { return primpoly_; }

    // Structural equality: same (p, m, primpoly).
    bool same(const Field& other) const noexcept;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZero on 0
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t e) const;

    // Discrete log base zeta; kLogZero for the zero element.
    int dlog(Elem a) const { return log_[a]; }
    // zeta^e for e in [0, q-2].
    Elem exp(std::uint32_t e) const { return exp_[e]; }

   private:
    Field() = default;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> primpoly_;
    std::vector<Elem> exp_;      // q-1 entries, exp_[i] = zeta^i
    std::vector<int> log_;       // q entries, log_[0] = kLogZero
    std::vector<Elem> add_;      // q*q table, built only for small odd p
    std::vector<Elem> neg_;      // q negation table

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_beta(Elem a) const;  // multiply by the root of primpoly
};

bool is_prime(std::uint32_t n);

inline Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;  // base-2 packing: digitwise sum mod 2 is XOR
    if (!add_.empty()) return add_[a * q_ + b];
    return add_slow(a, b);
}
inline Elem Field::sub(Elem a, Elem b) const { return add(a, neg_[b]); }
inline Elem Field::neg(Elem a) const { return neg_[a]; }

inline Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint32_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

inline Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

inline Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

}  // namespace lrc

#endif
