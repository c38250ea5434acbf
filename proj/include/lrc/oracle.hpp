#ifndef LRC_ORACLE_HPP
#define LRC_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lrc/code.hpp"

// Brute-force ground truth for recovery claims. Everything here works by
// exhaustive enumeration and deliberately shares nothing with the test-set
// machinery beyond the field and code primitives.
namespace lrc::oracle {

// All q^k codewords, zero first, in message-odometer order.
class CodewordStream {
   public:
    explicit CodewordStream(const LinearCode& C, std::uint64_t budget = 0);
    bool next(std::vector<Elem>& out);

   private:
    LinearCode code_;  // owned: stream outlives any temporary it was built from
    std::vector<std::uint32_t> digits_;
    std::vector<std::vector<Elem>> partial_;  // partial_[j] = sum_{i>=j} digit_i row_i
    bool fresh_ = true;
    bool done_ = false;
};

// Smallest recovery-set size for coordinate i (1-based): one less than the
// minimum weight of a dual codeword through i. Enumerates the q^(n-k) dual
// codewords. Throws BudgetExceeded / Unrecoverable.
int loc_exact(const LinearCode& C, int i, std::uint64_t budget = 0);

// All coordinates in one dual pass.
std::vector<int> loc_exact_all(const LinearCode& C, std::uint64_t budget = 0);

// Support-minimality of a nonzero codeword x, by comparing against every
// codeword. Throws NotACodeword when x is not a nonzero codeword of C.
bool is_minimal(const LinearCode& C, const Vec& x, std::uint64_t budget = 0);
// i-minimality: false when i is outside supp(x).
bool is_i_minimal(const LinearCode& C, const Vec& x, int i, std::uint64_t budget = 0);

struct Prop1Equivalence {
    bool span_membership = false;  // column c_i lies in the span of columns R
    bool rank_equality = false;    // dim C(R) = dim C(R + i)
    bool dual_witness = false;     // a dual word w with i in supp(w) within R + i
    bool agree() const noexcept {
        return span_membership == rank_equality && rank_equality == dual_witness;
    }
};

// Evaluates the three recovery-set characterizations independently.
Prop1Equivalence recovery_set_equiv(const LinearCode& C, std::span<const int> R, int i,
                                    std::uint64_t budget = 0);

// sum_{i=0}^{n-k+1} C(n,i) (q-1)^i: cap on the candidates any test-set run
// for an [n,k] code can consume. Saturates at uint64 max.
std::uint64_t d_bound(int n, int k, std::uint32_t q);

}  // namespace lrc::oracle

#endif
