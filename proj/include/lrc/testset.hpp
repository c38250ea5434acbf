#ifndef LRC_TESTSET_HPP
#define LRC_TESTSET_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/order.hpp"

namespace lrc {

// A codeword written as lead - trail with trail strictly below lead in the
// total order; lead is the leading term.
struct Syzygy {
    std::vector<Elem> lead;
    std::vector<Elem> trail;
    std::vector<Elem> word;  // lead - trail, a nonzero codeword
};

// True iff w agrees with g on every coordinate of supp(g) (and g != 0), the
// divisibility of the position-value monomial encoding. Scalar variants of a
// pattern are deliberately distinct: the order is not compatible with scalar
// scaling (discrete logs wrap mod q-1), so only the exact match admits the
// guaranteed order-decreasing cancellation step.
bool divides(std::span<const Elem> g, std::span<const Elem> w) noexcept;
bool divides(const Vec& g, const Vec& w);

enum class StopPolicy {
    // Stop as soon as the emitted words cover {1..n}, mid weight level.
    Coverage,
    // Stop at the end of the weight level in which coverage completed, so the
    // result depends only on the candidate set up to that weight, not on the
    // enumeration order inside the level. Default for recovery structures.
    WeightLevel,
    // Consume the whole candidate stream: the full test set, the one that
    // certifies membership by reduction.
    Exhaust,
};

struct TestSetOptions {
    StopPolicy stop = StopPolicy::Exhaust;
    int weight_bound = 0;  // 0 = max(r, n-r) + 1 for an r-dimensional code
};

class TestSet {
   public:
    const LinearCode& code() const noexcept { return code_; }
    const std::vector<Syzygy>& elements() const noexcept { return elements_; }
    std::uint64_t candidates_consumed() const noexcept { return candidates_; }
    bool exhausted() const noexcept { return exhausted_; }
    int weight_bound() const noexcept { return weight_bound_; }

    // Index of the first element whose lead divides v, or -1.
    int find_divisor(std::span<const Elem> v) const;

   private:
    friend TestSet compute_test_set(const LinearCode&, const TestSetOptions&);

    void add_element(Syzygy s);

    LinearCode code_;
    std::vector<Syzygy> elements_;
    std::uint64_t candidates_ = 0;
    bool exhausted_ = false;
    int weight_bound_ = 0;
    // leads bucketed by (first support position, value there)
    std::vector<std::vector<std::uint32_t>> lead_buckets_;
};

// Builds the test set of the code D by the candidate-matching construction:
// candidates stream in increasing order; a candidate whose lead is divisible
// by an existing element's lead is skipped; otherwise its coset is looked up
// (two vectors match exactly when their difference lies in D), emitting the
// syzygy candidate - representative on a hit and recording the candidate as
// its coset's representative (the coset normal form) on a miss. First
// recording wins, so representatives are the order-minima of their cosets.
TestSet compute_test_set(const LinearCode& D, const TestSetOptions& opts = {});
// Same, for a code given by a generating matrix (rows reduced to a basis).
TestSet compute_test_set(FieldPtr field, const Matrix& M, const TestSetOptions& opts = {});

// Normal form of x under the deterministic reduction scan: subtract a
// multiple of an element's word whenever that strictly decreases the order,
// until nothing applies. Every step is a strict decrease, so this terminates.
Vec reduce(const TestSet& T, const Vec& x);

// Membership criterion: x lies in the code iff it reduces to zero. Requires a
// test set built with StopPolicy::Exhaust; the truncated sets only certify
// recovery structures.
bool is_member(const TestSet& T, const Vec& x);

// One line per element: lead=<ints> trail=<ints> word=<ints>.
void print_test_set(std::ostream& os, const TestSet& T);

}  // namespace lrc

#endif
