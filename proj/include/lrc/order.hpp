#ifndef LRC_ORDER_HPP
#define LRC_ORDER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

enum class Ordering { Less, Equal, Greater };

// Discrete-log exponent vector; Field::kLogZero (-1) marks zero entries and
// orders below every exponent, so plain integer lexicographic comparison
// realizes the tie-break.
std::vector<int> exponent_vector(const Field& f, std::span<const Elem> x);

// The total order: weight first, then lexicographic comparison of the
// exponent vectors.
Ordering compare(const Field& f, std::span<const Elem> x, std::span<const Elem> y);
Ordering compare(const Vec& x, const Vec& y);

// True iff x - lambda*w precedes x for some lambda != 0, i.e. w can reduce x.
// (Helper shared by the test-set machinery and its tests.)
bool reduces(const Field& f, std::span<const Elem> w, std::span<const Elem> x);

// Streams every vector of weight 1..wmax in strictly increasing order,
// one at a time. The stream is materialization-free: the full list has
// sum_{i=1}^{wmax} C(n,i)(q-1)^i entries, far too many to store at the
// scales the candidate search runs at.
class WeightOrderedStream {
   public:
    WeightOrderedStream(FieldPtr field, int n, int wmax);

    // Fills `out` (resized to n) with the next vector; false when exhausted.
    bool next(std::vector<Elem>& out);

    int current_weight() const noexcept { return w_; }

   private:
    bool start_weight(int w);
    bool advance();

    FieldPtr field_;
    int n_;
    int wmax_;
    int w_ = 0;
    bool fresh_ = true;
    std::vector<int> expo_;  // exponent string, -1 = zero entry
};

// sum_{i=1}^{wmax} C(n,i)(q-1)^i, saturating at uint64 max.
std::uint64_t stream_cardinality(int n, int wmax, std::uint32_t q);

}  // namespace lrc

#endif
