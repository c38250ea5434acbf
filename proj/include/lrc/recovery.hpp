#ifndef LRC_RECOVERY_HPP
#define LRC_RECOVERY_HPP

#include <cstdint>
#include <vector>

#include "lrc/testset.hpp"

namespace lrc {

// Per-coordinate recovery data for a code C: w_i is a minimal dual codeword
// through coordinate i and R_i = supp(w_i) \ {i} the recovery set, so an
// erasure at i is filled from the positions in R_i alone. Sets are as small
// as the code permits for every coordinate.
class RecoveryStructure {
   public:
    const LinearCode& code() const noexcept { return code_; }
    int n() const noexcept { return code_.n(); }
    // w_i, a dual codeword with i in its support (i is 1-based).
    const Vec& word(int i) const { return words_.at(i - 1); }
    // R_i, sorted ascending, 1-based.
    const std::vector<int>& set(int i) const { return sets_.at(i - 1); }
    int loc(int i) const { return static_cast<int>(sets_.at(i - 1).size()); }

    int locality() const noexcept { return locality_; }
    int dual_distance() const noexcept { return dual_distance_; }
    std::uint64_t candidates_consumed() const noexcept { return candidates_; }

   private:
    friend RecoveryStructure sharp_structure(const LinearCode&, StopPolicy);
    friend RecoveryStructure structure_from_test_set(const LinearCode&, const TestSet&);

    LinearCode code_;
    std::vector<Vec> words_;
    std::vector<std::vector<int>> sets_;
    int locality_ = 0;
    int dual_distance_ = 0;
    std::uint64_t candidates_ = 0;
};

// Computes a sharp recovery structure for C: builds the test set of the dual
// code from H-as-generators and keeps, for each coordinate, the lightest word
// through it (ties: lexicographically smallest support, then smallest under
// the total order). Verifies the dual-codeword and projection-rank invariants
// before returning. Throws DistanceOne when d(C) = 1 (a weight-1 codeword
// leaves its coordinate unrecoverable) and DegenerateCode on a zero column.
RecoveryStructure sharp_structure(const LinearCode& C,
                                  StopPolicy stop = StopPolicy::WeightLevel);

// Same selection applied to an already-built test set of C's dual.
RecoveryStructure structure_from_test_set(const LinearCode& C, const TestSet& T);

// A word with erased positions: erased[j] true means entries[j] is missing.
struct MaskedVec {
    FieldPtr field;
    std::vector<Elem> entries;
    std::vector<std::uint8_t> erased;

    std::vector<int> erased_positions() const;  // 1-based
};

// Fills the single erased position i as -(w_i)_i^{-1} * sum_{j in R_i} (w_i)_j x_j
// and returns the value. Throws RecoverySetErased when R_i is not fully
// present and NotACodeword when the completed word fails the parity check
// (the non-erased entries were corrupt).
Elem recover(const MaskedVec& x, const RecoveryStructure& S);

// Best-effort iterated repair of any number of erasures: fills positions
// whose recovery set is complete until a fixpoint. Throws Stalled with the
// residual positions when some remain.
Vec recover_multi(const MaskedVec& x, const RecoveryStructure& S);

// k + d + ceil(k/r) <= n + 2.
bool singleton_bound_check(int n, int k, int d, int r);

// max(smallest r satisfying the bound above, dual_distance - 1).
int locality_lower_bound(int n, int k, int d, int dual_distance);

struct Classification {
    bool optimal = false;        // bound met with equality at loc(S)
    bool sharp = false;          // per-coordinate minimality
    bool sharp_verified = false; // false when the oracle budget was exceeded
};

// d is the minimum distance of S's code. Sharpness holds by construction and
// is re-verified against the exhaustive oracle when the dual fits the budget.
Classification classify(const RecoveryStructure& S, int d, std::uint64_t budget = 0);

}  // namespace lrc

#endif
