#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

// Length-n word over one field.
struct Vec {
    FieldPtr field;
    std::vector<Elem> entries;

    std::size_t size() const noexcept { return entries.size(); }
    Elem operator[](std::size_t i) const { return entries[i]; }
    bool operator==(const Vec& o) const {
        return field->same(*o.field) && entries == o.entries;
    }
};

int weight(std::span<const Elem> v) noexcept;
inline int weight(const Vec& v) noexcept { return weight(std::span<const Elem>(v.entries)); }

// 1-based coordinates of the nonzero entries, ascending.
std::vector<int> support(std::span<const Elem> v);
inline std::vector<int> support(const Vec& v) { return support(std::span<const Elem>(v.entries)); }

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(Elem lambda, const Vec& a);

// Dense row-major matrix over a field (the field travels separately).
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

// Reduce M to reduced row-echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& M);

// An [n, k] linear code held as a generator/parity-check pair with
// rank(G) = k, rank(H) = n-k and G H^T = 0. Coordinates are 1-based in every
// public interface, matching the usual {1, ..., n} convention.
class LinearCode {
   public:
    LinearCode() = default;  // empty placeholder; fill via from_generator/dual

    // Reduces G to a full-rank RREF basis and derives H from the standard
    // form. Rejects the zero matrix and codes with an identically-zero
    // coordinate (there is nothing to recover for such a coordinate).
    static LinearCode from_generator(FieldPtr field, const Matrix& G);

    // Swaps the roles of G and H.
    LinearCode dual() const;

    const FieldPtr& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const Matrix& G() const noexcept { return G_; }
    const Matrix& H() const noexcept { return H_; }

    // True iff H x^T = 0.
    bool is_codeword(const Vec& x) const;
    bool is_codeword(std::span<const Elem> x) const;

    // Rank of the column submatrix of G indexed by S (1-based coordinates).
    int projection_rank(std::span<const int> S) const;

    // Exact minimum distance by enumerating all q^k codewords.
    // Throws BudgetExceeded when q^k > budget.
    int min_distance_exhaustive(std::uint64_t budget = 0) const;

    Vec encode(std::span<const Elem> message) const;

   private:
    FieldPtr field_;
    int n_ = 0, k_ = 0;
    Matrix G_, H_;
};

// Budget for exhaustive enumerations: LRC_BUDGET env var, default 2^24.
std::uint64_t default_budget();

}  // namespace lrc

#endif
