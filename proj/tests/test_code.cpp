#include "lrc/code.hpp"

#include <random>

#include "doctest.h"

using namespace lrc;

namespace {

Matrix rows_to_matrix(const std::vector<std::vector<Elem>>& rows) {
    Matrix M(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) M(r, c) = rows[r][c];
    return M;
}

LinearCode toy_code() {
    auto f = Field::make_default(2);
    return LinearCode::from_generator(f, rows_to_matrix({{1, 0, 1}, {0, 1, 1}}));
}

LinearCode ex1_code() {
    auto f = Field::make_default(4);
    return LinearCode::from_generator(
        f, rows_to_matrix({{1, 0, 0, 0, 2, 3, 2, 3, 1},
                           {0, 1, 0, 0, 3, 2, 1, 3, 0},
                           {0, 0, 1, 0, 0, 2, 3, 1, 3},
                           {0, 0, 0, 1, 2, 1, 2, 0, 3}}));
}

}  // namespace

TEST_CASE("toy [3,2] code: construction and the unique dual row") {
    LinearCode C = toy_code();
    CHECK(C.n() == 3);
    CHECK(C.k() == 2);
    REQUIRE(C.H().rows() == 1);
    CHECK(C.H().row(0)[0] == 1);
    CHECK(C.H().row(0)[1] == 1);
    CHECK(C.H().row(0)[2] == 1);

    CHECK(C.is_codeword(Vec{C.field(), {1, 0, 1}}));
    CHECK_FALSE(C.is_codeword(Vec{C.field(), {1, 1, 1}}));
    CHECK(C.is_codeword(Vec{C.field(), {0, 0, 0}}));
    CHECK_THROWS_AS(C.is_codeword(Vec{C.field(), {1, 0}}), LengthMismatch);
}

TEST_CASE("construction rejects bad input") {
    auto f2 = Field::make_default(2);
    CHECK_THROWS_AS(LinearCode::from_generator(f2, rows_to_matrix({{0, 0, 0}})), ZeroMatrix);
    CHECK_THROWS_AS(LinearCode::from_generator(f2, rows_to_matrix({{1, 0, 0}, {1, 0, 1}})),
                    DegenerateCode);  // zero middle column
}

TEST_CASE("identity generator: full space with empty H") {
    auto f = Field::make_default(3);
    LinearCode C = LinearCode::from_generator(
        f, rows_to_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(C.k() == 3);
    CHECK(C.H().rows() == 0);
    CHECK(C.is_codeword(Vec{f, {2, 1, 0}}));
    LinearCode D = C.dual();
    CHECK(D.k() == 0);
    CHECK_FALSE(D.is_codeword(Vec{f, {2, 1, 0}}));
    CHECK(D.is_codeword(Vec{f, {0, 0, 0}}));
}

TEST_CASE("example [9,4] code over GF(4)") {
    LinearCode C = ex1_code();
    CHECK(C.n() == 9);
    CHECK(C.k() == 4);
    CHECK(C.min_distance_exhaustive() == 5);
    LinearCode D = C.dual();
    CHECK(D.k() == 5);
    CHECK(D.min_distance_exhaustive() == 4);  // the dual is a [9,5,4] code
    CHECK(C.dual().dual().G() == C.G());
}

TEST_CASE("min distance of the toy code by enumeration") {
    CHECK(toy_code().min_distance_exhaustive() == 2);
    CHECK_THROWS_AS(toy_code().min_distance_exhaustive(2), BudgetExceeded);
}

TEST_CASE("projection rank") {
    LinearCode C = toy_code();
    std::vector<int> all{1, 2, 3}, first2{1, 2}, none{};
    CHECK(C.projection_rank(all) == 2);
    CHECK(C.projection_rank(first2) == 2);
    CHECK(C.projection_rank(none) == 0);
    std::vector<int> bad{4};
    CHECK_THROWS_AS(C.projection_rank(bad), IndexOutOfRange);

    // monotone nondecreasing under inclusion, spot-checked on ex1
    LinearCode E = ex1_code();
    int prev = 0;
    std::vector<int> S;
    for (int i = 1; i <= E.n(); ++i) {
        S.push_back(i);
        int r = E.projection_rank(S);
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(prev == E.k());
}

TEST_CASE("support and weight") {
    auto f4 = Field::make_default(4);
    Vec x{f4, {1, 2, 0, 3}};  // (1, alpha, 0, alpha^2)
    CHECK(support(x) == std::vector<int>{1, 2, 4});
    CHECK(weight(x) == 3);
    Vec zero{f4, {0, 0, 0, 0}};
    CHECK(support(zero).empty());
    CHECK(weight(zero) == 0);
    Vec t1{f4, {2, 2, 3, 0, 0, 0, 0, 3, 0}};
    CHECK(support(t1) == std::vector<int>{1, 2, 3, 8});
}

TEST_CASE("random codes: rows of G and H are codewords of C and dual") {
    std::mt19937_64 rng(42);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::make_default(q);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 7);
            const int k = 1 + static_cast<int>(rng() % (n - 1));
            Matrix G(k, n);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < n; ++c) G(r, c) = static_cast<Elem>(rng() % q);
            LinearCode C;
            try {
                C = LinearCode::from_generator(f, G);
            } catch (const Error&) {
                continue;
            }
            LinearCode D = C.dual();
            for (std::size_t r = 0; r < C.G().rows(); ++r) CHECK(C.is_codeword(C.G().row(r)));
            for (std::size_t r = 0; r < C.H().rows(); ++r) CHECK(D.is_codeword(C.H().row(r)));
        }
    }
}

TEST_CASE("vector arithmetic and field mismatch") {
    auto f4 = Field::make_default(4);
    auto f2 = Field::make_default(2);
    Vec a{f4, {1, 2}}, b{f4, {3, 3}}, c{f2, {1, 1}};
    CHECK(vec_add(a, b).entries == std::vector<Elem>{2, 1});
    CHECK(vec_sub(vec_add(a, b), b) == a);
    CHECK(vec_scale(2, a).entries == std::vector<Elem>{2, 3});
    CHECK_THROWS_AS(vec_add(a, c), FieldMismatch);
}
