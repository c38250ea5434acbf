#include "lrc/oracle.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "lrc/order.hpp"

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

TEST_CASE("codeword enumeration counts") {
    std::vector<Elem> w;
    std::uint64_t count = 0;
    oracle::CodewordStream toy(toy_code());
    while (toy.next(w)) ++count;
    CHECK(count == 4);

    count = 0;
    oracle::CodewordStream dual(ex1_code().dual());
    std::set<std::vector<Elem>> distinct;
    while (dual.next(w)) {
        ++count;
        distinct.insert(w);
    }
    CHECK(count == 1024);  // 4^5
    CHECK(distinct.size() == 1024);

    CHECK_THROWS_AS(oracle::CodewordStream(ex1_code(), 8), BudgetExceeded);
}

TEST_CASE("exact locality") {
    LinearCode C = ex1_code();
    for (int i = 1; i <= 9; ++i) CHECK(oracle::loc_exact(C, i) == 3);

    auto f2 = Field::make_default(2);
    LinearCode rep = LinearCode::from_generator(f2, rows_to_matrix({{1, 1, 1, 1}}));
    for (int i = 1; i <= 4; ++i) CHECK(oracle::loc_exact(rep, i) == 1);
    CHECK_THROWS_AS(oracle::loc_exact(C, 10), IndexOutOfRange);

    // never exceeds k
    std::mt19937_64 rng(11);
    auto f3 = Field::make_default(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix G(3, 7);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 7; ++c) G(r, c) = static_cast<Elem>(rng() % 3);
        LinearCode C3;
        try {
            C3 = LinearCode::from_generator(f3, G);
        } catch (const Error&) {
            continue;
        }
        bool dist_one = false;
        for (int c = 0; c < 7 && !dist_one; ++c) {
            bool hz = true;
            for (std::size_t r = 0; r < C3.H().rows() && hz; ++r) hz = (C3.H()(r, c) == 0);
            dist_one = hz;
        }
        if (dist_one) continue;
        for (int i = 1; i <= 7; ++i) CHECK(oracle::loc_exact(C3, i) <= C3.k());
    }
}

TEST_CASE("minimal and i-minimal codewords") {
    LinearCode C = toy_code();
    LinearCode D = C.dual();
    CHECK(oracle::is_minimal(D, Vec{C.field(), {1, 1, 1}}));  // the only nonzero dual word
    CHECK_THROWS_AS(oracle::is_minimal(D, Vec{C.field(), {1, 0, 0}}), NotACodeword);
    CHECK_THROWS_AS(oracle::is_minimal(D, Vec{C.field(), {0, 0, 0}}), NotACodeword);

    // weight-d codewords are always minimal
    LinearCode E = ex1_code();
    oracle::CodewordStream s(E);
    std::vector<Elem> w;
    while (s.next(w))
        if (weight(std::span<const Elem>(w)) == 5)
            CHECK(oracle::is_minimal(E, Vec{E.field(), w}));

    // i-minimal holds inside the support of a minimal word, fails outside it
    CHECK(oracle::is_i_minimal(D, Vec{C.field(), {1, 1, 1}}, 1));
    Vec row{E.field(), {1, 0, 0, 0, 2, 3, 2, 3, 1}};
    CHECK_FALSE(oracle::is_i_minimal(E, row, 2));
}

TEST_CASE("Lemma 1: minimal <=> i-minimal for all i <=> i-minimal for some i") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = Field::make_default(q);
        for (int trial = 0; trial < 4; ++trial) {
            const int n = 5 + static_cast<int>(rng() % 3);
            const int k = 2 + static_cast<int>(rng() % 3);
            Matrix G(k, n);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < n; ++c) G(r, c) = static_cast<Elem>(rng() % q);
            LinearCode C;
            try {
                C = LinearCode::from_generator(f, G);
            } catch (const Error&) {
                continue;
            }
            oracle::CodewordStream s(C);
            std::vector<Elem> w;
            while (s.next(w)) {
                if (weight(std::span<const Elem>(w)) == 0) continue;
                Vec x{f, w};
                const bool minimal = oracle::is_minimal(C, x);
                bool all_i = true, some_i = false;
                for (int i = 1; i <= n; ++i) {
                    if (w[i - 1] == 0) continue;
                    const bool im = oracle::is_i_minimal(C, x, i);
                    all_i = all_i && im;
                    some_i = some_i || im;
                }
                CHECK(minimal == all_i);
                CHECK(all_i == some_i);
            }
        }
    }
}

TEST_CASE("Prop 1: the three recovery-set characterizations") {
    LinearCode C = toy_code();
    std::vector<int> R{2, 3};
    auto eq = oracle::recovery_set_equiv(C, R, 1);
    CHECK(eq.span_membership);
    CHECK(eq.rank_equality);
    CHECK(eq.dual_witness);
    CHECK(eq.agree());

    std::vector<int> empty;
    auto eq0 = oracle::recovery_set_equiv(C, empty, 1);
    CHECK_FALSE(eq0.span_membership);
    CHECK_FALSE(eq0.rank_equality);
    CHECK_FALSE(eq0.dual_witness);
    CHECK(eq0.agree());

    LinearCode E = ex1_code();
    std::vector<int> R1{2, 3, 8};
    auto eq1 = oracle::recovery_set_equiv(E, R1, 1);
    CHECK(eq1.span_membership);
    CHECK(eq1.rank_equality);
    CHECK(eq1.dual_witness);

    std::vector<int> bad{1, 2};
    CHECK_THROWS_AS(oracle::recovery_set_equiv(C, bad, 1), IndexOutOfRange);
}

TEST_CASE("Prop 1 agreement over all small subsets of the worked example") {
    LinearCode C = ex1_code();
    const int n = C.n();
    // all (R, i) with |R| <= 2 keeps this quick; the acceptance sweep does 4
    for (int i = 1; i <= n; ++i) {
        for (int a = 1; a <= n; ++a) {
            if (a == i) continue;
            std::vector<int> R1{a};
            CHECK(oracle::recovery_set_equiv(C, R1, i).agree());
            for (int b = a + 1; b <= n; ++b) {
                if (b == i) continue;
                std::vector<int> R2{a, b};
                CHECK(oracle::recovery_set_equiv(C, R2, i).agree());
            }
        }
    }
}

TEST_CASE("iteration bound") {
    CHECK(oracle::d_bound(10, 4, 2) == 968);
    CHECK(oracle::d_bound(9, 4, 4) == 104680);
    // k = n: 1 + n(q-1)
    CHECK(oracle::d_bound(6, 6, 3) == 13);
    // saturation instead of overflow
    CHECK(oracle::d_bound(120, 2, 1024) == ~std::uint64_t{0});
}

TEST_CASE("minimal codeword weights stay within n - k + 1") {
    LinearCode D = ex1_code().dual();  // [9,5]
    oracle::CodewordStream s(D);
    std::vector<Elem> w;
    while (s.next(w)) {
        if (weight(std::span<const Elem>(w)) == 0) continue;
        Vec x{D.field(), w};
        if (oracle::is_minimal(D, x))
            CHECK(weight(x) <= D.n() - D.k() + 1);
    }
}
