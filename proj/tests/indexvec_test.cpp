#include <doctest.h>

#include <random>

#include "equilat/order.hpp"
#include "helpers.hpp"

using namespace equilat;
using namespace equilat::testing;

TEST_CASE("conformal order on examples") {
    const IndexedVector zero(IndexShape(1, 1, 3));
    CHECK(conformal_leq(zero, line({2, -2, 5})));
    CHECK(conformal_leq(zero, zero));

    CHECK(conformal_leq(line({1, -1, 0}), line({2, -2, 5})));
    CHECK_FALSE(conformal_leq(line({2, -2, 5}), line({1, -1, 0})));
    CHECK_FALSE(conformal_leq(line({1, -1}), line({1, 1})));

    CHECK_THROWS_AS(conformal_leq(line({1}), line({1, 2})), ShapeError);
}

TEST_CASE("conformal order is a partial order and norm-monotone") {
    std::mt19937 rng(7);
    const IndexShape shape(1, 1, 4);
    for (int t = 0; t < 300; ++t) {
        const IndexedVector u = random_vector(rng, shape, 3);
        const IndexedVector v = random_vector(rng, shape, 3);
        const IndexedVector w = random_vector(rng, shape, 3);
        CHECK(conformal_leq(u, u));
        if (conformal_leq(u, v)) CHECK(u.norm() <= v.norm());
        if (conformal_leq(u, v) && conformal_leq(v, u)) CHECK(u == v);
        if (conformal_leq(u, v) && conformal_leq(v, w)) CHECK(conformal_leq(u, w));
    }
}

TEST_CASE("minimal element extraction returns pairwise incomparable vectors") {
    std::mt19937 rng(11);
    const IndexShape shape(1, 1, 3);
    for (int t = 0; t < 50; ++t) {
        std::vector<IndexedVector> xs;
        for (int k = 0; k < 8; ++k) xs.push_back(random_vector(rng, shape, 2));
        const auto mins = conformal_minimal(xs);
        CHECK(!xs.empty());
        REQUIRE(!mins.empty());  // finite nonempty sets have minimal members
        for (size_t i = 0; i < mins.size(); ++i)
            for (size_t j = 0; j < mins.size(); ++j)
                if (i != j) CHECK_FALSE(conformal_leq(mins[i], mins[j]));
    }
}

TEST_CASE("sign split") {
    const SignSplit s = sign_split(line({2, -3, 0}));
    CHECK(s.plus == line({2, 0, 0}));
    CHECK(s.minus == line({0, 3, 0}));

    const IndexedVector zero(IndexShape(1, 1, 2));
    const SignSplit z = sign_split(zero);
    CHECK(z.plus.is_zero());
    CHECK(z.minus.is_zero());

    const SignSplit m = sign_split(line({-1, -1}));
    CHECK(m.plus.is_zero());
    CHECK(m.minus == line({1, 1}));

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        const IndexedVector u = random_vector(rng, IndexShape(2, 2, 2), 4);
        const SignSplit ss = sign_split(u);
        CHECK(ss.plus - ss.minus == u);
        for (const auto& [idx, v] : ss.plus.entries()) CHECK(ss.minus.coeff(idx) == 0);
    }
}

TEST_CASE("basis index ordering matches the pinned d=2 chain") {
    // e_(1,1) < e_(1,2) < e_(2,1) < e_(2,2) < e_(1,3)
    const std::vector<IndexTuple> chain = {
        {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}, {1, 3, 1}};
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = 0; j < chain.size(); ++j) {
            const int c = basis_index_compare(chain[i], chain[j]);
            if (i < j) CHECK(c < 0);
            if (i == j) CHECK(c == 0);
            if (i > j) CHECK(c > 0);
        }

    // Bounded coordinate compares first: (5,1) before (1,2) when d=1, c=2.
    CHECK(basis_index_compare({5, 1}, {1, 2}) < 0);
}

TEST_CASE("first and last coefficients") {
    // u = 2 e_(1,2) + e_(1,3) + 3 e_(3,1) - 4 e_(2,4), d=2: f=2, l=-4.
    IndexedVector u(IndexShape(2, 1, 4));
    u.set({1, 2, 1}, 2);
    u.set({1, 3, 1}, 1);
    u.set({3, 1, 1}, 3);
    u.set({2, 4, 1}, -4);
    const auto [f, l] = first_last_coeff(u);
    CHECK(f == 2);
    CHECK(l == -4);

    const auto single = first_last_coeff(line({1}));
    CHECK(single.first == 1);
    CHECK(single.second == 1);

    IndexedVector w(IndexShape(2, 1, 2));
    w.set({1, 1, 1}, -1);
    w.set({2, 2, 1}, 1);
    const auto [f2, l2] = first_last_coeff(w);
    CHECK(f2 == -1);
    CHECK(l2 == 1);

    CHECK_THROWS_AS(first_last_coeff(IndexedVector(IndexShape(1, 1, 1))), ShapeError);
}

namespace {

std::vector<IndexedVector> nonneg_up_to(const IndexShape& shape, int bound) {
    return enumerate_nonneg(shape, bound);
}

void check_term_order_axioms(TermOrderSpec order, const IndexShape& shape) {
    const auto xs = nonneg_up_to(shape, 4);
    const IndexedVector zero(shape);
    for (const auto& v : xs) {
        CHECK(term_compare(order, v, v) == 0);
        if (!v.is_zero()) CHECK(term_compare(order, zero, v) < 0);
        for (const auto& w : xs) {
            const int c = term_compare(order, v, w);
            CHECK(c == -term_compare(order, w, v));  // antisymmetry
            if (!(v == w)) CHECK(c != 0);            // totality
        }
    }
    // Transitivity and additivity on a subsample (the full triple product
    // is large but redundant).
    const auto small = nonneg_up_to(shape, 2);
    for (const auto& u : small)
        for (const auto& v : small)
            for (const auto& w : small) {
                if (term_compare(order, u, v) < 0 && term_compare(order, v, w) < 0)
                    CHECK(term_compare(order, u, w) < 0);
            }
    for (const auto& v : small)
        for (const auto& w : small)
            for (const auto& a : small) {
                const int before = term_compare(order, v, w);
                const int after = term_compare(order, v + a, w + a);
                CHECK(before == after);
            }
    // Conformal dominance coarsens every term order.
    for (const auto& v : xs)
        for (const auto& w : xs)
            if (!(v == w) && conformal_leq(v, w)) CHECK(term_compare(order, v, w) < 0);
}

}  // namespace

TEST_CASE("term orders satisfy the order axioms on small shapes") {
    for (const TermOrderKind kind :
         {TermOrderKind::lex, TermOrderKind::dlex, TermOrderKind::revlex}) {
        const TermOrderSpec order{kind};
        check_term_order_axioms(order, IndexShape(1, 1, 3));
        check_term_order_axioms(order, IndexShape(2, 1, 2));
    }
}

TEST_CASE("term order examples and pinned orientation") {
    const TermOrderSpec lex{TermOrderKind::lex};
    const TermOrderSpec dlex{TermOrderKind::dlex};
    const TermOrderSpec revlex{TermOrderKind::revlex};

    CHECK(term_compare(dlex, line({1, 1, 1}), line({1, 1, 1})) == 0);
    // Norm dominates under dlex.
    CHECK(term_compare(dlex, line({1, 0, 0}), line({1, 1, 1})) < 0);
    CHECK(term_compare(dlex, line({0, 0, 1}), line({3, 0, 0})) < 0);

    // Frozen orientation: e_1 comes first under all three orders.
    const IndexedVector e1 = line({1, 0}), e2 = line({0, 1});
    CHECK(term_compare(lex, e1, e2) < 0);
    CHECK(term_compare(dlex, e1, e2) < 0);
    CHECK(term_compare(revlex, e1, e2) < 0);
    // lex ignores norm: e_2 dominates any vector supported on e_1 alone.
    CHECK(term_compare(lex, line({3, 0}), line({0, 1})) < 0);

    CHECK_THROWS_AS(term_compare(lex, line({-1, 0}), line({0, 1})), ShapeError);
}

