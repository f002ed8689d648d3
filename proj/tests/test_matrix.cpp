#include <gtest/gtest.h>

#include <set>

#include "eog/matrix01.hpp"
#include "oracles.hpp"

using namespace eog;

namespace {

Matrix01 M(const char* s) { return Matrix01::parse(s); }

}  // namespace

TEST(Matrix, ParseAndTransform) {
    const Matrix01 a = M("110\n# note\n011\n");
    EXPECT_EQ(a.rows(), 2);
    EXPECT_EQ(a.cols(), 3);
    EXPECT_EQ(a.str(), "110;011");
    EXPECT_EQ(a.transposed().str(), "10;11;01");
    EXPECT_EQ(a.rotated().str(), "01;11;10");
    EXPECT_EQ(a.column_reversed().str(), "011;110");
    EXPECT_EQ(a.ones(), 4);
    EXPECT_THROW(M("10;1"), Error);
    EXPECT_THROW(M("12"), Error);
    EXPECT_THROW(Matrix01(0, 2), Error);
}

TEST(Matrix, ContainmentExamples) {
    EXPECT_TRUE(contains_pattern(M("11;11"), M("11")));
    EXPECT_FALSE(contains_pattern(M("10;01"), M("11")));
    EXPECT_TRUE(contains_pattern(M("110;101"), M("110;101")));
    EXPECT_THROW(contains_pattern(M("1"), M("0")), Error);
}

TEST(Matrix, ContainmentMatchesBruteForce) {
    const std::vector<Matrix01> patterns{M("11;11"), M("110;101"), M("10;01"), M("01;10"), M("11;01"), M("101")};
    oracle::for_each_matrix(3, 4, [&](const Matrix01& a) {
        for (const auto& b : patterns) ASSERT_EQ(contains_pattern(a, b), oracle::matrix_contains(a, b)) << a.str() << " " << b.str();
    });
}

TEST(Matrix, Connectedness) {
    EXPECT_TRUE(is_connected_matrix(M("11;01")));
    EXPECT_FALSE(is_connected_matrix(M("10;01")));
    EXPECT_TRUE(is_connected_matrix(M("1")));
    EXPECT_TRUE(is_light(M("100;011")));
    EXPECT_FALSE(is_light(M("110;011")));
}

TEST(Matrix, StaircaseExamples) {
    const auto one = staircase_certificate(M("1"));
    ASSERT_TRUE(one);
    EXPECT_EQ(one->positions.size(), 1u);
    const Matrix01 a = M("11;01");
    const auto s = staircase_certificate(a);
    ASSERT_TRUE(s);
    EXPECT_FALSE(s->column_reversed);
    EXPECT_TRUE(describes(*s, a));
    EXPECT_EQ(described_matrix(*s, 2, 2), a);
    EXPECT_FALSE(staircase_certificate(M("11;11")));
    const auto r = staircase_certificate(M("10;11"));
    ASSERT_TRUE(r);
    EXPECT_TRUE(describes(*r, M("10;11")));
}

TEST(Matrix, StaircaseOnesCount) {
    oracle::for_each_matrix(3, 3, [&](const Matrix01& a) {
        if (a.all_zero()) return;
        if (const auto s = staircase_certificate(a)) {
            EXPECT_EQ(a.ones(), a.rows() + a.cols() - 1) << a.str();
            EXPECT_TRUE(is_connected_matrix(a));
        }
    });
}

TEST(Matrix, ElementaryOperations) {
    EXPECT_EQ(elementary_op(M("1"), {Boundary::Right, 0}), M("11"));
    EXPECT_EQ(elementary_op(M("1"), {Boundary::Top, 0}), M("1;1"));
    EXPECT_THROW(elementary_op(M("10"), {Boundary::Right, 0}), Error);
    const auto ops = reach_from_unit(M("11;01"));
    ASSERT_TRUE(ops);
    EXPECT_EQ(ops->size(), 2u);
    Matrix01 m = M("1");
    for (const auto& p : *ops) m = elementary_op(m, p);
    EXPECT_EQ(m, M("11;01"));
    EXPECT_FALSE(reach_from_unit(M("11;11")));
}

TEST(Matrix, ForbiddenFamily) {
    const auto& fam = forbidden_family();
    ASSERT_EQ(fam.size(), 9u);
    std::set<Matrix01> distinct(fam.begin(), fam.end());
    EXPECT_EQ(distinct.size(), 9u);
    EXPECT_TRUE(distinct.count(M("11;11")));
    EXPECT_TRUE(distinct.count(M("110;101")));
    EXPECT_TRUE(distinct.count(M("101;011")));
    // Closed under rotation.
    for (const auto& f : fam) EXPECT_TRUE(distinct.count(f.rotated())) << f.str();
}

TEST(Matrix, ClassifyExamples) {
    EXPECT_EQ(classify_matrix(M("11;01")).growth, GrowthClass::Linear);
    const auto sq = classify_matrix(M("11;11"));
    EXPECT_EQ(sq.growth, GrowthClass::OmegaNLogN);
    ASSERT_TRUE(sq.obstruction);
    EXPECT_EQ(*sq.obstruction, M("11;11"));
    EXPECT_EQ(classify_matrix(M("110;101")).growth, GrowthClass::OmegaNLogN);
    EXPECT_THROW(classify_matrix(M("10;01")), Error);
    EXPECT_THROW(classify_matrix(M("00")), Error);
}

TEST(Matrix, EexExamples) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(eex_exact(n, M("1")).value, 0);
    EXPECT_EQ(eex_exact(2, M("11;11")).value, 3);
    EXPECT_EQ(eex_exact(3, M("11;11")).value, 6);
    EXPECT_THROW(eex_exact(3, M("0")), Error);
    EXPECT_THROW(eex_exact(0, M("1")), Error);
}

TEST(Matrix, EexMatchesBruteForce) {
    for (const char* spec : {"11;11", "110;101", "11;01", "101", "10;01", "01;10", "111"}) {
        const Matrix01 b = M(spec);
        for (int n = 1; n <= 4; ++n) {
            const auto r = eex_exact(n, b);
            EXPECT_EQ(r.status, SearchStatus::Exact);
            EXPECT_EQ(r.value, oracle::eex(n, b)) << spec << " n=" << n;
            EXPECT_EQ(r.witness.ones(), r.value);
            EXPECT_FALSE(oracle::matrix_contains(r.witness, b));
        }
    }
}

TEST(Matrix, EexBudget) {
    Budget tiny;
    tiny.nodes = 3;
    const auto r = eex_exact(6, M("11;11"), tiny);
    EXPECT_EQ(r.status, SearchStatus::LowerBoundOnly);
    EXPECT_FALSE(oracle::matrix_contains(r.witness, M("11;11")));
}
