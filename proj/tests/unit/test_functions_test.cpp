// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#include "gsa/test_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gsa/errors.hpp"
#include "gsa/sobol_sequence.hpp"

namespace {

using std::numbers::pi;

TEST(TestFunctions, Registry) {
    EXPECT_EQ(gsa::FunctionSpec::all().size(), 4u);
    EXPECT_EQ(gsa::FunctionSpec::by_name("liu").k, 2u);
    EXPECT_EQ(gsa::FunctionSpec::by_name("ishigami").k, 3u);
    EXPECT_EQ(gsa::FunctionSpec::by_name("sobol_g").k, 8u);
    EXPECT_EQ(gsa::FunctionSpec::by_name("morris").k, 20u);
    EXPECT_THROW(gsa::FunctionSpec::by_name("nope"), gsa::ConfigError);

    const auto labels = gsa::FunctionSpec::by_name("ishigami").labels(true);
    ASSERT_EQ(labels.size(), 4u);
    EXPECT_EQ(labels[0], "X1");
    EXPECT_EQ(labels[2], "X3");
    EXPECT_EQ(labels[3], "dummy");
    EXPECT_EQ(gsa::FunctionSpec::by_name("morris").input_specs(true).size(), 21u);
}

TEST(TestFunctions, LiuIsRatio) {
    EXPECT_DOUBLE_EQ(gsa::eval_liu(10.0, 13.978), 10.0 / 13.978);
    EXPECT_THROW(gsa::eval_liu(1.0, 0.0), gsa::DegenerateOutputError);
}

TEST(TestFunctions, LiuInputDistributions) {
    const auto& fn = gsa::FunctionSpec::by_name("liu");
    ASSERT_EQ(fn.inputs.size(), 2u);
    EXPECT_EQ(fn.inputs[0].kind, gsa::DistributionSpec::Kind::ChiSquare);
    EXPECT_DOUBLE_EQ(fn.inputs[0].p1, 10.0);
    EXPECT_DOUBLE_EQ(fn.inputs[1].p1, 13.978);
}

TEST(TestFunctions, IshigamiGoldenPoints) {
    EXPECT_DOUBLE_EQ(gsa::eval_ishigami(0.0, 0.0, 0.0), 0.0);
    // sin(pi/2) = 1: 1 + a + b (pi/2)^4.
    EXPECT_NEAR(gsa::eval_ishigami(pi / 2, pi / 2, pi / 2),
                1.0 + gsa::kIshigamiA + gsa::kIshigamiB * std::pow(pi / 2, 4),
                1e-12);
    // Odd in x1 when x3 = 0 and x2 = 0.
    EXPECT_DOUBLE_EQ(gsa::eval_ishigami(0.7, 0.0, 0.0),
                     -gsa::eval_ishigami(-0.7, 0.0, 0.0));
}

TEST(TestFunctions, SobolGGoldenPoints) {
    const std::vector<double> zeros(8, 0.0);
    const std::vector<double> halves(8, 0.5);
    // At the origin every factor is (2 + a_i) / (1 + a_i).
    EXPECT_NEAR(gsa::eval_sobol_g(zeros), 4.058355639, 1e-9);
    // |4 * 0.5 - 2| = 0 and a_1 = 0, so the first factor vanishes.
    EXPECT_DOUBLE_EQ(gsa::eval_sobol_g(halves), 0.0);

    const auto a = gsa::sobol_g_coefficients();
    ASSERT_EQ(a.size(), 8u);
    EXPECT_DOUBLE_EQ(a[0], 0.0);
    EXPECT_DOUBLE_EQ(a[1], 1.0);
    EXPECT_DOUBLE_EQ(a[2], 4.5);
    EXPECT_DOUBLE_EQ(a[3], 9.0);
    EXPECT_DOUBLE_EQ(a[7], 99.0);
}

TEST(TestFunctions, SobolGReflectionSymmetry) {
    // g(x) = g(1 - x) coordinate-wise, since |4(1-x) - 2| = |4x - 2|.
    const gsa::Matrix u = gsa::sobol_sequence(8, 64);
    std::vector<double> x(8), reflected(8);
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            x[c] = u(r, c);
            reflected[c] = 1.0 - u(r, c);
        }
        ASSERT_NEAR(gsa::eval_sobol_g(x), gsa::eval_sobol_g(reflected), 1e-12);
    }
}

TEST(TestFunctions, SobolGDomainIsClosedUnitCube) {
    std::vector<double> x(8, 0.5);
    x[3] = 1.0;
    EXPECT_NO_THROW(gsa::eval_sobol_g(x));
    x[3] = 1.0000001;
    EXPECT_THROW(gsa::eval_sobol_g(x), gsa::DomainError);
    x[3] = -0.0000001;
    EXPECT_THROW(gsa::eval_sobol_g(x), gsa::DomainError);
}

TEST(TestFunctions, MorrisGoldenPoints) {
    // At x = 0.5 the unwarped inputs give w = 0; the three warped inputs
    // (X4, X5, X7) give w = 5/6. First-order terms: 3 * 20 * 5/6 = 50;
    // the only surviving pair is (X4, X5): -15 * 25/36.
    const std::vector<double> half(20, 0.5);
    EXPECT_NEAR(gsa::eval_morris(half), 475.0 / 12.0, 1e-12);

    // At x_i = 1/12 the warp 1.1 x / (x + 0.1) equals exactly 1/2, so every
    // w vanishes and the polynomial is zero.
    std::vector<double> zero_point(20, 0.5);
    zero_point[3] = zero_point[4] = zero_point[6] = 1.0 / 12.0;
    EXPECT_NEAR(gsa::eval_morris(zero_point), 0.0, 1e-12);
}

TEST(TestFunctions, MorrisDomainIsClosedUnitCube) {
    std::vector<double> x(20, 0.5);
    x[0] = 1.0;
    EXPECT_NO_THROW(gsa::eval_morris(x));
    x[0] = 1.1;
    EXPECT_THROW(gsa::eval_morris(x), gsa::DomainError);
}

TEST(TestFunctions, MorrisTailInputsAreInert) {
    // X11..X20 have zero coefficients everywhere: changing them never moves
    // the output.
    const gsa::Matrix u = gsa::sobol_sequence(40, 32);
    for (std::size_t r = 0; r < u.rows(); ++r) {
        std::vector<double> x(20), y(20);
        for (std::size_t c = 0; c < 20; ++c) {
            x[c] = u(r, c);
            y[c] = c < 10 ? u(r, c) : u(r, 20 + c);
        }
        ASSERT_DOUBLE_EQ(gsa::eval_morris(x), gsa::eval_morris(y)) << "row " << r;
    }
}

TEST(TestFunctions, EvalRowsMatchesScalarEvaluators) {
    const auto& fn = gsa::FunctionSpec::by_name("ishigami");
    gsa::Matrix m(2, 3);
    m(0, 0) = 0.3; m(0, 1) = -1.0; m(0, 2) = 2.0;
    m(1, 0) = -2.0; m(1, 1) = 0.5; m(1, 2) = -0.25;
    const std::vector<double> y = gsa::eval_rows(fn, m);
    ASSERT_EQ(y.size(), 2u);
    EXPECT_DOUBLE_EQ(y[0], gsa::eval_ishigami(0.3, -1.0, 2.0));
    EXPECT_DOUBLE_EQ(y[1], gsa::eval_ishigami(-2.0, 0.5, -0.25));
}

TEST(TestFunctions, EvalRowsIgnoresAppendedDummyColumn) {
    const auto& fn = gsa::FunctionSpec::by_name("ishigami");
    gsa::Matrix plain(2, 3);
    gsa::Matrix dummy(2, 4, 0.77);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            plain(r, c) = 0.1 * static_cast<double>(r + c);
            dummy(r, c) = plain(r, c);
        }
    }
    EXPECT_EQ(gsa::eval_rows(fn, plain), gsa::eval_rows(fn, dummy));
}

TEST(TestFunctions, EvalRowsShapeAndErrorReporting) {
    const auto& fn = gsa::FunctionSpec::by_name("ishigami");
    EXPECT_THROW(gsa::eval_rows(fn, gsa::Matrix(2, 2)), gsa::ShapeError);
    EXPECT_THROW(gsa::eval_rows(fn, gsa::Matrix(2, 5)), gsa::ShapeError);

    // Row index is attached to scalar-evaluation failures.
    const auto& g = gsa::FunctionSpec::by_name("sobol_g");
    gsa::Matrix bad(3, 8, 0.5);
    bad(2, 1) = 1.5;
    try {
        gsa::eval_rows(g, bad);
        FAIL() << "expected DomainError";
    } catch (const gsa::DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos)
            << e.what();
    }
}

TEST(TestFunctions, EvalRowsRejectsNonFiniteOutputs) {
    const auto& fn = gsa::FunctionSpec::by_name("liu");
    gsa::Matrix m(1, 2);
    m(0, 0) = 1e308;
    m(0, 1) = 1e-308;
    EXPECT_THROW(gsa::eval_rows(fn, m), gsa::NumericError);
}

TEST(TestFunctions, EvalBatchCarriesInputs) {
    const auto& fn = gsa::FunctionSpec::by_name("liu");
    gsa::Matrix m(2, 2, 1.0);
    m(1, 0) = 3.0;
    const gsa::EvaluationBatch batch = gsa::eval_batch(fn, m);
    EXPECT_EQ(batch.inputs, m);
    ASSERT_EQ(batch.outputs.size(), 2u);
    EXPECT_DOUBLE_EQ(batch.outputs[1], 3.0);
}

}  // namespace
