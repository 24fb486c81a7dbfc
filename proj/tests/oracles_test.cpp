// oracles_test.cpp
// Independent numeric oracles for the constants frozen into the other suites:
// polynomial bisection and big-integer path counting, neither of which shares
// code with the library's entropy iteration.

#include <doctest.h>

#include <markovmm/rational.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

using markovmm::Int;
using markovmm::Rat;

namespace {

// Frozen spectral constants used across the suites.
constexpr double kGoldenRatio = 1.6180339887498949;
constexpr double kLogGoldenRatio = 0.48121182505960347;
constexpr double kLog2 = 0.6931471805599453;
constexpr double kPlastic = 1.3247179572447460;
constexpr double kLogPlastic = 0.28119957432296183;

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    REQUIRE(f(lo) < 0.0);
    REQUIRE(f(hi) > 0.0);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Number of admissible words of the given length, counted with exact integers.
Int word_count(const std::vector<std::vector<int>>& rows, int length) {
    const std::size_t n = rows.size();
    std::vector<Int> v(n, 1);  // words of length 1 ending anywhere
    for (int step = 1; step < length; ++step) {
        std::vector<Int> next(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i][j]) next[i] += v[j];
        v = std::move(next);
    }
    Int total = 0;
    for (const Int& x : v) total += x;
    return total;
}

// Perron root estimate: ratio of consecutive word counts at a long horizon.
double growth_rate(const std::vector<std::vector<int>>& rows, int length) {
    Rat ratio(word_count(rows, length + 1), word_count(rows, length));
    return markovmm::to_double(ratio);
}

}  // namespace

TEST_CASE("bisection pins the golden ratio and its logarithm") {
    // x^2 - x - 1 and the cubic x^3 - 2x - 1 = (x + 1)(x^2 - x - 1).
    double phi = bisect_root([](double x) { return x * x - x - 1.0; }, 1.0, 2.0);
    CHECK(phi == doctest::Approx(kGoldenRatio).epsilon(1e-15));
    double phi3 = bisect_root([](double x) { return x * x * x - 2.0 * x - 1.0; }, 1.5, 2.0);
    CHECK(phi3 == doctest::Approx(kGoldenRatio).epsilon(1e-15));
    CHECK(std::log(phi) == doctest::Approx(kLogGoldenRatio).epsilon(1e-15));
}

TEST_CASE("bisection pins the plastic number and its logarithm") {
    double rho = bisect_root([](double x) { return x * x * x - x - 1.0; }, 1.0, 2.0);
    CHECK(rho == doctest::Approx(kPlastic).epsilon(1e-15));
    CHECK(std::log(rho) == doctest::Approx(kLogPlastic).epsilon(1e-15));
}

TEST_CASE("frozen log 2") {
    CHECK(std::log(2.0) == doctest::Approx(kLog2).epsilon(1e-15));
}

TEST_CASE("path counting recovers the golden ratio for the 3x3 fixture matrix") {
    std::vector<std::vector<int>> rows = {{0, 1, 1}, {1, 0, 0}, {1, 1, 0}};
    CHECK(growth_rate(rows, 80) == doctest::Approx(kGoldenRatio).epsilon(1e-12));
}

TEST_CASE("path counting recovers the plastic number for its companion matrix") {
    std::vector<std::vector<int>> rows = {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    CHECK(growth_rate(rows, 140) == doctest::Approx(kPlastic).epsilon(1e-12));
}

TEST_CASE("branch-symbol block of the expansion-failure fixture has rate 2") {
    // Rows of the {1,2,3,4} block: 1->{2,3}, 2->{4}, 3->{1,2,3}, 4->{2,3}.
    std::vector<std::vector<int>> rows = {
        {0, 1, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 0}};

    // (2,1,3,2) is an exact eigenvector for eigenvalue 2: integer identity.
    std::vector<int> v = {2, 1, 3, 2};
    for (int i = 0; i < 4; ++i) {
        int acc = 0;
        for (int j = 0; j < 4; ++j) acc += rows[i][j] * v[j];
        CHECK(acc == 2 * v[i]);
    }
    CHECK(growth_rate(rows, 60) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("point-symbol block of the expansion-failure fixture has golden-ratio rate") {
    // Rows of the {5,...,10} block, indexed 0..5:
    // 5->{6,8}, 6->{7,9}, 7->{10}, 8->{5}, 9->{7,9}, 10->{6,8}.
    std::vector<std::vector<int>> rows = {
        {0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
        {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0}};
    CHECK(growth_rate(rows, 90) == doctest::Approx(kGoldenRatio).epsilon(1e-12));
}

TEST_CASE("mixed-component fixture block growth rate") {
    // Rows of the {1,...,7} block, indexed 0..6: 1->{1,2,3,4,5,7}, 2->{1},
    // 3->{1}, 4->{2}, 5->{6}, 6->{3,4,5,7}, 7->{3,4,5,7}.
    std::vector<std::vector<int>> rows = {
        {1, 1, 1, 1, 1, 0, 1}, {1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 1, 0, 1},
        {0, 0, 1, 1, 1, 0, 1}};
    CHECK(growth_rate(rows, 120) == doctest::Approx(2.5681148594401555).epsilon(1e-12));
    CHECK(std::log(growth_rate(rows, 120)) ==
          doctest::Approx(0.9431721120238058).epsilon(1e-12));
}

TEST_CASE("full-shift-like fixture block has rate 2") {
    std::vector<std::vector<int>> rows = {{1, 1}, {1, 1}};
    // Exactly 2^length words.
    CHECK(word_count(rows, 10) == Int(1024));
    CHECK(growth_rate(rows, 20) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("hand-inverted word interval for the expansion-failure fixture") {
    // Branch 3 is y = 2x - 2/3 on [1/3, 2/3]; branch 1 has domain [0, 1/3].
    // The word 3 3 1 pins start points x with f3(x) in I(3 1), where
    // I(3 1) = f3^{-1}(D(1) cap R(3)). Plain rational arithmetic throughout.
    auto inv3 = [](const Rat& y) { return Rat((y + Rat(2, 3)) / 2); };
    Rat i31_lo = inv3(Rat(0));
    Rat i31_hi = inv3(Rat(1, 3));
    CHECK(i31_lo == Rat(1, 3));
    CHECK(i31_hi == Rat(1, 2));
    Rat i331_lo = inv3(i31_lo);
    Rat i331_hi = inv3(i31_hi);
    CHECK(i331_lo == Rat(1, 2));
    CHECK(i331_hi == Rat(7, 12));
    // Strictly between the partition points 1/3 and 2/3: an avoiding word.
    CHECK(i331_lo > Rat(1, 3));
    CHECK(i331_hi < Rat(2, 3));
}

TEST_CASE("hand-inverted word interval for the mixed-component fixture") {
    // Branch 1 is y = 2x on [0, 1/2]; symbol 3 is the vertical at x = 1/2.
    // The word 1 3 pins the single start point with f1(x) = 1/2.
    Rat x = Rat(1, 2) / 2;
    CHECK(x == Rat(1, 4));
    // 1/4 is not a partition point of {0, 1/2, 1}.
    CHECK(x != Rat(0));
    CHECK(x != Rat(1, 2));
    CHECK(x != Rat(1));
}
