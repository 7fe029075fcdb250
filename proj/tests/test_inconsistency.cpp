#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gahp/inconsistency.hpp"
#include "support.hpp"

using namespace gahp;

namespace {

PCMatrix permuted(const PCMatrix& c, const std::vector<std::size_t>& p) {
    const std::size_t n = c.size();
    std::vector<double> rows(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i * n + j] = c(p[i], p[j]);
    return PCMatrix::from_rows(n, rows);
}

} // namespace

TEST_CASE("CI of the lobbying example experts") {
    const auto panel = testing::load_panel("lobbying_panel.json");
    CHECK(std::abs(saaty_ci(panel[2]) - 0.0026) <= 5e-4);
    CHECK(std::abs(saaty_ci(panel[6]) - 0.0528) <= 5e-4);
    // the example quotes the average as 0.02
    CHECK(std::abs(panel_mean_ci(panel) - 0.0199) <= 5e-4);
}

TEST_CASE("CI is zero on consistent matrices and bounded otherwise") {
    CHECK(saaty_ci(PCMatrix::indifference(5)) <= 1e-9);
    std::mt19937 gen(41);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + t % 6;
        const auto c = testing::random_matrix(n, gen);  // entries in [1/9, 9]
        const double ci = saaty_ci(c);
        CHECK(ci >= 0.0);
        CHECK(ci <= 64.0 / 18.0);
    }
}

TEST_CASE("panel mean CI is the arithmetic mean") {
    // Two 3x3 matrices whose CI values are known from the closed form.
    const std::vector<double> a{2, 2, 2}, b{2, 2, 4}, c{1, 9, 1};
    const ExpertPanel p({PCMatrix::from_upper_triangle(3, a), PCMatrix::from_upper_triangle(3, b),
                         PCMatrix::from_upper_triangle(3, c)});
    double expect = 0;
    for (const auto& m : p) expect += (testing::oracle_lambda_3x3(m) - 3) / 2;
    CHECK(panel_mean_ci(p) == doctest::Approx(expect / 3).epsilon(1e-10));
}

TEST_CASE("Koczkodaj index on hand-checked triads") {
    const std::vector<double> exact{2, 4, 2};     // c12, c13, c23
    const std::vector<double> off{2, 2, 2};
    CHECK(koczkodaj_k(PCMatrix::from_upper_triangle(3, exact)) <= 1e-12);
    CHECK(koczkodaj_k(PCMatrix::from_upper_triangle(3, off)) == doctest::Approx(0.5));
    CHECK(koczkodaj_k(consistent_matrix_from_priorities(PriorityVector({0.1, 0.2, 0.3, 0.4}))) <= 1e-9);
    CHECK_THROWS_AS(koczkodaj_k(PCMatrix::indifference(2)), DomainError);
}

TEST_CASE("Koczkodaj index matches the all-triples oracle") {
    std::mt19937 gen(43);
    for (int t = 0; t < 100; ++t) {
        const auto c = testing::random_matrix(3 + t % 5, gen);
        CHECK(koczkodaj_k(c) == doctest::Approx(testing::oracle_koczkodaj(c)).epsilon(1e-12));
    }
}

TEST_CASE("indices are invariant under relabeling alternatives") {
    std::mt19937 gen(47);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 4 + t % 4;
        const auto c = testing::random_matrix(n, gen);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), gen);
        const auto d = permuted(c, p);
        CHECK(saaty_ci(d) == doctest::Approx(saaty_ci(c)).epsilon(1e-10));
        CHECK(koczkodaj_k(d) == doctest::Approx(koczkodaj_k(c)).epsilon(1e-12));
    }
}
