#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hdvol/error.hpp"
#include "hdvol/rng.hpp"
#include "hdvol/sampling.hpp"
#include "hdvol/specfun.hpp"
#include "hdvol/stats.hpp"
#include "oracles.hpp"

using namespace hdvol;
using stats::Sample;

namespace {

std::vector<double> gaussian(std::uint64_t idx, std::size_t n) {
    RngStream rng(31, idx);
    std::vector<double> v(n);
    sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, v);
    return v;
}

}  // namespace

TEST_CASE("sample sorts and counts exclusions") {
    const Sample s({3, -1, 2}, 4);
    CHECK(s.values() == std::vector<double>{-1, 2, 3});
    CHECK(s.size() == 3);
    CHECK(s.excluded_count() == 4);
    CHECK_THROWS_AS(Sample({1, NAN}), InputError);
    CHECK_THROWS_AS(Sample({INFINITY}), InputError);
}

TEST_CASE("KS to the standard normal, small cases") {
    CHECK(stats::ks_distance_to_std_normal(Sample({0.0})) == 0.5);
    CHECK_THROWS_AS(stats::ks_distance_to_std_normal(Sample()), InputError);
    // two points at ±∞-ish
    CHECK(std::fabs(stats::ks_distance_to_std_normal(Sample({-50, 50})) - 0.5) < 1e-15);
    // ties
    const double t = stats::ks_distance_to_std_normal(Sample({0.0, 0.0}));
    CHECK(t == 0.5);
}

TEST_CASE("KS of plug-in quantiles is 1/(2N)") {
    const int n = 1000;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = oracle::inverse_normal_cdf((i + 0.5) / n);
    }
    CHECK(std::fabs(stats::ks_distance_to_std_normal(Sample(v)) - 0.0005) < 1e-12);
}

TEST_CASE("KS of Gaussian and half-normal draws") {
    const auto g = gaussian(1, 100000);
    CHECK(stats::ks_distance_to_std_normal(Sample(g)) <= 0.01);
    std::vector<double> a(g.size());
    std::transform(g.begin(), g.end(), a.begin(), [](double x) { return std::fabs(x); });
    CHECK(stats::ks_distance_to_half_normal(Sample(a)) <= 0.01);
}

TEST_CASE("KS to the half-normal, small cases") {
    CHECK(stats::ks_distance_to_half_normal(Sample({0.0})) == 1.0);
    const double median = 0.6744897501960817432;
    CHECK(std::fabs(2 * specfun::std_normal_cdf(median) - 1 - 0.5) < 1e-15);
    CHECK(std::fabs(stats::ks_distance_to_half_normal(Sample({median})) - 0.5) < 1e-14);
    CHECK_THROWS_AS(stats::ks_distance_to_half_normal(Sample({1.0, -0.1})), InputError);
    CHECK_THROWS_AS(stats::ks_distance_to_half_normal(Sample()), InputError);
}

TEST_CASE("generic KS against a uniform CDF") {
    auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(std::fabs(stats::ks_distance(Sample({0.25, 0.75}), cdf) - 0.25) < 1e-15);
    CHECK(std::fabs(stats::ks_distance(Sample({0.9}), cdf) - 0.9) < 1e-15);
}

TEST_CASE("KS is symmetric under reflection") {
    auto v = gaussian(2, 5001);
    for (auto& x : v) {
        x = 0.3 + 1.2 * x;
    }
    auto w = v;
    for (auto& x : w) {
        x = -x;
    }
    CHECK(std::fabs(stats::ks_distance_to_std_normal(Sample(v)) - stats::ks_distance_to_std_normal(Sample(w))) <
          1e-12);
}

TEST_CASE("KS depends only on the set of values") {
    auto v = gaussian(3, 777);
    const double a = stats::ks_distance_to_std_normal(Sample(v));
    std::reverse(v.begin(), v.end());
    CHECK(stats::ks_distance_to_std_normal(Sample(v)) == a);
    std::sort(v.begin(), v.end());
    CHECK(stats::ks_distance_to_std_normal(Sample(v)) == a);
}

TEST_CASE("adding one point moves KS by at most 1/N plus the CDF gap") {
    RngStream rng(31, 4);
    for (int t = 0; t < 50; ++t) {
        auto v = gaussian(100 + t, 200);
        const double before = stats::ks_distance_to_std_normal(Sample(v));
        const double extra = 2.0 * sampling::sample_standard_normal(rng);
        v.push_back(extra);
        const double after = stats::ks_distance_to_std_normal(Sample(v));
        CHECK(std::fabs(after - before) <= 1.0 / 200);
    }
}

TEST_CASE("DKW: few large KS values among independent samples") {
    int exceed = 0;
    for (int s = 0; s < 50; ++s) {
        if (stats::ks_distance_to_std_normal(Sample(gaussian(1000 + s, 10000))) > 1.36 / 100.0 * 1.5) {
            ++exceed;
        }
    }
    CHECK(exceed <= 1);
}

TEST_CASE("summarize") {
    const auto a = stats::summarize(Sample({1, 2, 3}));
    CHECK(a.mean == 2.0);
    REQUIRE(a.variance.has_value());
    CHECK(*a.variance == 1.0);
    CHECK(a.quantile(0.5) == 2.0);
    CHECK(a.quantile(0.25) == 1.5);

    const auto b = stats::summarize(Sample({-1, 1}));
    CHECK(b.mean == 0.0);
    CHECK(*b.variance == 2.0);

    const auto c = stats::summarize(Sample({5}));
    CHECK(c.mean == 5.0);
    CHECK_FALSE(c.variance.has_value());
    CHECK_THROWS_AS(stats::summarize(Sample()), InputError);
}

TEST_CASE("quantile, linear interpolation between order statistics") {
    const Sample s({10, 20, 30, 40});
    CHECK(stats::quantile(s, 0.0) == 10);
    CHECK(stats::quantile(s, 1.0) == 40);
    CHECK(std::fabs(stats::quantile(s, 0.5) - 25) < 1e-12);
    CHECK(std::fabs(stats::quantile(s, 0.1) - 13) < 1e-12);
    CHECK_THROWS(stats::quantile(s, 1.5));
    CHECK_THROWS(stats::quantile(Sample(), 0.5));
}

TEST_CASE("log-gamma moments of ln Gamma(51, 1/2)") {
    RngStream rng(31, 5);
    std::vector<double> v(100000);
    for (auto& x : v) {
        x = std::log(sampling::sample_gamma(51.0, 0.5, rng));
    }
    const auto s = stats::summarize(Sample(v));
    const double mean = specfun::digamma(51.0) + std::numbers::ln2;
    CHECK(std::fabs(mean - 4.6151368539878375064) < 1e-12);
    CHECK(std::fabs(s.mean - mean) <= 4 * std::sqrt(specfun::trigamma(51.0) / 1e5));
    CHECK(std::fabs(*s.variance / specfun::trigamma(51.0) - 1) <= 0.05);
}
