#include <doctest.h>

#include <set>

#include "csemi/errors.hpp"
#include "csemi/explorer.hpp"

#include "test_support.hpp"

using namespace csemi;
using namespace csemi::testing;

TEST_CASE("line census reproduces the numerical-semigroup counts") {
    std::vector<std::uint64_t> expected = {1, 1, 2, 4, 7, 12, 23, 39, 67};
    CHECK(count_by_genus(orthant(1), grlex(1), 8).counts == expected);
}

TEST_CASE("plane census prefix") {
    std::vector<std::uint64_t> expected = {1, 2, 7, 23, 71, 210, 638};
    CHECK(count_by_genus(orthant(2), grlex(2), 6).counts == expected);
}

TEST_CASE("census is identical across worker counts and orders") {
    ConePtr c = cone_from({{3, 1}, {1, 2}});
    GenusReport base = count_by_genus(c, grlex(2), 6, {.workers = 1});
    for (int workers : {2, 4, 8}) {
        GenusReport r = count_by_genus(c, grlex(2), 6, {.workers = workers});
        CHECK(r.counts == base.counts);
        CHECK(r.min_edim == base.min_edim);
    }
    for (IntMatrix rows : {IntMatrix{{2, 1}, {1, 7}}, IntMatrix{{3, 2}, {-1, 5}}}) {
        GenusReport r = count_by_genus(c, order_from(rows), 6, {.workers = 2});
        CHECK(r.counts == base.counts);
        CHECK(r.min_edim == base.min_edim);
    }
}

TEST_CASE("min embedding dimension per level, cross-checked by retention") {
    ConePtr c = cone_from({{3, 1}, {1, 2}});
    OrderPtr ord = grlex(2);
    std::vector<std::uint64_t> got = min_edim_by_genus(c, ord, 5);

    KeptTree kept;
    count_by_genus(c, ord, 5, {.keep = true}, &kept);
    std::vector<std::uint64_t> expected(6, UINT64_MAX);
    for (const CSemigroup& s : kept.nodes) {
        std::size_t g = static_cast<std::size_t>(s.genus());
        expected[g] = std::min(expected[g], s.edim());
    }
    CHECK(got == expected);
    CHECK(got[0] == 4); // root embedding dimension
}

TEST_CASE("kept trees have unique gap sets and recoverable parents") {
    ConePtr c = orthant(2);
    OrderPtr ord = grlex(2);
    KeptTree kept;
    GenusReport report = count_by_genus(c, ord, 5, {.keep = true}, &kept);
    std::uint64_t total = 0;
    for (std::uint64_t n : report.counts) total += n;
    CHECK(kept.nodes.size() == total);

    std::set<std::vector<std::vector<std::int64_t>>> seen;
    for (const CSemigroup& s : kept.nodes) {
        std::vector<std::vector<std::int64_t>> key;
        for (const LatticePoint& h : s.gaps()) key.push_back(h.to_vector());
        CHECK(seen.insert(key).second); // no duplicate gap set anywhere
    }
    for (std::size_t i = 0; i < kept.nodes.size(); ++i) {
        if (kept.parent[i] < 0) {
            CHECK(kept.nodes[i].genus() == 0);
            continue;
        }
        const CSemigroup& parent = kept.nodes[static_cast<std::size_t>(kept.parent[i])];
        std::vector<LatticePoint> gaps = kept.nodes[i].gaps();
        gaps.pop_back();
        CHECK(gaps == parent.gaps());
    }
}

TEST_CASE("budget exhaustion flags a partial census") {
    GenusReport r = count_by_genus(orthant(2), grlex(2), 8, {.budget = 10});
    CHECK(r.partial);
    CHECK(r.expansions >= 10);
}

TEST_CASE("random branches are reproducible and genus-increasing") {
    ConePtr c = orthant(2);
    OrderPtr ord = grlex(2);
    BranchReport a = random_branch(c, ord, 15, 42);
    BranchReport b = random_branch(c, ord, 15, 42);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].removed == b.steps[i].removed);
        CHECK(a.steps[i].genus == static_cast<int>(i) + 1);
    }
    CHECK_FALSE(a.truncated);
    CHECK(a.steps.size() == 15);

    BranchReport other = random_branch(c, ord, 15, 43);
    bool differs = other.steps.size() != a.steps.size();
    for (std::size_t i = 0; !differs && i < a.steps.size(); ++i)
        differs = !(a.steps[i].removed == other.steps[i].removed);
    CHECK(differs);
}

TEST_CASE("line walks hold the classical inequality, restarting at leaves") {
    // Numerical-semigroup trees have leaves (all generators below the
    // Frobenius number); the walk restarts until a full-depth branch exists.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        BranchReport r = random_branch(orthant(1), grlex(1), 25, seed);
        CHECK_FALSE(r.truncated);
        CHECK(r.steps.size() == 25);
        for (const BranchStep& step : r.steps) CHECK(step.wilf.holds);
    }
}

TEST_CASE("walks survive orders whose trees contain leaves") {
    // Under this order the plane tree has a genus-7 leaf; the walk is
    // expected to restart past it deterministically.
    OrderPtr ord = order_from({{6, 1}, {-5, -10}});
    BranchReport r = random_branch(orthant(2), ord, 20, 1);
    CHECK_FALSE(r.truncated);
    CHECK(r.steps.size() == 20);
}

TEST_CASE("conjecture scan over the plane prefix") {
    GenusReport report = count_by_genus(orthant(2), grlex(2), 8);
    ConjectureScan scan = conjecture_scan(report);
    for (std::size_t g = 1; g < report.counts.size(); ++g) CHECK(scan.monotone[g]);
    for (std::size_t g = 2; g < report.counts.size(); ++g) CHECK(scan.fibonacci[g]);
    CHECK(*scan.ratio[2] == Rational(7, 2));
    CHECK(*scan.fib_ratio[3] == Rational(9, 23));

    GenusReport tiny;
    tiny.counts = {1, 2};
    CHECK_THROWS_AS(conjecture_scan(tiny), BadParamsError);
}
