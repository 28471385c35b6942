#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csemi/rational.hpp"
#include "csemi/semigroup.hpp"

namespace csemi {

struct ExploreOptions {
    int workers = 0;                      ///< 0 = hardware concurrency
    std::uint64_t budget = 100'000'000;   ///< node-expansion budget
    bool keep = false;                    ///< retain every node (serial run)
};

/// Exact per-genus census of the tree below a cone.
struct GenusReport {
    std::vector<std::uint64_t> counts;    ///< counts[g] = number of semigroups of genus g
    std::vector<std::uint64_t> min_edim;  ///< min embedding dimension per genus
    bool partial = false;                 ///< budget ran out; counts are a lower bound
    std::uint64_t expansions = 0;
};

/// Retained tree nodes (only with ExploreOptions::keep); parent[i] indexes
/// nodes, -1 for the root.
struct KeptTree {
    std::vector<CSemigroup> nodes;
    std::vector<std::int64_t> parent;
};

/// Count tree nodes per genus 0..gmax. Child generation goes exclusively
/// through effective sons; per-level counters are combined by addition, so
/// results are identical for every worker count and schedule.
GenusReport count_by_genus(ConePtr cone, OrderPtr order, int gmax,
                           const ExploreOptions& opts = {}, KeptTree* kept = nullptr);

/// Minimum embedding dimension over each tree level 0..gmax.
std::vector<std::uint64_t> min_edim_by_genus(ConePtr cone, OrderPtr order, int gmax,
                                             const ExploreOptions& opts = {});

/// One step of a seeded random walk down the tree.
struct BranchStep {
    int genus;
    LatticePoint removed;
    WilfRecord wilf;
};

struct BranchReport {
    std::vector<BranchStep> steps;
    IntMatrix order_rows;
    std::uint64_t seed = 0;
    /// Dead ends hit before a full-depth branch was found. Trees do have
    /// leaves (nodes whose generators all precede the Frobenius element);
    /// a walk that runs into one restarts from the root.
    std::uint64_t restarts = 0;
    /// True only when the restart cap was exhausted; steps then hold the
    /// longest attempt.
    bool truncated = false;
};

/// Walk from the root to genus gmax, choosing one effective son uniformly at
/// random at each step (deterministic for a fixed seed), evaluating the Wilf
/// record at every step under the supplied order. A walk that reaches a
/// leaf restarts from the root with the same random stream, mirroring
/// resampling until a genus-gmax subsemigroup is found.
BranchReport random_branch(ConePtr cone, OrderPtr order, int gmax, std::uint64_t seed);

/// Growth diagnostics on a computed census.
struct ConjectureScan {
    /// flags, index = genus: n_g >= n_{g-1} (valid from genus 1)
    std::vector<bool> monotone;
    /// n_g >= n_{g-1} + n_{g-2} (valid from genus 2)
    std::vector<bool> fibonacci;
    /// n_g / n_{g-1} (from genus 1)
    std::vector<std::optional<Rational>> ratio;
    /// (n_{g-1} + n_{g-2}) / n_g (from genus 2)
    std::vector<std::optional<Rational>> fib_ratio;
};

/// Requires at least three computed levels.
ConjectureScan conjecture_scan(const GenusReport& report);

} // namespace csemi
