#include "csemi/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "csemi/errors.hpp"

namespace csemi {

namespace {

struct LevelStats {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> min_edim;

    explicit LevelStats(int gmax)
        : counts(static_cast<std::size_t>(gmax + 1), 0),
          min_edim(static_cast<std::size_t>(gmax + 1), UINT64_MAX) {}

    void visit(int genus, std::uint64_t edim) {
        std::size_t g = static_cast<std::size_t>(genus);
        ++counts[g];
        if (edim < min_edim[g]) min_edim[g] = edim;
    }

    void merge(const LevelStats& o) {
        for (std::size_t g = 0; g < counts.size(); ++g) {
            counts[g] += o.counts[g];
            if (o.min_edim[g] < min_edim[g]) min_edim[g] = o.min_edim[g];
        }
    }
};

struct Budget {
    std::atomic<std::uint64_t> used{0};
    std::uint64_t limit;
    std::atomic<bool> exhausted{false};

    explicit Budget(std::uint64_t l) : limit(l) {}

    // One expansion; false when the budget is gone.
    bool charge() {
        if (used.fetch_add(1, std::memory_order_relaxed) >= limit) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

void dfs_count(const CSemigroup& node, int depth, int gmax, LevelStats& stats, Budget& budget) {
    stats.visit(depth, node.edim());
    if (depth == gmax) return;
    if (!budget.charge()) return;
    int n = node.eligible_count();
    for (int k = 0; k < n; ++k) {
        if (budget.exhausted.load(std::memory_order_relaxed)) return;
        dfs_count(node.effective_son(k), depth + 1, gmax, stats, budget);
    }
}

GenusReport explore_keep(const CSemigroup& root, int gmax, const ExploreOptions& opts,
                         KeptTree& kept) {
    GenusReport report;
    LevelStats stats(gmax);
    Budget budget(opts.budget);
    kept.nodes.clear();
    kept.parent.clear();
    kept.nodes.push_back(root);
    kept.parent.push_back(-1);
    stats.visit(0, root.edim());
    // Breadth-first with retention; genus of nodes[i] tracked implicitly via
    // gap count. Sons are materialized before any push_back can reallocate
    // the node vector.
    for (std::size_t i = 0; i < kept.nodes.size(); ++i) {
        int depth = static_cast<int>(kept.nodes[i].genus());
        if (depth == gmax) continue;
        if (!budget.charge()) {
            report.partial = true;
            break;
        }
        std::vector<CSemigroup> sons = kept.nodes[i].effective_sons();
        for (CSemigroup& son : sons) {
            stats.visit(depth + 1, son.edim());
            kept.nodes.push_back(std::move(son));
            kept.parent.push_back(static_cast<std::int64_t>(i));
        }
    }
    report.counts = std::move(stats.counts);
    report.min_edim = std::move(stats.min_edim);
    report.expansions = budget.used.load();
    report.partial = report.partial || budget.exhausted.load();
    return report;
}

} // namespace

GenusReport count_by_genus(ConePtr cone, OrderPtr order, int gmax, const ExploreOptions& opts,
                           KeptTree* kept) {
    if (gmax < 0) throw BadParamsError("max genus must be nonnegative");
    CSemigroup root = CSemigroup::root(std::move(cone), std::move(order));

    if (kept || opts.keep) {
        KeptTree local;
        return explore_keep(root, gmax, opts, kept ? *kept : local);
    }

    int workers = opts.workers > 0 ? opts.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    LevelStats stats(gmax);
    Budget budget(opts.budget);
    GenusReport report;

    // Grow a frontier breadth-first until there is enough independent work,
    // then let workers drain it depth-first. Counters merge by addition, so
    // the result does not depend on the schedule.
    std::vector<CSemigroup> frontier{root};
    int frontier_depth = 0;
    stats.visit(0, root.edim());
    const std::size_t target = static_cast<std::size_t>(workers) * 16;
    while (frontier_depth < gmax && frontier.size() < target && !frontier.empty()) {
        std::vector<CSemigroup> next;
        next.reserve(frontier.size() * 3);
        for (const CSemigroup& node : frontier) {
            if (!budget.charge()) break;
            int n = node.eligible_count();
            for (int k = 0; k < n; ++k) {
                CSemigroup son = node.effective_son(k);
                stats.visit(frontier_depth + 1, son.edim());
                next.push_back(std::move(son));
            }
        }
        if (budget.exhausted.load()) break;
        frontier = std::move(next);
        ++frontier_depth;
    }

    if (!budget.exhausted.load() && frontier_depth < gmax && !frontier.empty()) {
        if (workers == 1 || frontier.size() < 2) {
            for (const CSemigroup& node : frontier) {
                if (budget.exhausted.load()) break;
                if (!budget.charge()) break;
                int n = node.eligible_count();
                for (int k = 0; k < n; ++k)
                    dfs_count(node.effective_son(k), frontier_depth + 1, gmax, stats, budget);
            }
        } else {
            std::atomic<std::size_t> next_task{0};
            std::mutex merge_mutex;
            auto work = [&]() {
                LevelStats local(gmax);
                while (true) {
                    std::size_t i = next_task.fetch_add(1);
                    if (i >= frontier.size() || budget.exhausted.load()) break;
                    const CSemigroup& node = frontier[i];
                    if (!budget.charge()) break;
                    int n = node.eligible_count();
                    for (int k = 0; k < n; ++k)
                        dfs_count(node.effective_son(k), frontier_depth + 1, gmax, local, budget);
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                stats.merge(local);
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (std::thread& t : pool) t.join();
        }
    }

    report.counts = std::move(stats.counts);
    report.min_edim = std::move(stats.min_edim);
    report.expansions = budget.used.load();
    report.partial = budget.exhausted.load();
    return report;
}

std::vector<std::uint64_t> min_edim_by_genus(ConePtr cone, OrderPtr order, int gmax,
                                             const ExploreOptions& opts) {
    return count_by_genus(std::move(cone), std::move(order), gmax, opts).min_edim;
}

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

} // namespace

BranchReport random_branch(ConePtr cone, OrderPtr order, int gmax, std::uint64_t seed) {
    if (gmax < 1) throw BadParamsError("random branch needs max genus >= 1");
    constexpr std::uint64_t kMaxRestarts = 1000;

    BranchReport report;
    report.order_rows = order->rows();
    report.seed = seed;

    std::mt19937_64 rng(seed);
    CSemigroup root = CSemigroup::root(cone, order);

    // Find a full-depth branch first; the Wilf evaluation below is the
    // expensive part and runs only on the surviving chain.
    std::vector<CSemigroup> chain;
    std::vector<CSemigroup> best;
    while (true) {
        chain.clear();
        CSemigroup node = root;
        for (int g = 1; g <= gmax; ++g) {
            int n = node.eligible_count();
            if (n == 0) break;
            int pick = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
            node = node.effective_son(pick);
            chain.push_back(node);
        }
        if (static_cast<int>(chain.size()) == gmax) break;
        if (chain.size() > best.size()) best = chain;
        if (++report.restarts >= kMaxRestarts) {
            report.truncated = true;
            chain = std::move(best);
            break;
        }
    }

    PrecedingCounter cache(cone, order);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        BranchStep step;
        step.genus = static_cast<int>(i) + 1;
        step.removed = chain[i].frobenius();
        step.wilf = chain[i].wilf_check(&cache);
        report.steps.push_back(std::move(step));
    }
    return report;
}

ConjectureScan conjecture_scan(const GenusReport& report) {
    const std::vector<std::uint64_t>& n = report.counts;
    if (n.size() < 3) throw BadParamsError("conjecture scan needs at least three levels");
    ConjectureScan scan;
    std::size_t levels = n.size();
    scan.monotone.assign(levels, false);
    scan.fibonacci.assign(levels, false);
    scan.ratio.assign(levels, std::nullopt);
    scan.fib_ratio.assign(levels, std::nullopt);
    for (std::size_t g = 1; g < levels; ++g) {
        scan.monotone[g] = n[g] >= n[g - 1];
        scan.ratio[g] = Rational(static_cast<std::int64_t>(n[g]), static_cast<std::int64_t>(n[g - 1]));
        if (g >= 2) {
            scan.fibonacci[g] = n[g] >= n[g - 1] + n[g - 2];
            scan.fib_ratio[g] = Rational(static_cast<std::int64_t>(n[g - 1] + n[g - 2]),
                                         static_cast<std::int64_t>(n[g]));
        }
    }
    return scan;
}

} // namespace csemi
