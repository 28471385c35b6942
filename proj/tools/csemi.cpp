// csemi: exact exploration of affine semigroups inside rational cones.
//
// Subcommands: hilbert, count, min-edim, wilf-walk, family, show.
// Payloads go to stdout (or --out); runtime metadata goes to stderr.
//
// Exit codes: 0 success, 2 bad input, 3 a walk step violated the Wilf
// inequality, 4 node budget exhausted (partial output emitted), 5 audit
// mismatch.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csemi/errors.hpp"
#include "csemi/families.hpp"
#include "csemi/hilbert.hpp"
#include "csemi/io.hpp"
#include "csemi/oracle.hpp"

namespace {

using namespace csemi;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitWilfCounterexample = 3;
constexpr int kExitBudget = 4;
constexpr int kExitAuditMismatch = 5;

struct CommonFlags {
    std::string rays;
    std::string order = "grlex";
    std::string format = "csv";
    std::string out;
};

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file '" + out_path + "'");
        f << payload;
    }
}

ConePtr make_cone(const std::string& rays_text) {
    return std::make_shared<const Cone>(Cone::from_rays(parse_point_list(rays_text)));
}

OrderPtr make_order(const std::string& order_text, int dim) {
    return std::make_shared<const MatrixOrder>(parse_order(order_text, dim));
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            seeds.push_back(std::stoull(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) seeds.push_back(std::stoull(cur));
    if (seeds.empty()) throw ParseError("no seeds given");
    return seeds;
}

/// Orders for a walk: "random:k" derives k admissible orders per seed
/// (order j of walk seed s uses random-order seed s*1000003 + j), anything
/// else is a fixed matrix spec applied to every seed.
std::vector<OrderPtr> walk_orders(const std::string& spec, int dim, std::uint64_t walk_seed) {
    std::vector<OrderPtr> orders;
    if (spec.rfind("random:", 0) == 0) {
        int k = std::stoi(spec.substr(7));
        if (k < 1) throw ParseError("random order count must be positive");
        for (int j = 0; j < k; ++j)
            orders.push_back(std::make_shared<const MatrixOrder>(
                MatrixOrder::random(dim, walk_seed * 1000003ULL + static_cast<std::uint64_t>(j))));
    } else {
        orders.push_back(make_order(spec, dim));
    }
    return orders;
}

int run_count(const CommonFlags& flags, int gmax, int workers, std::uint64_t budget, bool keep,
              bool audit, bool min_edim_mode) {
    ConePtr cone = make_cone(flags.rays);
    OrderPtr order = make_order(flags.order, cone->dim());

    ExploreOptions opts;
    opts.workers = workers;
    opts.budget = budget;
    opts.keep = keep;

    auto t0 = std::chrono::steady_clock::now();
    KeptTree kept;
    GenusReport report = count_by_genus(cone, order, gmax, opts, keep ? &kept : nullptr);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "explored " << report.expansions << " expansions in " << elapsed << "s\n";

    if (keep) {
        // Retention enables the duplicate audit: distinct tree nodes must
        // have distinct gap sets.
        std::vector<std::string> keys;
        keys.reserve(kept.nodes.size());
        for (const CSemigroup& s : kept.nodes) {
            std::string k;
            for (const LatticePoint& h : s.gaps()) k += h.to_string();
            keys.push_back(std::move(k));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            std::cerr << "audit failure: duplicate gap sets in the tree\n";
            return kExitAuditMismatch;
        }
        std::cerr << "uniqueness audit passed on " << kept.nodes.size() << " nodes\n";
    }

    if (audit) {
        std::vector<std::uint64_t> naive = oracle::naive_tree_count(*cone, *order, gmax);
        if (naive != report.counts) {
            std::cerr << "audit failure: naive tree census disagrees\n";
            return kExitAuditMismatch;
        }
        std::cerr << "census audit passed\n";
    }

    std::string payload;
    if (min_edim_mode) {
        if (flags.format == "json") {
            nlohmann::ordered_json j = genus_report_json(*cone, *order, report);
            payload = j.dump(2);
        } else {
            std::string csv = "genus,min_edim\n";
            for (std::size_t g = 0; g < report.min_edim.size(); ++g) {
                csv += std::to_string(g) + ",";
                if (report.min_edim[g] != UINT64_MAX) csv += std::to_string(report.min_edim[g]);
                csv += "\n";
            }
            payload = csv;
        }
    } else if (flags.format == "json") {
        payload = genus_report_json(*cone, *order, report).dump(2);
    } else {
        payload = genus_report_csv(report);
    }
    emit(payload, flags.out);
    return report.partial ? kExitBudget : kExitOk;
}

int run_wilf_walk(const CommonFlags& flags, int gmax, const std::string& seeds_text,
                  const std::string& orders_spec) {
    ConePtr cone = make_cone(flags.rays);
    std::vector<BranchReport> reports;
    bool all_hold = true;
    for (std::uint64_t seed : parse_seeds(seeds_text)) {
        for (const OrderPtr& order : walk_orders(orders_spec, cone->dim(), seed)) {
            BranchReport r = random_branch(cone, order, gmax, seed);
            for (const BranchStep& step : r.steps) all_hold &= step.wilf.holds;
            reports.push_back(std::move(r));
        }
    }
    std::string payload = flags.format == "json"
                              ? branch_report_json(*cone, reports).dump(2)
                              : branch_report_csv(reports);
    emit(payload, flags.out);
    return all_hold ? kExitOk : kExitWilfCounterexample;
}

struct FamilyFlags {
    std::string variant;
    int p = 2;
    std::int64_t h = 1;
    int i = 1;
    int k = 2;
    std::int64_t q = 1;
    int j = 1;
    std::int64_t lambda1 = 2;
    std::int64_t lambda2 = 3;
    std::string q_list;
    std::int64_t a = 0;
    std::int64_t b = 1;
};

int run_family(const CommonFlags& flags, const FamilyFlags& fam) {
    // Closed-form constructor output, then the same semigroup recomputed
    // from its gap set through the incremental machinery.
    CSemigroup built = [&]() -> CSemigroup {
        if (fam.variant == "easy2p") {
            OrderPtr ord = make_order(flags.order, fam.p);
            return build_easy_2p(fam.p, fam.h, fam.i, fam.k, ord);
        }
        if (fam.variant == "axis-gaps") {
            OrderPtr ord = make_order(flags.order, fam.p);
            return build_axis_gaps(fam.p, fam.q, fam.j, ord);
        }
        if (fam.variant == "two-gen-box") {
            OrderPtr ord = make_order(flags.order, fam.p);
            std::vector<std::int64_t> q;
            for (const LatticePoint& pt : parse_point_list(fam.q_list)) {
                if (pt.dim() != 1) throw ParseError("--q-list takes scalars like \"2;3\"");
                q.push_back(pt[0]);
            }
            return build_two_gen_box(fam.p, fam.lambda1, fam.lambda2, q, ord);
        }
        if (fam.variant == "cone-strip") {
            OrderPtr ord = make_order(flags.order, 2);
            return build_cone_strip(fam.a, fam.b, ord);
        }
        if (fam.variant == "two-gen") {
            OrderPtr ord = make_order(flags.order, 1);
            return build_two_gen_numerical(fam.a, fam.b, ord);
        }
        if (fam.variant == "interval") {
            OrderPtr ord = make_order(flags.order, 1);
            return build_interval(fam.b, ord);
        }
        throw ParseError("unknown family variant '" + fam.variant + "'");
    }();

    CSemigroup recomputed =
        CSemigroup::from_gaps(built.cone_ptr(), built.order_ptr(), built.gaps());

    nlohmann::ordered_json j;
    j["family"] = fam.variant;
    j["semigroup"] = semigroup_to_json(built);
    nlohmann::ordered_json closed, computed;
    closed["edim"] = built.edim();
    closed["genus"] = built.genus();
    closed["frobenius"] =
        built.genus() ? nlohmann::ordered_json(built.frobenius().to_vector()) : nullptr;
    computed["edim"] = recomputed.edim();
    computed["genus"] = recomputed.genus();
    computed["frobenius"] =
        recomputed.genus() ? nlohmann::ordered_json(recomputed.frobenius().to_vector()) : nullptr;
    j["closed_form"] = closed;
    j["computed"] = computed;
    j["match"] = built.gens() == recomputed.gens() && built.gaps() == recomputed.gaps();
    emit(j.dump(2), flags.out);
    return j["match"].get<bool>() ? kExitOk : kExitAuditMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of affine semigroups inside rational cones"};
    app.require_subcommand(1);

    CommonFlags flags;
    int gmax = 5;
    int workers = 0;
    std::uint64_t budget = 100'000'000ULL;
    bool keep = false;
    bool audit = false;
    std::string seeds = "1";
    std::string orders_spec = "grlex";
    std::string gaps_text;
    FamilyFlags fam;

    auto add_common = [&](CLI::App* cmd, bool with_rays = true) {
        if (with_rays)
            cmd->add_option("--rays", flags.rays, "Rays as \"a1,a2;b1,b2\"")->required();
        cmd->add_option("--order", flags.order, "Order matrix \"r11,r12;r21,r22\" or \"grlex\"");
        cmd->add_option("--format", flags.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", flags.out, "Write the payload to a file instead of stdout");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "Minimal generating set of the cone monoid");
    add_common(hilbert);

    CLI::App* count = app.add_subcommand("count", "Count semigroups per genus");
    add_common(count);
    count->add_option("--max-genus", gmax, "Deepest tree level")->required();
    count->add_option("--workers", workers, "Worker threads (0 = all cores)");
    count->add_option("--budget", budget, "Node expansion budget");
    count->add_flag("--keep", keep, "Retain nodes and audit gap-set uniqueness");
    count->add_flag("--audit", audit, "Cross-check with the brute-force census");

    CLI::App* min_edim = app.add_subcommand("min-edim", "Minimal embedding dimension per genus");
    add_common(min_edim);
    min_edim->add_option("--max-genus", gmax, "Deepest tree level")->required();
    min_edim->add_option("--workers", workers, "Worker threads (0 = all cores)");
    min_edim->add_option("--budget", budget, "Node expansion budget");

    CLI::App* walk = app.add_subcommand("wilf-walk", "Random branches with Wilf checks");
    add_common(walk);
    walk->add_option("--max-genus", gmax, "Walk depth")->required();
    walk->add_option("--seeds", seeds, "Comma-separated walk seeds");
    walk->add_option("--orders", orders_spec, "\"random:k\" or an explicit matrix");

    CLI::App* family = app.add_subcommand("family", "Closed-form family constructors");
    family->add_option("variant", fam.variant,
                       "easy2p | axis-gaps | two-gen-box | cone-strip | two-gen | interval")
        ->required();
    add_common(family, /*with_rays=*/false);
    family->add_option("--dim", fam.p, "Ambient dimension p");
    family->add_option("--chain", fam.h, "Gap-chain length h (easy2p)");
    family->add_option("--axis-i", fam.i, "Removed axis, 1-based (easy2p)");
    family->add_option("--axis-k", fam.k, "Chain direction, 1-based (easy2p)");
    family->add_option("--run", fam.q, "Axis run length q (axis-gaps)");
    family->add_option("--axis-j", fam.j, "Gap axis, 1-based (axis-gaps)");
    family->add_option("--lambda1", fam.lambda1, "First numerical generator (two-gen-box)");
    family->add_option("--lambda2", fam.lambda2, "Second numerical generator (two-gen-box)");
    family->add_option("--q-list", fam.q_list, "Box bounds \"q2;q3;...\" (two-gen-box)");
    family->add_option("--a", fam.a, "Parameter a (cone-strip, two-gen)");
    family->add_option("--b", fam.b, "Parameter b (cone-strip, two-gen, interval)");

    CLI::App* show = app.add_subcommand("show", "Reconstruct a semigroup from rays and gaps");
    add_common(show);
    show->add_option("--gaps", gaps_text, "Gap points as \"a1,a2;b1,b2\" (empty = root)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (hilbert->parsed()) {
            ConePtr cone = make_cone(flags.rays);
            OrderPtr order = make_order(flags.order, cone->dim());
            std::vector<LatticePoint> basis = hilbert_basis(*cone);
            std::sort(basis.begin(), basis.end(),
                      [&](const LatticePoint& a, const LatticePoint& b) {
                          return order->less(a, b);
                      });
            if (flags.format == "json") {
                nlohmann::ordered_json j;
                j["rays"] = nlohmann::json::array();
                for (const LatticePoint& r : cone->rays()) j["rays"].push_back(r.to_vector());
                j["basis"] = nlohmann::json::array();
                for (const LatticePoint& b : basis) j["basis"].push_back(b.to_vector());
                j["size"] = basis.size();
                emit(j.dump(2), flags.out);
            } else {
                std::string text;
                for (const LatticePoint& b : basis) text += b.to_string() + "\n";
                text += "size " + std::to_string(basis.size()) + "\n";
                emit(text, flags.out);
            }
            return kExitOk;
        }
        if (count->parsed())
            return run_count(flags, gmax, workers, budget, keep, audit, /*min_edim=*/false);
        if (min_edim->parsed())
            return run_count(flags, gmax, workers, budget, /*keep=*/false, /*audit=*/false,
                             /*min_edim=*/true);
        if (walk->parsed()) return run_wilf_walk(flags, gmax, seeds, orders_spec);
        if (family->parsed()) return run_family(flags, fam);
        if (show->parsed()) {
            ConePtr cone = make_cone(flags.rays);
            OrderPtr order = make_order(flags.order, cone->dim());
            std::vector<LatticePoint> gaps;
            if (!gaps_text.empty()) gaps = parse_point_list(gaps_text);
            CSemigroup s = CSemigroup::from_gaps(cone, order, std::move(gaps));
            emit(semigroup_to_json(s).dump(2), flags.out);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
