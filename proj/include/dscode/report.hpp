#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "dscode/bounds.hpp"
#include "dscode/config.hpp"
#include "dscode/locality.hpp"
#include "dscode/matrix_io.hpp"

namespace dscode {

struct DistanceOptimalityResult {
    bool sufficient_condition = false;  // p-adic statistics route
    bool by_griesmer = false;           // direct Griesmer-sum route
    bool optimal() const { return sufficient_condition || by_griesmer; }
};

/// Everything one job produces. Deterministic apart from stage timings.
struct Report {
    JobConfig config;
    long long n = 0;
    int k = 0;
    long long d = 0;
    std::vector<int> block_sizes;
    std::vector<std::string> construction_log;
    bool theorem_hypotheses_hold = false;
    bool property_Is = false;

    std::optional<WeightDistribution> weights;
    std::optional<GriesmerCertificate> griesmer;
    std::optional<DistanceOptimalityResult> distance_optimal;
    std::optional<AlphabetOptimalityCertificate> cm;
    std::optional<long long> singleton_defect;
    std::optional<LocalityCertificate> locality;
    std::optional<LocalityCertificate> availability;

    std::vector<std::pair<std::string, long long>> stage_micros;

    /// All requested claims certified positively.
    bool all_positive() const {
        if (griesmer && !griesmer->is_griesmer) return false;
        if (distance_optimal && !distance_optimal->optimal()) return false;
        if (cm && !(cm->applicable && cm->optimal)) return false;
        if (singleton_defect && *singleton_defect != 0) return false;
        if (locality && !locality->certified) return false;
        if (availability && !availability->certified) return false;
        return true;
    }
};

/// Run a job: build, parameters, then the requested analyses in dependency
/// order. Negative certificates are structured results, not exceptions.
inline Report run(const JobConfig& cfg) {
    using clock = std::chrono::steady_clock;
    Report rep;
    rep.config = cfg;

    auto timed = [&rep](const std::string& stage, auto&& fn) {
        const auto start = clock::now();
        fn();
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - start).count();
        rep.stage_micros.emplace_back(stage, us);
    };

    const PrimeField field(cfg.p);
    SubsetFamily fam(cfg.m, cfg.blocks);
    std::optional<DefiningCode> built;
    timed("build", [&] { built.emplace(DefiningCode::build(fam, field, cfg.max_pm)); });
    const DefiningCode& code = *built;

    timed("parameters", [&] {
        rep.n = code.n();
        rep.k = code.k();
        rep.d = code.d();
        rep.block_sizes = code.block_sizes();
        rep.construction_log = fam.construction_log();
        rep.theorem_hypotheses_hold = code.theorem_hypotheses_hold();
        rep.property_Is = satisfies_property_Is(fam).satisfied;
    });

    if (cfg.weights)
        timed("weights", [&] { rep.weights = code.weight_distribution(); });
    if (cfg.griesmer)
        timed("griesmer", [&] { rep.griesmer = check_griesmer_iff(fam, code); });
    if (cfg.distance_optimal)
        timed("distance_optimal", [&] {
            DistanceOptimalityResult res;
            res.sufficient_condition =
                fam.ell() > 0 && distance_optimal_sufficient(fam, field);
            res.by_griesmer = distance_optimal_by_griesmer(cfg.p, rep.n, rep.k, rep.d);
            rep.distance_optimal = res;
        });
    if (cfg.locality_delta)
        timed("locality", [&] { rep.locality = certify_locality(code, *cfg.locality_delta); });
    if (cfg.availability)
        timed("availability", [&] {
            rep.availability =
                certify_availability(code, cfg.availability->first, cfg.availability->second);
        });
    if (cfg.cm_bound)
        timed("cm_bound", [&] {
            const bool backed = rep.locality && rep.locality->certified &&
                                rep.locality->delta == cfg.cm_bound->second;
            rep.cm = cm_alphabet_optimal(cfg.p, rep.n, rep.k, rep.d, cfg.cm_bound->first,
                                         cfg.cm_bound->second, backed);
        });
    if (cfg.singleton)
        timed("singleton", [&] {
            const auto [r, delta] =
                cfg.cm_bound ? *cfg.cm_bound
                             : std::pair<int, int>{2, cfg.locality_delta.value_or(2)};
            rep.singleton_defect = singleton_like_defect(rep.n, rep.k, rep.d, r, delta);
        });
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering

using ordered_json = nlohmann::ordered_json;

inline ordered_json config_to_json(const JobConfig& cfg) {
    ordered_json j;
    j["p"] = cfg.p;
    j["m"] = cfg.m;
    ordered_json blocks = ordered_json::array();
    for (const auto& block : cfg.blocks) {
        ordered_json b = ordered_json::array();
        for (const auto& s : block) b.push_back(s);
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    ordered_json analyses = ordered_json::array();
    if (cfg.weights) analyses.push_back("weights");
    if (cfg.griesmer) analyses.push_back("griesmer");
    if (cfg.distance_optimal) analyses.push_back("distance_optimal");
    if (cfg.singleton) analyses.push_back("singleton");
    j["analyses"] = analyses;
    if (cfg.locality_delta) j["locality"] = *cfg.locality_delta;
    if (cfg.availability)
        j["availability"] = {{"delta", cfg.availability->first}, {"t", cfg.availability->second}};
    if (cfg.cm_bound) j["cm_bound"] = {{"r", cfg.cm_bound->first}, {"delta", cfg.cm_bound->second}};
    j["max_pm"] = cfg.max_pm;
    j["max_brute_n"] = cfg.max_brute_n;
    return j;
}

inline ordered_json locality_to_json(const LocalityCertificate& c) {
    ordered_json j;
    j["r"] = c.r;
    j["delta"] = c.delta;
    j["t"] = c.t;
    j["certified"] = c.certified;
    if (c.blocking_coordinate) {
        j["blocking_coordinate"] = *c.blocking_coordinate;
        if (c.t > 1) j["achieved_t"] = c.achieved_t_at_blocking;
    }
    ordered_json wits = ordered_json::array();
    for (const auto& w : c.witnesses) {
        ordered_json sets = ordered_json::array();
        for (const auto& rs : w.repair_sets)
            sets.push_back({{"columns", rs.columns}, {"method", rs.method}});
        wits.push_back({{"column", w.column}, {"repair_sets", sets}});
    }
    j["witnesses"] = wits;
    j["per_coordinate_best_delta"] = c.per_coordinate_best_delta;
    return j;
}

inline ordered_json report_to_json(const Report& rep, bool include_timing = true) {
    ordered_json j;
    j["config"] = config_to_json(rep.config);
    j["code"] = {{"p", rep.config.p},       {"m", rep.config.m},
                 {"s", rep.block_sizes.size()}, {"n", rep.n},
                 {"k", rep.k},              {"d", rep.d},
                 {"block_sizes", rep.block_sizes}};
    j["construction_log"] = rep.construction_log;
    j["theorem_hypotheses_hold"] = rep.theorem_hypotheses_hold;
    j["property_Is"] = rep.property_Is;

    if (rep.weights) {
        ordered_json w = ordered_json::array();
        for (const auto& [wt, count] : rep.weights->counts)
            if (wt > 0) w.push_back({{"weight", wt}, {"count", count}});
        j["weight_distribution"] = w;
    }
    if (rep.griesmer) {
        const auto& g = *rep.griesmer;
        j["griesmer"] = {{"is_griesmer", g.is_griesmer},
                         {"griesmer_sum", g.griesmer_sum_value},
                         {"n", g.n},
                         {"k", g.k},
                         {"d", g.d},
                         {"blocks_disjoint", g.blocks_disjoint},
                         {"M", g.M},
                         {"M_le_p_minus_1", g.M_le_p_minus_1},
                         {"combinatorial_says_griesmer", g.combinatorial_says_griesmer},
                         {"conditional", g.conditional}};
    }
    if (rep.distance_optimal) {
        j["distance_optimal"] = {{"optimal", rep.distance_optimal->optimal()},
                                 {"sufficient_condition", rep.distance_optimal->sufficient_condition},
                                 {"by_griesmer", rep.distance_optimal->by_griesmer}};
    }
    if (rep.cm) {
        const auto& c = *rep.cm;
        j["cm_bound"] = {{"r", c.r},
                         {"delta", c.delta},
                         {"applicable", c.applicable},
                         {"bound", c.bound},
                         {"optimal", c.optimal},
                         {"per_t_bound", c.per_t_bound},
                         {"per_t_method", c.per_t_method},
                         {"locality_backed", c.locality_backed}};
    }
    if (rep.singleton_defect) j["singleton_defect"] = *rep.singleton_defect;
    if (rep.locality) j["locality"] = locality_to_json(*rep.locality);
    if (rep.availability) j["availability"] = locality_to_json(*rep.availability);
    if (include_timing) {
        ordered_json t;
        for (const auto& [stage, us] : rep.stage_micros) t[stage] = us;
        j["timing"] = t;
    }
    return j;
}

inline std::string render_machine(const Report& rep, bool include_timing = true) {
    return report_to_json(rep, include_timing).dump(2) + "\n";
}

inline std::string render_text(const Report& rep) {
    std::ostringstream out;
    out << "code: [" << rep.n << ", " << rep.k << ", " << rep.d << "] over F_" << rep.config.p
        << ", " << rep.block_sizes.size() << " block(s)\n";
    for (const auto& msg : rep.construction_log) out << "note: " << msg << '\n';
    if (!rep.theorem_hypotheses_hold)
        out << "warning: construction hypotheses violated; closed forms not guaranteed\n";
    if (rep.weights) {
        out << "weight enumerator: 1";
        for (const auto& [w, c] : rep.weights->counts)
            if (w > 0) out << " + " << c << "z^" << w;
        out << '\n';
    }
    if (rep.griesmer)
        out << "griesmer: " << (rep.griesmer->is_griesmer ? "yes" : "no") << " (sum "
            << rep.griesmer->griesmer_sum_value << " vs n " << rep.griesmer->n << ", M "
            << rep.griesmer->M << ")\n";
    if (rep.distance_optimal)
        out << "distance-optimal: " << (rep.distance_optimal->optimal() ? "yes" : "no")
            << " (sufficient-condition " << (rep.distance_optimal->sufficient_condition ? "yes" : "no")
            << ", by-griesmer " << (rep.distance_optimal->by_griesmer ? "yes" : "no") << ")\n";
    if (rep.cm) {
        if (!rep.cm->applicable)
            out << "alphabet-optimality: not applicable (empty t range)\n";
        else
            out << "alphabet-optimality (r=" << rep.cm->r << ", delta=" << rep.cm->delta
                << "): bound " << rep.cm->bound << ", k " << rep.k << " => "
                << (rep.cm->optimal ? "optimal" : "not optimal") << '\n';
    }
    if (rep.singleton_defect)
        out << "singleton-like defect: " << *rep.singleton_defect << '\n';
    if (rep.locality)
        out << "locality (2," << rep.locality->delta << "): "
            << (rep.locality->certified ? "certified" : "NOT certified") << '\n';
    if (rep.availability)
        out << "availability (2," << rep.availability->delta << ")_" << rep.availability->t
            << ": " << (rep.availability->certified ? "certified" : "NOT certified") << '\n';
    for (const auto& [stage, us] : rep.stage_micros)
        out << "time: " << stage << ' ' << us << "us\n";
    return out.str();
}

}  // namespace dscode
