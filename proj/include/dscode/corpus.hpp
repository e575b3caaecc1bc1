#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dscode/report.hpp"

namespace dscode {

/// One bundled regression case: a config plus the expected results.
struct CorpusCase {
    std::string name;
    std::string config_text;
    long long n = 0;
    int k = 0;
    long long d = 0;
    std::optional<std::map<long long, long long>> enumerator;  // nonzero weights
    std::optional<bool> griesmer;
    std::optional<bool> distance_optimal;
    std::optional<bool> cm_optimal;
    std::optional<long long> singleton_defect;
    std::optional<bool> locality_certified;
    std::optional<bool> availability_certified;
};

inline const std::vector<CorpusCase>& corpus_cases() {
    static const std::vector<CorpusCase> cases = [] {
        std::vector<CorpusCase> cs;

        cs.push_back({"ternary-griesmer-20-3-13",
                      "p 3\nm 3\nblock {1,2} {3}\nblock {1}\n"
                      "analyze weights griesmer distance_optimal\n",
                      20, 3, 13,
                      std::map<long long, long long>{{13, 12}, {14, 10}, {15, 2}, {17, 2}},
                      true, true, std::nullopt, std::nullopt, std::nullopt, std::nullopt});

        cs.push_back({"ternary-five-weight-56-4-36",
                      "p 3\nm 4\nblock {1,2,3} {3,4}\nblock {1,2} {3,4}\n"
                      "analyze weights griesmer distance_optimal\n",
                      56, 4, 36,
                      std::map<long long, long long>{{36, 16}, {37, 48}, {40, 6}, {42, 8}, {48, 2}},
                      false, true, std::nullopt, std::nullopt, std::nullopt, std::nullopt});

        cs.push_back({"quinary-singleton-lrc-20-3-15",
                      "p 5\nm 3\nblock {1,2} {2,3}\n"
                      "analyze weights griesmer singleton\nlocality 4\ncm_bound 2 4\n",
                      20, 3, 15,
                      std::map<long long, long long>{{15, 16}, {16, 100}, {20, 8}},
                      false, std::nullopt, true, 0, true, std::nullopt});

        cs.push_back({"simplex-3-3",
                      "p 3\nm 3\nblock\nanalyze weights griesmer\nlocality 3\ncm_bound 2 3\n",
                      13, 3, 9, std::map<long long, long long>{{9, 26}}, true, std::nullopt,
                      true, std::nullopt, true, std::nullopt});

        cs.push_back({"simplex-5-3",
                      "p 5\nm 3\nblock\nanalyze griesmer\nlocality 5\ncm_bound 2 5\n",
                      31, 3, 25, std::nullopt, true, std::nullopt, true, std::nullopt, true,
                      std::nullopt});

        cs.push_back({"quinary-availability-50-3-40",
                      "p 5\nm 3\nblock {1,2}\nblock {2,3}\n"
                      "analyze weights griesmer\nlocality 4\navailability 4 2\ncm_bound 2 4\n",
                      50, 3, 40, std::map<long long, long long>{{40, 116}, {45, 8}}, true,
                      std::nullopt, true, std::nullopt, true, true});

        cs.push_back({"ternary-disjoint-8-3-5",
                      "p 3\nm 3\nblock {1,2} {3}\n"
                      "analyze weights griesmer\nlocality 2\ncm_bound 2 2\n",
                      8, 3, 5, std::map<long long, long long>{{5, 16}, {6, 8}, {8, 2}}, true,
                      std::nullopt, true, std::nullopt, true, std::nullopt});

        return cs;
    }();
    return cases;
}

/// Empty result means the report matches the expectations; otherwise a
/// line-per-mismatch diff.
inline std::string compare_case(const CorpusCase& expect, const Report& rep) {
    std::ostringstream diff;
    auto mismatch = [&](const std::string& what, const std::string& want,
                        const std::string& got) {
        diff << "  " << what << ": expected " << want << ", got " << got << '\n';
    };
    if (rep.n != expect.n) mismatch("n", std::to_string(expect.n), std::to_string(rep.n));
    if (rep.k != expect.k) mismatch("k", std::to_string(expect.k), std::to_string(rep.k));
    if (rep.d != expect.d) mismatch("d", std::to_string(expect.d), std::to_string(rep.d));
    if (expect.enumerator) {
        std::map<long long, long long> got;
        if (rep.weights)
            for (const auto& [w, c] : rep.weights->counts)
                if (w > 0) got[w] = c;
        if (got != *expect.enumerator) {
            auto render = [](const std::map<long long, long long>& m) {
                std::ostringstream s;
                s << "1";
                for (const auto& [w, c] : m) s << " + " << c << "z^" << w;
                return s.str();
            };
            mismatch("weight enumerator", render(*expect.enumerator), render(got));
        }
    }
    auto check_flag = [&](const char* what, const std::optional<bool>& want, bool have,
                          bool value) {
        if (!want) return;
        if (!have)
            mismatch(what, want.value() ? "true" : "false", "missing");
        else if (value != *want)
            mismatch(what, *want ? "true" : "false", value ? "true" : "false");
    };
    check_flag("griesmer", expect.griesmer, rep.griesmer.has_value(),
               rep.griesmer && rep.griesmer->is_griesmer);
    check_flag("distance_optimal", expect.distance_optimal, rep.distance_optimal.has_value(),
               rep.distance_optimal && rep.distance_optimal->optimal());
    check_flag("cm_optimal", expect.cm_optimal, rep.cm.has_value(),
               rep.cm && rep.cm->applicable && rep.cm->optimal);
    check_flag("locality", expect.locality_certified, rep.locality.has_value(),
               rep.locality && rep.locality->certified);
    check_flag("availability", expect.availability_certified, rep.availability.has_value(),
               rep.availability && rep.availability->certified);
    if (expect.singleton_defect) {
        if (!rep.singleton_defect)
            mismatch("singleton_defect", std::to_string(*expect.singleton_defect), "missing");
        else if (*rep.singleton_defect != *expect.singleton_defect)
            mismatch("singleton_defect", std::to_string(*expect.singleton_defect),
                     std::to_string(*rep.singleton_defect));
    }
    return diff.str();
}

struct CorpusOutcome {
    int ran = 0;
    int failed = 0;
    std::string output;
};

inline CorpusOutcome run_corpus(const std::string& filter = "") {
    CorpusOutcome out;
    std::ostringstream os;
    for (const auto& c : corpus_cases()) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        ++out.ran;
        const Report rep = run(parse_config(c.config_text));
        const std::string diff = compare_case(c, rep);
        if (diff.empty()) {
            os << "PASS " << c.name << " [" << rep.n << "," << rep.k << "," << rep.d << "]\n";
        } else {
            ++out.failed;
            os << "FAIL " << c.name << "\n" << diff;
        }
    }
    out.output = os.str();
    return out;
}

}  // namespace dscode
