// Empirical verification: replays the structural lemmas, bounds and extremal
// values on generated and enumerated instances, producing machine-readable
// reports.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "suncat/families.hpp"
#include "suncat/saturating.hpp"
#include "suncat/supercard.hpp"

namespace suncat {

struct Failure {
    std::string graph6;
    std::string params;
    bool operator<(const Failure& o) const {
        return std::pair(graph6, params) < std::pair(o.graph6, o.params);
    }
};

struct CheckReport {
    std::string check_id;
    std::size_t instances = 0;
    std::size_t passes = 0;
    std::size_t hypothesis_not_met = 0;
    std::vector<Failure> failures;

    void record_pass() { ++instances, ++passes; }
    void record_hnm() { ++instances, ++hypothesis_not_met; }
    void record_failure(std::string graph6, std::string params) {
        ++instances;
        failures.push_back({std::move(graph6), std::move(params)});
    }
    void check(bool ok, const std::string& graph6, const std::string& params) {
        if (ok)
            record_pass();
        else
            record_failure(graph6, params);
    }
    void merge(const CheckReport& other);
    bool consistent() const { return passes + hypothesis_not_met + failures.size() == instances; }
    nlohmann::json to_json() const;
};

// Computed b(U, T) of each generated structure instance against the closed
// form; n below 14 or off the congruence is reported as hypothesis_not_met.
CheckReport check_structure_values(const std::map<StructureKind, std::vector<int>>& ns);

// The four bound/identity checks for one supercard: b <= c, b <= 2 chi + 5,
// the square-root bound when B^U != Aut, and the counting identity when Phi
// exists.
CheckReport check_bounds(const SunshineSupercard& sc);

// Per-element replay of the classification lemmas on an optimum saturating set.
CheckReport check_lemma_replays(const SunshineSupercard& sc);

struct SweepOptions {
    int b_min = 0;            // pairs below this are still counted, not deep-checked
    int jobs = 1;
    int deep_check_max = 9;   // build supercards and saturating sets up to this order
    std::size_t cap = kEnumerationCap;
};

struct SweepRow {
    int n = 0;
    std::size_t sunshine_count = 0;
    std::size_t caterpillar_count = 0;
    std::size_t pairs = 0;
    std::size_t max_b = 0;
    std::string argmax_u;  // graph6
    std::string argmax_t;
};

struct SweepResult {
    CheckReport report;
    std::vector<SweepRow> table;
    nlohmann::json to_json() const;
    std::string table_tsv() const;
};

// Exhaustive (sunshine, caterpillar) pair sweep per order, with the per-pair
// invariants asserted en route and a max-b table.
SweepResult sweep(int n_from, int n_to, const SweepOptions& opt = {});

}  // namespace suncat
