#ifndef ITDOM_HARNESS_HPP
#define ITDOM_HARNESS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "itdom/digraph.hpp"
#include "itdom/families.hpp"
#include "itdom/gamma.hpp"
#include "itdom/perturbation.hpp"

namespace itdom {

enum class Outcome { holds, violated, not_applicable };
std::string to_string(Outcome o);

/// A digraph under test. Family-built instances carry their spec so that
/// composition checks (joins, coronas) can reconstruct the operands.
struct Instance {
    std::string descriptor;
    Digraph digraph;
    std::shared_ptr<const FamilySpec> spec;

    Instance(std::string desc, Digraph d, std::shared_ptr<const FamilySpec> s = nullptr)
        : descriptor(std::move(desc)), digraph(std::move(d)), spec(std::move(s)) {}
};

/// Lazily computed per-instance quantities, shared across the checks that run
/// on one instance so gamma_I, b_I, etc. are each computed once. The
/// perturbation searches run under a deterministic candidate budget and
/// return nullptr for instances beyond desk scale; checks turn that into a
/// not_applicable verdict with a reason.
class Analysis {
public:
    explicit Analysis(const Digraph& d) : d_(&d) {}

    const Digraph& digraph() const { return *d_; }
    const GammaResult& gamma();
    const DominationResult& gamma_classic();       // may throw guard_error
    bool bondage_defined();
    const PerturbationResult* bondage();           // only when bondage_defined()
    const PerturbationResult* reinforcement();
    const PerturbationResult* creinforcement();    // may throw guard_error

private:
    const Digraph* d_;
    std::optional<GammaResult> gamma_;
    std::optional<DominationResult> gamma_classic_;
    bool bondage_done_ = false, reinforcement_done_ = false, creinforcement_done_ = false;
    std::optional<PerturbationResult> bondage_, reinforcement_, creinforcement_;
};

struct TheoremVerdict {
    std::string check_id;
    std::string instance;
    Outcome outcome = Outcome::not_applicable;
    nlohmann::ordered_json details;
};

struct TheoremCheck {
    std::string id;
    std::string statement;
    TheoremVerdict (*run)(const Instance&, Analysis&);
};

/// One entry per numbered result of the paper sections the harness covers,
/// plus the complete-bipartite gamma_I table. Order is fixed.
const std::vector<TheoremCheck>& theorem_catalog();
const TheoremCheck* find_check(const std::string& id);

TheoremVerdict run_check(const TheoremCheck& check, const Instance& inst, Analysis& cache);
TheoremVerdict run_check(const TheoremCheck& check, const Digraph& d);

struct RandomBatch {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int count = 0;
};

struct CorpusConfig {
    std::vector<int> exhaustive_orders;          // each within the enumeration guard
    std::vector<RandomBatch> random;             // instance i of a batch uses seed + i
    std::vector<std::string> family_catalog;     // FamilySpec texts
    std::vector<std::string> checks;             // empty = whole catalog
    int workers = 1;

    static CorpusConfig from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

/// The spec catalog exercised by default: paths/cycles to order 7, complete
/// digraphs to order 6, complete bipartite digraphs with m <= 5, n <= 6,
/// one-way joins over small paths/cycles/complete digraphs, and coronas over
/// the small catalog pairs.
std::vector<std::string> default_family_catalog();

struct CheckStats {
    std::string id;
    long holds = 0;
    long violated = 0;
    long not_applicable = 0;
    double wall_ms = 0.0;  // shown in the table, never serialized to JSON
};

struct Report {
    CorpusConfig config;
    std::vector<CheckStats> stats;
    std::vector<TheoremVerdict> violations;  // deterministic instance order
    long total_instances = 0;

    long violation_count() const;
    long violation_count_outside(const std::string& excused_id) const;
    bool gate_passed() const;  // no violations outside the thm-3.1 exception

    nlohmann::ordered_json to_json() const;  // byte-stable for a fixed config
    std::string table() const;
};

/// Runs every selected check over the configured corpus. Instances are
/// visited in deterministic order: exhaustive enumerations in ascending
/// bitmask order, then the family catalog in config order, then random
/// batches in config order. A worker pool may evaluate instances
/// concurrently; verdicts are merged back in instance order.
Report run_corpus(const CorpusConfig& config);

}  // namespace itdom

#endif
