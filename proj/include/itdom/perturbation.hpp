#ifndef ITDOM_PERTURBATION_HPP
#define ITDOM_PERTURBATION_HPP

#include <array>
#include <optional>
#include <vector>

#include "itdom/digraph.hpp"
#include "itdom/gamma.hpp"

namespace itdom {

enum class PerturbationKind { bondage, reinforcement, classical_reinforcement };

struct PerturbationResult {
    PerturbationKind kind = PerturbationKind::bondage;
    int value = 0;
    std::vector<Arc> witness;  // lexicographically first qualifying arc set
    int base_gamma = 0;
    int perturbed_gamma = 0;
};

enum class BoundSource { path2_bound, gamma_delta_bound, reinforcement_degree_bound };

struct BoundCertificate {
    BoundSource source = BoundSource::path2_bound;
    int value = 0;
    std::optional<std::array<int, 3>> witness_vertices;  // (x, y, z) for the path bound
};

/// Minimum over 2-paths xyz of G[D] with arcs yx and yz of
/// deg(x) + deg^-(y) + deg(z) - |N^-(x) & N^-(y) & N^-(z)|, less one more
/// when x and z are adjacent in G[D]. Absent when no vertex has two
/// out-neighbors.
std::optional<BoundCertificate> bondage_upper_bound_path2(const Digraph& d);

/// (gamma_I(D) - 1) * Delta(G[D]); needs order >= 3 and connected G[D].
std::optional<BoundCertificate> bondage_upper_bound_gamma_delta(const Digraph& d);

/// n - Delta^+(D) - gamma_I(D) + 2; needs gamma_I(D) >= 3.
std::optional<BoundCertificate> reinforcement_upper_bound(const Digraph& d);

/// Exact b_I: smallest k such that removing some k arcs raises gamma_I.
/// Ascending-k scan, lexicographic subsets, first hit wins. Throws
/// undefined_error when gamma_I(D) = n (removal can never raise gamma_I
/// past n, so no arc set qualifies).
PerturbationResult italian_bondage(const Digraph& d);

/// Exact r_I: smallest k such that adding some k complement arcs lowers
/// gamma_I; 0 by convention when gamma_I(D) <= 2. Always defined.
PerturbationResult italian_reinforcement(const Digraph& d);

/// Exact classical r: smallest k such that adding some k complement arcs
/// lowers gamma; 0 when gamma(D) = 1 by the same convention.
PerturbationResult classical_reinforcement(const Digraph& d);

/// Budgeted variants for corpus runs: identical results, but give up and
/// return nullopt once `max_candidates` perturbed-gamma decisions have been
/// spent. The budget is deterministic (a subset count, not wall time).
std::optional<PerturbationResult> italian_bondage_within(const Digraph& d, long max_candidates);
std::optional<PerturbationResult> italian_reinforcement_within(const Digraph& d, long max_candidates);
std::optional<PerturbationResult> classical_reinforcement_within(const Digraph& d, long max_candidates);

/// The r_I(D) = 1 characterization: some minimum IDF f = (V_0, V_1, V_2) has
/// a vertex v in V_1 such that every x in N^+(v) with f(x) = 0 keeps
/// f(N^-(x) - v) >= 2, and either
///   (i)  f(N^-(v)) = 1, or
///   (ii) f(N^-(v)) = 0 and V_2 is nonempty.
/// Requires gamma_I(D) >= 3 and order within the min-IDF guard.
bool check_ri_one_characterization(const Digraph& d);

struct IrsWitnessVerdict {
    bool gamma_drop_ok = false;  // gamma_I(D + F) = gamma_I(D) - 1
    bool arc_labels_ok = false;  // every min IDF of D + F has tail != 0, head = 0 on F
    int base_gamma = 0;
    int perturbed_gamma = 0;

    bool ok() const { return gamma_drop_ok && arc_labels_ok; }
};

/// Validates a minimum Italian reinforcement set F of D (gamma_I(D) >= 3).
IrsWitnessVerdict validate_irs_witness(const Digraph& d, const std::vector<Arc>& irs);

}  // namespace itdom

#endif
