#ifndef ARBBLOCK_ORACLE_HPP
#define ARBBLOCK_ORACLE_HPP

#include "arbblock/digraph.hpp"

#include <functional>
#include <optional>
#include <vector>

// Independent brute-force references used by tests and the acceptance suite.
// Deliberately exponential; hard caps fail loudly. Production solvers never
// call into this module.

namespace arbblock::oracle {

struct SubpartitionFilter {
    std::optional<int> exact_size;
    std::optional<int> min_size;
};

// Every subpartition of `ground` exactly once, in canonical order: union
// subsets by ascending bitmask over the sorted members, partitions of each
// subset in restricted-growth-string order. Cap: |ground| <= 8.
std::vector<Subpartition> enum_subpartitions(const NodeSet& ground,
                                             const SubpartitionFilter& filter = {});

struct FrankCheckResult {
    bool holds = true;          // sum rho(X) >= k(|X|-1) for every subpartition
    Subpartition worst;         // maximizer of sum(k - rho(X))
    Rational worst_value = Rational(0);
};

// Evaluates Frank's condition over all subpartitions of V. Cap: n <= 8.
FrankCheckResult brute_frank_check(const Digraph& d, int k);

// Exhaustive search for k arc-disjoint spanning arborescences, optionally all
// rooted at `root`. Caps: n <= 5, arc units <= 16, k <= 3 (the spec's desk
// box n <= 4, units <= 8, k <= 2 sits strictly inside).
bool brute_arborescence_pack(const Digraph& d, int k, std::optional<NodeId> root = std::nullopt);

struct BruteBlockingResult {
    Rational weight = Rational(0);
    ArcSelection removed;
};

// Minimum-weight arc-unit multiset whose removal makes the Frank check (or
// the Edmonds indegree check when `root` is given) fail. Weight per unit is 1
// in unit mode and the record weight in weighted mode. Caps: units <= 12, n <= 5.
BruteBlockingResult brute_min_blocking(const Digraph& d, DegreeMode mode, int k,
                                       std::optional<NodeId> root = std::nullopt);

// Cost-aware rooted variant: enumerates all k-union-r-arborescences, keeps the
// minimum-cost ones (arc costs default 0), and finds a minimum-weight unit
// multiset blocking every one of them. Caps: n <= 5, units <= 18.
BruteBlockingResult brute_min_blocking_opt_rooted(const Digraph& d, int k, NodeId root);

} // namespace arbblock::oracle

#endif
