#include "arbblock/oracle.hpp"

#include "arbblock/errors.hpp"

#include <algorithm>
#include <map>

namespace arbblock::oracle {

namespace {

void check_cap(bool ok, const std::string& what) {
    if (!ok)
        throw capacity_error(what + " — brute-force oracle cap exceeded; use the oracle-free solver paths");
}

// restricted growth strings: a[i] <= 1 + max(a[0..i-1]), lexicographic order
void visit_partitions(const std::vector<NodeId>& members,
                      const std::function<void(const std::vector<int>&, int)>& visit) {
    const int m = static_cast<int>(members.size());
    if (m == 0) {
        visit({}, 0);
        return;
    }
    std::vector<int> rgs(m, 0);
    std::function<void(int, int)> rec = [&](int i, int max_block) {
        if (i == m) {
            visit(rgs, max_block + 1);
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(max_block, b));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
}

} // namespace

std::vector<Subpartition> enum_subpartitions(const NodeSet& ground, const SubpartitionFilter& filter) {
    check_cap(ground.size() <= 8, "enum_subpartitions on " + std::to_string(ground.size()) + " nodes");
    const auto& members = ground.members();
    const int m = static_cast<int>(members.size());
    std::vector<Subpartition> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<NodeId> chosen;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) chosen.push_back(members[i]);
        visit_partitions(chosen, [&](const std::vector<int>& rgs, int blocks) {
            if (filter.exact_size && blocks != *filter.exact_size) return;
            if (filter.min_size && blocks < *filter.min_size) return;
            std::vector<std::vector<NodeId>> groups(blocks);
            for (std::size_t i = 0; i < rgs.size(); ++i) groups[rgs[i]].push_back(chosen[i]);
            Subpartition sp;
            for (auto& g : groups) sp.add_part(NodeSet(std::move(g)));
            out.push_back(std::move(sp));
        });
    }
    return out;
}

FrankCheckResult brute_frank_check(const Digraph& d, int k) {
    check_cap(d.node_count() <= 8, "brute_frank_check on " + std::to_string(d.node_count()) + " nodes");
    FrankCheckResult result;
    for (const Subpartition& sp : enum_subpartitions(NodeSet::full(d.node_count()))) {
        Rational value(0);
        for (const NodeSet& part : sp.parts()) value += Rational(k) - indegree(d, part, DegreeMode::unit);
        if (value > result.worst_value) {
            result.worst_value = value;
            result.worst = sp;
        }
    }
    result.holds = result.worst_value <= Rational(k);
    return result;
}

namespace {

// Spanning arborescence enumeration over residual multiplicities: pick one
// in-arc record per non-root node, keep only choices whose parent pointers
// all walk up to the root.
class PackSearcher {
public:
    PackSearcher(const Digraph& d, std::optional<NodeId> root)
        : d_(d), fixed_root_(root), residual_(d.record_count()) {
        for (int i = 0; i < d.record_count(); ++i) residual_[i] = d.arc(i).multiplicity;
        in_records_.resize(d.node_count());
        for (int i = 0; i < d.record_count(); ++i) in_records_[d.arc(i).head].push_back(i);
    }

    bool packs(int k) {
        if (k == 0) return true;
        auto key = std::pair(residual_, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool found = false;
        if (fixed_root_) {
            found = try_root(*fixed_root_, k);
        } else {
            for (NodeId r = 0; r < d_.node_count() && !found; ++r) found = try_root(r, k);
        }
        memo_.emplace(std::move(key), found);
        return found;
    }

private:
    bool try_root(NodeId root, int k) {
        choice_.assign(d_.node_count(), -1);
        return choose(0, root, k);
    }

    bool choose(NodeId v, NodeId root, int k) {
        if (v == d_.node_count()) return validate_and_recurse(root, k);
        if (v == root) return choose(v + 1, root, k);
        for (int rec : in_records_[v]) {
            if (residual_[rec] == 0) continue;
            choice_[v] = rec;
            residual_[rec] -= 1;
            bool ok = choose(v + 1, root, k);
            residual_[rec] += 1;
            choice_[v] = -1;
            if (ok) return true;
        }
        return false;
    }

    bool validate_and_recurse(NodeId root, int k) {
        // acyclic iff every parent chain reaches the root
        for (NodeId v = 0; v < d_.node_count(); ++v) {
            if (v == root) continue;
            NodeId cur = v;
            int steps = 0;
            while (cur != root) {
                cur = d_.arc(choice_[cur]).tail;
                if (++steps > d_.node_count()) return false;
            }
        }
        // residual_ already reflects this arborescence being taken
        std::vector<int> saved_choice = choice_;
        bool ok = packs(k - 1);
        choice_ = std::move(saved_choice);
        return ok;
    }

    const Digraph& d_;
    std::optional<NodeId> fixed_root_;
    std::vector<long long> residual_;
    std::vector<std::vector<int>> in_records_;
    std::vector<int> choice_;
    std::map<std::pair<std::vector<long long>, int>, bool> memo_;
};

} // namespace

bool brute_arborescence_pack(const Digraph& d, int k, std::optional<NodeId> root) {
    // caps sized so the Theorem 3.1 reduced instances (one extra node, k*n
    // extra units) still fit
    check_cap(d.node_count() <= 5 && d.unit_count() <= 18 && k <= 3,
              "brute_arborescence_pack on n=" + std::to_string(d.node_count()) + " units=" +
                  std::to_string(d.unit_count()) + " k=" + std::to_string(k));
    if (root) d.check_node(*root);
    if (k < 1) throw input_error("k must be positive");
    if (d.node_count() == 1) return true;
    PackSearcher searcher(d, root);
    return searcher.packs(k);
}

namespace {

using CountVector = std::vector<long long>;

std::vector<CountVector> all_count_vectors(const Digraph& d, std::optional<long long> exact_total) {
    std::vector<CountVector> out;
    CountVector cur(d.record_count(), 0);
    std::function<void(int, long long)> rec = [&](int i, long long total) {
        if (exact_total && total > *exact_total) return;
        if (i == d.record_count()) {
            if (!exact_total || total == *exact_total) out.push_back(cur);
            return;
        }
        for (long long c = 0; c <= d.arc(i).multiplicity; ++c) {
            cur[i] = c;
            rec(i + 1, total + c);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    return out;
}

ArcSelection selection_from(const CountVector& counts) {
    ArcSelection sel;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) sel.add(static_cast<int>(i), counts[i]);
    return sel;
}

Rational vector_weight(const Digraph& d, const CountVector& counts, DegreeMode mode) {
    Rational total(0);
    for (std::size_t i = 0; i < counts.size(); ++i)
        total += Rational(counts[i]) * (mode == DegreeMode::unit ? Rational(1) : d.arc(i).weight);
    return total;
}

// unit indegree of every node subset, as plain integers
std::vector<long long> unit_rho_table(const Digraph& d) {
    const int n = d.node_count();
    std::vector<long long> rho(1u << n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        for (const Arc& a : d.arcs())
            if ((mask >> a.head & 1u) && !(mask >> a.tail & 1u)) rho[mask] += a.multiplicity;
    }
    return rho;
}

// max over subpartitions of sum(k - rho(X)) via submask DP
long long best_subpartition_value(const std::vector<long long>& rho, int n, int k) {
    std::vector<long long> f(1u << n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned low = mask & (~mask + 1u);
        long long best = f[mask & ~low]; // lowest node left uncovered
        for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            long long value = k - rho[sub] + f[mask & ~sub];
            best = std::max(best, value);
        }
        f[mask] = best;
    }
    return f[(1u << n) - 1];
}

} // namespace

BruteBlockingResult brute_min_blocking(const Digraph& d, DegreeMode mode, int k,
                                       std::optional<NodeId> root) {
    check_cap(d.node_count() <= 5 && d.unit_count() <= 12,
              "brute_min_blocking on n=" + std::to_string(d.node_count()) + " units=" +
                  std::to_string(d.unit_count()));
    if (root) d.check_node(*root);
    const int n = d.node_count();
    const auto rho0 = unit_rho_table(d);

    std::vector<std::vector<char>> enters(d.record_count(), std::vector<char>(1u << n, 0));
    for (int r = 0; r < d.record_count(); ++r)
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            enters[r][mask] = (mask >> d.arc(r).head & 1u) && !(mask >> d.arc(r).tail & 1u);

    auto blocked = [&](const CountVector& h) {
        std::vector<long long> rho(rho0);
        for (int r = 0; r < d.record_count(); ++r) {
            if (h[r] == 0) continue;
            for (unsigned mask = 1; mask < (1u << n); ++mask)
                if (enters[r][mask]) rho[mask] -= h[r];
        }
        if (root) {
            unsigned root_bit = 1u << *root;
            long long best = std::numeric_limits<long long>::max();
            for (unsigned mask = 1; mask < (1u << n); ++mask)
                if (!(mask & root_bit)) best = std::min(best, rho[mask]);
            return n > 1 && best < k;
        }
        return best_subpartition_value(rho, n, k) > k;
    };

    auto vectors = all_count_vectors(d, std::nullopt);
    std::stable_sort(vectors.begin(), vectors.end(), [&](const CountVector& a, const CountVector& b) {
        Rational wa = vector_weight(d, a, mode), wb = vector_weight(d, b, mode);
        if (wa != wb) return wa < wb;
        long long ca = 0, cb = 0;
        for (long long x : a) ca += x;
        for (long long x : b) cb += x;
        if (ca != cb) return ca < cb;
        return a < b;
    });
    for (const CountVector& h : vectors) {
        if (blocked(h)) {
            BruteBlockingResult result;
            result.weight = vector_weight(d, h, mode);
            result.removed = selection_from(h);
            return result;
        }
    }
    // removing every arc always blocks any k-union structure on n >= 2 nodes,
    // so reaching here means n == 1 (unrooted: the empty arborescence union
    // cannot be destroyed)
    throw input_error("instance cannot be blocked: no removable structure");
}

BruteBlockingResult brute_min_blocking_opt_rooted(const Digraph& d, int k, NodeId root) {
    check_cap(d.node_count() <= 5 && d.unit_count() <= 18,
              "brute_min_blocking_opt_rooted on n=" + std::to_string(d.node_count()) + " units=" +
                  std::to_string(d.unit_count()));
    d.check_node(root);
    const int n = d.node_count();
    if (n == 1) throw input_error("instance cannot be blocked: no removable structure");

    // enumerate k-union-r-arborescences as unit count vectors; verify each by
    // direct packing search on the chosen sub-multigraph
    const long long want = static_cast<long long>(k) * (n - 1);
    std::vector<CountVector> structures;
    for (const CountVector& b : all_count_vectors(d, want)) {
        std::vector<long long> indeg(n, 0);
        bool shape_ok = true;
        for (int r = 0; r < d.record_count(); ++r) {
            if (b[r] > 0 && d.arc(r).head == root) {
                shape_ok = false;
                break;
            }
            indeg[d.arc(r).head] += b[r];
        }
        if (!shape_ok) continue;
        for (NodeId v = 0; v < n && shape_ok; ++v)
            if (v != root && indeg[v] != k) shape_ok = false;
        if (!shape_ok) continue;
        Digraph sub(n);
        for (int r = 0; r < d.record_count(); ++r) {
            if (b[r] > 0) {
                Arc a = d.arc(r);
                a.multiplicity = b[r];
                sub.add_arc(std::move(a));
            }
        }
        if (brute_arborescence_pack(sub, k, root)) structures.push_back(b);
    }
    BruteBlockingResult result;
    if (structures.empty()) return result; // nothing to block, weight 0

    Rational best_cost = std::numeric_limits<long long>::max();
    for (const CountVector& b : structures) {
        Rational cost(0);
        for (int r = 0; r < d.record_count(); ++r)
            if (b[r] > 0) cost += Rational(b[r]) * d.arc(r).cost.value_or(Rational(0));
        best_cost = std::min(best_cost, cost);
    }
    std::vector<CountVector> targets;
    for (const CountVector& b : structures) {
        Rational cost(0);
        for (int r = 0; r < d.record_count(); ++r)
            if (b[r] > 0) cost += Rational(b[r]) * d.arc(r).cost.value_or(Rational(0));
        if (cost == best_cost) targets.push_back(b);
    }

    // branch-and-bound hitting: blocking B needs some record r with
    // h[r] + b[r] > multiplicity(r)
    CountVector h(d.record_count(), 0);
    std::optional<CountVector> incumbent;
    Rational incumbent_weight(0);
    auto weight_of = [&](const CountVector& v) { return vector_weight(d, v, DegreeMode::weighted); };
    std::function<void()> branch = [&]() {
        Rational w = weight_of(h);
        if (incumbent && w >= incumbent_weight) return;
        const CountVector* unhit = nullptr;
        for (const CountVector& b : targets) {
            bool hit = false;
            for (int r = 0; r < d.record_count() && !hit; ++r)
                if (h[r] + b[r] > d.arc(r).multiplicity) hit = true;
            if (!hit) {
                unhit = &b;
                break;
            }
        }
        if (!unhit) {
            incumbent = h;
            incumbent_weight = w;
            return;
        }
        for (int r = 0; r < d.record_count(); ++r) {
            if ((*unhit)[r] == 0) continue;
            long long need = d.arc(r).multiplicity - (*unhit)[r] + 1;
            if (h[r] >= need) continue;
            long long saved = h[r];
            h[r] = need;
            branch();
            h[r] = saved;
        }
    };
    branch();
    if (!incumbent) throw internal_error("hitting-set search failed to find any blocker");
    result.weight = incumbent_weight;
    result.removed = selection_from(*incumbent);
    return result;
}

} // namespace arbblock::oracle
