#ifndef ARBBLOCK_DIGRAPH_HPP
#define ARBBLOCK_DIGRAPH_HPP

#include "arbblock/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arbblock {

using NodeId = int;

// Whether a query counts arc units (multiplicities) or unit-weight products.
enum class DegreeMode { unit, weighted };

// One arc record. Parallel records between the same ordered pair are allowed
// and stay distinct; each multiplicity unit is an independently removable item.
struct Arc {
    NodeId tail = 0;
    NodeId head = 0;
    long long multiplicity = 1;
    Rational weight = Rational(1);
    std::optional<Rational> cost;
};

// Immutable after construction; all operations below are pure functions.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int node_count);

    // Validates no self-loop, multiplicity >= 1, weight >= 0, ids in range.
    void add_arc(Arc arc);
    void add_arc(NodeId tail, NodeId head, long long multiplicity = 1,
                 Rational weight = Rational(1), std::optional<Rational> cost = std::nullopt);

    int node_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int index) const { return arcs_.at(index); }
    int record_count() const { return static_cast<int>(arcs_.size()); }
    long long unit_count() const;
    Rational total_weight() const;
    bool has_costs() const;

    void check_node(NodeId v) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

// Members kept sorted and unique; value semantics throughout.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<NodeId> members);
    explicit NodeSet(std::vector<NodeId> members);

    static NodeSet full(int node_count);

    bool contains(NodeId v) const;
    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<NodeId>& members() const { return members_; }

    void insert(NodeId v);
    void erase(NodeId v);

    bool subset_of(const NodeSet& other) const;
    bool intersects(const NodeSet& other) const;
    NodeSet unite(const NodeSet& other) const;
    NodeSet intersect(const NodeSet& other) const;
    NodeSet difference(const NodeSet& other) const;

    bool operator==(const NodeSet& other) const = default;
    // size-then-lexicographic, the canonical enumeration order
    static bool size_lex_less(const NodeSet& a, const NodeSet& b);

private:
    std::vector<NodeId> members_;
};

// Pairwise-disjoint non-empty parts; the empty subpartition is valid.
class Subpartition {
public:
    Subpartition() = default;
    explicit Subpartition(std::vector<NodeSet> parts); // validates

    const std::vector<NodeSet>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    void add_part(NodeSet part); // validates disjointness

private:
    std::vector<NodeSet> parts_;
};

// Multiset of arc units keyed by record index; counts never exceed the
// record's multiplicity.
class ArcSelection {
public:
    ArcSelection() = default;

    void add(int record_index, long long count = 1);
    const std::vector<std::pair<int, long long>>& units() const { return units_; }
    bool empty() const { return units_.empty(); }
    long long unit_count() const;
    long long count_of(int record_index) const;

    void validate(const Digraph& d) const;
    Rational total_weight(const Digraph& d, DegreeMode mode) const;

private:
    std::vector<std::pair<int, long long>> units_; // sorted by record index
};

// Weighted or unit in-degree of X; indegree of the empty set is 0.
Rational indegree(const Digraph& d, const NodeSet& x, DegreeMode mode);

// D minus the selected arc units. Records hitting multiplicity 0 are dropped;
// the node set is unchanged.
Digraph remove(const Digraph& d, const ArcSelection& selection);

// D[Z] with nodes renumbered to 0..|Z|-1 in ascending original order.
Digraph induced(const Digraph& d, const NodeSet& z);

// Line-oriented text format:
//   # comment
//   nodes <n>
//   arc <tail> <head> <multiplicity> [<weight> [<cost>]]
// Weight defaults to 1. Diagnostics carry the offending line number.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

// Equality up to arc-record order.
bool equivalent(const Digraph& a, const Digraph& b);

// True when every node reaches every other (vacuously true for n <= 1).
bool strongly_connected(const Digraph& d);
bool strongly_connected_within(const Digraph& d, const NodeSet& x);

} // namespace arbblock

#endif
