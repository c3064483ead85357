#include "arbblock/digraph.hpp"

#include "arbblock/errors.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace arbblock {

Digraph::Digraph(int node_count) : n_(node_count) {
    if (node_count < 1) throw input_error("digraph needs at least one node");
}

void Digraph::check_node(NodeId v) const {
    if (v < 0 || v >= n_)
        throw input_error("node id " + std::to_string(v) + " out of range [0," + std::to_string(n_ - 1) + "]");
}

void Digraph::add_arc(Arc arc) {
    check_node(arc.tail);
    check_node(arc.head);
    if (arc.tail == arc.head)
        throw input_error("self-loop at node " + std::to_string(arc.tail) + " rejected");
    if (arc.multiplicity < 1)
        throw input_error("arc multiplicity must be positive");
    if (arc.weight < Rational(0))
        throw input_error("arc weight must be non-negative");
    arcs_.push_back(std::move(arc));
}

void Digraph::add_arc(NodeId tail, NodeId head, long long multiplicity, Rational weight,
                      std::optional<Rational> cost) {
    add_arc(Arc{tail, head, multiplicity, std::move(weight), std::move(cost)});
}

long long Digraph::unit_count() const {
    long long total = 0;
    for (const Arc& a : arcs_) total += a.multiplicity;
    return total;
}

Rational Digraph::total_weight() const {
    Rational total(0);
    for (const Arc& a : arcs_) total += Rational(a.multiplicity) * a.weight;
    return total;
}

bool Digraph::has_costs() const {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.cost.has_value(); });
}

NodeSet::NodeSet(std::initializer_list<NodeId> members) : NodeSet(std::vector<NodeId>(members)) {}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::full(int node_count) {
    std::vector<NodeId> all(node_count);
    for (int i = 0; i < node_count; ++i) all[i] = i;
    return NodeSet(std::move(all));
}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void NodeSet::insert(NodeId v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void NodeSet::erase(NodeId v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

bool NodeSet::subset_of(const NodeSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool NodeSet::intersects(const NodeSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

NodeSet NodeSet::unite(const NodeSet& other) const {
    std::vector<NodeId> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    NodeSet result;
    result.members_ = std::move(out);
    return result;
}

NodeSet NodeSet::intersect(const NodeSet& other) const {
    std::vector<NodeId> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    NodeSet result;
    result.members_ = std::move(out);
    return result;
}

NodeSet NodeSet::difference(const NodeSet& other) const {
    std::vector<NodeId> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
    NodeSet result;
    result.members_ = std::move(out);
    return result;
}

bool NodeSet::size_lex_less(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
}

Subpartition::Subpartition(std::vector<NodeSet> parts) {
    for (NodeSet& p : parts) add_part(std::move(p));
}

void Subpartition::add_part(NodeSet part) {
    if (part.empty()) throw input_error("subpartition parts must be non-empty");
    for (const NodeSet& existing : parts_)
        if (existing.intersects(part)) throw input_error("subpartition parts must be pairwise disjoint");
    parts_.push_back(std::move(part));
}

void ArcSelection::add(int record_index, long long count) {
    if (count <= 0) throw input_error("arc selection counts must be positive");
    auto it = std::lower_bound(units_.begin(), units_.end(), record_index,
                               [](const auto& p, int idx) { return p.first < idx; });
    if (it != units_.end() && it->first == record_index)
        it->second += count;
    else
        units_.insert(it, {record_index, count});
}

long long ArcSelection::unit_count() const {
    long long total = 0;
    for (const auto& [idx, cnt] : units_) total += cnt;
    return total;
}

long long ArcSelection::count_of(int record_index) const {
    auto it = std::lower_bound(units_.begin(), units_.end(), record_index,
                               [](const auto& p, int idx) { return p.first < idx; });
    if (it != units_.end() && it->first == record_index) return it->second;
    return 0;
}

void ArcSelection::validate(const Digraph& d) const {
    for (const auto& [idx, cnt] : units_) {
        if (idx < 0 || idx >= d.record_count())
            throw input_error("arc selection references record " + std::to_string(idx) + " out of range");
        if (cnt > d.arc(idx).multiplicity)
            throw input_error("arc selection removes " + std::to_string(cnt) + " units of record " +
                              std::to_string(idx) + " with multiplicity " +
                              std::to_string(d.arc(idx).multiplicity));
    }
}

Rational ArcSelection::total_weight(const Digraph& d, DegreeMode mode) const {
    validate(d);
    Rational total(0);
    for (const auto& [idx, cnt] : units_)
        total += Rational(cnt) * (mode == DegreeMode::unit ? Rational(1) : d.arc(idx).weight);
    return total;
}

Rational indegree(const Digraph& d, const NodeSet& x, DegreeMode mode) {
    for (NodeId v : x.members()) d.check_node(v);
    std::vector<char> in(d.node_count(), 0);
    for (NodeId v : x.members()) in[v] = 1;
    Rational total(0);
    for (const Arc& a : d.arcs()) {
        if (in[a.head] && !in[a.tail])
            total += Rational(a.multiplicity) * (mode == DegreeMode::unit ? Rational(1) : a.weight);
    }
    return total;
}

Digraph remove(const Digraph& d, const ArcSelection& selection) {
    selection.validate(d);
    Digraph out(d.node_count());
    for (int i = 0; i < d.record_count(); ++i) {
        Arc a = d.arc(i);
        a.multiplicity -= selection.count_of(i);
        if (a.multiplicity > 0) out.add_arc(std::move(a));
    }
    return out;
}

Digraph induced(const Digraph& d, const NodeSet& z) {
    if (z.empty()) throw input_error("induced subgraph needs a non-empty node set");
    for (NodeId v : z.members()) d.check_node(v);
    std::vector<NodeId> remap(d.node_count(), -1);
    for (int i = 0; i < z.size(); ++i) remap[z.members()[i]] = i;
    Digraph out(z.size());
    for (const Arc& a : d.arcs()) {
        if (remap[a.tail] >= 0 && remap[a.head] >= 0) {
            Arc copy = a;
            copy.tail = remap[a.tail];
            copy.head = remap[a.head];
            out.add_arc(std::move(copy));
        }
    }
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
    throw input_error("line " + std::to_string(line_no) + ": " + message);
}

} // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<Digraph> graph;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!graph) {
            if (tokens[0] != "nodes" || tokens.size() != 2)
                parse_fail(line_no, "expected 'nodes <n>' before any arc line");
            long long n = 0;
            try {
                n = std::stoll(tokens[1]);
            } catch (const std::exception&) {
                parse_fail(line_no, "node count '" + tokens[1] + "' is not an integer");
            }
            if (n < 1) parse_fail(line_no, "node count must be at least 1");
            graph.emplace(static_cast<int>(n));
            continue;
        }
        if (tokens[0] != "arc" || tokens.size() < 4 || tokens.size() > 6)
            parse_fail(line_no, "expected 'arc <tail> <head> <multiplicity> [<weight> [<cost>]]'");
        Arc arc;
        try {
            arc.tail = static_cast<NodeId>(std::stoll(tokens[1]));
            arc.head = static_cast<NodeId>(std::stoll(tokens[2]));
            arc.multiplicity = std::stoll(tokens[3]);
        } catch (const std::exception&) {
            parse_fail(line_no, "malformed arc endpoints or multiplicity");
        }
        try {
            if (tokens.size() >= 5) arc.weight = parse_rational(tokens[4]);
            if (tokens.size() == 6) arc.cost = parse_rational(tokens[5]);
        } catch (const input_error& err) {
            parse_fail(line_no, err.what());
        }
        try {
            graph->add_arc(std::move(arc));
        } catch (const input_error& err) {
            parse_fail(line_no, err.what());
        }
    }
    if (!graph) throw input_error("empty graph text: missing 'nodes <n>' line");
    return *std::move(graph);
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << "nodes " << d.node_count() << "\n";
    const bool with_costs = d.has_costs();
    for (const Arc& a : d.arcs()) {
        out << "arc " << a.tail << " " << a.head << " " << a.multiplicity << " "
            << format_rational(a.weight);
        if (with_costs) out << " " << format_rational(a.cost.value_or(Rational(0)));
        out << "\n";
    }
    return out.str();
}

bool equivalent(const Digraph& a, const Digraph& b) {
    if (a.node_count() != b.node_count() || a.record_count() != b.record_count()) return false;
    auto key = [](const Arc& arc) {
        return std::tuple(arc.tail, arc.head, arc.multiplicity, arc.weight,
                          arc.cost.value_or(Rational(0)), arc.cost.has_value());
    };
    auto sorted_keys = [&](const Digraph& d) {
        std::vector<decltype(key(Arc{}))> keys;
        keys.reserve(d.record_count());
        for (const Arc& arc : d.arcs()) keys.push_back(key(arc));
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    return sorted_keys(a) == sorted_keys(b);
}

bool strongly_connected_within(const Digraph& d, const NodeSet& x) {
    if (x.size() <= 1) return true;
    std::vector<char> in(d.node_count(), 0);
    for (NodeId v : x.members()) in[v] = 1;
    std::vector<std::vector<NodeId>> fwd(d.node_count()), bwd(d.node_count());
    for (const Arc& a : d.arcs()) {
        if (in[a.tail] && in[a.head]) {
            fwd[a.tail].push_back(a.head);
            bwd[a.head].push_back(a.tail);
        }
    }
    auto reach = [&](const std::vector<std::vector<NodeId>>& adj) {
        std::vector<char> seen(d.node_count(), 0);
        std::vector<NodeId> stack{x.members()[0]};
        seen[x.members()[0]] = 1;
        while (!stack.empty()) {
            NodeId cur = stack.back();
            stack.pop_back();
            for (NodeId next : adj[cur]) {
                if (!seen[next]) {
                    seen[next] = 1;
                    stack.push_back(next);
                }
            }
        }
        for (NodeId v : x.members())
            if (!seen[v]) return false;
        return true;
    };
    return reach(fwd) && reach(bwd);
}

bool strongly_connected(const Digraph& d) {
    return strongly_connected_within(d, NodeSet::full(d.node_count()));
}

} // namespace arbblock
