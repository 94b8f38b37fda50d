#include "chordlab/moves.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "chordlab/error.hpp"

namespace chordlab {

ChordDiagram apply_move(const ChordDiagram& c, const Move& m) {
    if (m.kind == MoveKind::collapse) {
        if (m.half_edge < 0 || m.half_edge >= c.graph().half_edge_count())
            throw Error(ErrorCode::inconsistent_tables, "no half-edge " + std::to_string(m.half_edge));
        return collapse_edge(c, c.graph().edge_of(m.half_edge));
    }
    return expand(c, m.split);
}

Move transport(const Move& m, std::span<const int> iso) {
    if (m.kind == MoveKind::collapse) return Move::collapse(iso[m.half_edge]);
    return Move::expand({iso[m.split.first], iso[m.split.second], m.split.kind});
}

std::string to_string(const Move& m) {
    if (m.kind == MoveKind::collapse) return "collapse " + std::to_string(m.half_edge);
    return std::string("expand ") + std::to_string(m.split.first) + " " + std::to_string(m.split.second) +
           (m.split.kind == EdgeKind::circular ? " C" : " G");
}

ChordDiagram replay(const ChordDiagram& c, const std::vector<Move>& moves) {
    ChordDiagram cur = c;
    for (const Move& m : moves) cur = apply_move(cur, m);
    return cur;
}

std::vector<Neighbor> neighbors(const ChordDiagram& c, int max_edges, MoveStats* stats) {
    const FatGraph& g = c.graph();
    MoveStats local;
    std::vector<Neighbor> out;
    std::unordered_set<std::string> seen;
    auto offer = [&](Move move, Move inverse, ChordDiagram d) {
        ++local.moves_checked;
        if (d.type() != c.type()) {
            ++local.type_violations;
            return;
        }
        std::string code = diagram_code(d);
        if (!seen.insert(code).second) return;
        out.push_back({move, inverse, std::move(d), std::move(code)});
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e) || is_essential(c, e)) continue;
        auto r = collapse_edge_detailed(c, e);
        offer(Move::collapse(g.edge_half_edge(e)), Move::expand(r.inverse), std::move(r.diagram));
    }
    if (g.edge_count() + 1 <= max_edges) {
        for (auto& r : split_candidates(c))
            offer(Move::expand(r.split), Move::collapse(g.half_edge_count()), std::move(r.diagram));
    }
    if (stats) *stats += local;
    return out;
}

namespace {

// Breadth-first tree over isomorphism classes. Each node stores a concrete
// representative, reached exactly from its parent's representative by
// `forward`; `inverse` acts on the representative and leads back to a copy
// isomorphic to the parent's.
struct SearchNode {
    ChordDiagram rep;
    std::string code;
    int parent = -1;
    Move forward;
    Move inverse;
    int depth = 0;
};

class SearchTree {
public:
    SearchTree(ChordDiagram root, int max_edges, int jobs) : max_edges_(max_edges), jobs_(std::max(1, jobs)) {
        std::string code = diagram_code(root);
        index_.emplace(code, 0);
        nodes_.push_back({std::move(root), std::move(code), -1, {}, {}, 0});
        frontier_ = {0};
    }

    const std::vector<SearchNode>& nodes() const { return nodes_; }
    const std::vector<int>& frontier() const { return frontier_; }
    const MoveStats& stats() const { return stats_; }

    int find(const std::string& code) const {
        auto it = index_.find(code);
        return it == index_.end() ? -1 : it->second;
    }

    // Expands the whole frontier. Neighbors are computed in parallel over
    // contiguous chunks of the frontier and merged sequentially in frontier
    // order, so the tree does not depend on the worker count. Returns the
    // ids of the new nodes.
    std::vector<int> grow() {
        const std::size_t n = frontier_.size();
        std::vector<std::vector<Neighbor>> found(n);
        std::vector<MoveStats> worker_stats(jobs_);
        auto work = [&](int w, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                found[i] = neighbors(nodes_[frontier_[i]].rep, max_edges_, &worker_stats[w]);
        };
        const int workers = static_cast<int>(std::min<std::size_t>(jobs_, n));
        if (workers <= 1) {
            work(0, 0, n);
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (n + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                const std::size_t begin = std::min(n, w * chunk);
                const std::size_t end = std::min(n, begin + chunk);
                pool.emplace_back(work, w, begin, end);
            }
            for (auto& t : pool) t.join();
        }
        for (const auto& s : worker_stats) stats_ += s;

        std::vector<int> added;
        for (std::size_t i = 0; i < n; ++i) {
            const int parent = frontier_[i];
            for (auto& nb : found[i]) {
                if (index_.count(nb.code)) continue;
                const int id = static_cast<int>(nodes_.size());
                index_.emplace(nb.code, id);
                nodes_.push_back(
                    {std::move(nb.diagram), nb.code, parent, nb.move, nb.inverse, nodes_[parent].depth + 1});
                added.push_back(id);
            }
        }
        std::sort(added.begin(), added.end(), [&](int a, int b) { return nodes_[a].code < nodes_[b].code; });
        frontier_ = added;
        return added;
    }

    void run() {
        while (!frontier_.empty()) grow();
    }

    // Moves taking `start` (isomorphic to node id's representative) back to
    // a diagram isomorphic to the root, transporting each stored inverse
    // along an isomorphism onto the current diagram.
    std::vector<Move> path_to_root(int id, ChordDiagram start) const {
        std::vector<Move> path;
        ChordDiagram cur = std::move(start);
        for (int k = id; nodes_[k].parent >= 0; k = nodes_[k].parent) {
            Move m = nodes_[k].inverse;
            if (!(cur == nodes_[k].rep)) {
                auto iso = find_isomorphism(nodes_[k].rep, cur);
                if (!iso) throw Error(ErrorCode::internal, "representative is not isomorphic to the path state");
                m = transport(m, *iso);
            }
            cur = apply_move(cur, m);
            path.push_back(m);
        }
        return path;
    }

    // Moves from the root's representative to node id's representative.
    std::vector<Move> path_from_root(int id) const {
        std::vector<Move> path;
        for (int k = id; nodes_[k].parent >= 0; k = nodes_[k].parent) path.push_back(nodes_[k].forward);
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    int max_edges_;
    int jobs_;
    std::vector<SearchNode> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> frontier_;
    MoveStats stats_;
};

}  // namespace

MoveGraphReport explore(const TopType& type, int edge_bound, const ExploreOptions& options) {
    const ChordDiagram base = canonical_gamma0(type.g, type.p, type.q);
    if (edge_bound < base.graph().edge_count())
        throw Error(ErrorCode::bound_too_small, "edge bound " + std::to_string(edge_bound) + " is below the " +
                                                    std::to_string(base.graph().edge_count()) +
                                                    " edges of the base point");

    MoveGraphReport report;
    report.type = type;
    report.edge_bound = edge_bound;

    SearchTree tree(base, edge_bound, options.jobs);
    tree.run();
    report.stats = tree.stats();
    report.gamma0_code = to_hex(tree.nodes()[0].code);

    const auto generated = generate_classes(type, edge_bound);
    report.generated_count = static_cast<int>(generated.size());

    std::set<std::string> all;
    for (const auto& node : tree.nodes()) {
        const std::string hex = to_hex(node.code);
        all.insert(hex);
        report.representatives.emplace(hex, node.rep);
        report.max_depth = std::max(report.max_depth, node.depth);
        if (!generated.count(node.code)) report.ungenerated.push_back(hex);
    }

    // Classes the base point cannot reach are grouped into components by
    // further searches seeded in code order.
    report.component_count = 1;
    std::unordered_set<std::string> covered;
    for (const auto& node : tree.nodes()) covered.insert(node.code);
    for (const auto& [code, rep] : generated) {
        if (covered.count(code)) continue;
        report.unreached.push_back(to_hex(code));
        ++report.component_count;
        SearchTree other(rep, edge_bound, options.jobs);
        other.run();
        report.stats += other.stats();
        for (const auto& node : other.nodes()) {
            covered.insert(node.code);
            const std::string hex = to_hex(node.code);
            all.insert(hex);
            report.representatives.emplace(hex, node.rep);
        }
    }
    std::sort(report.unreached.begin(), report.unreached.end());
    std::sort(report.ungenerated.begin(), report.ungenerated.end());
    report.classes.assign(all.begin(), all.end());
    report.class_count = static_cast<int>(report.classes.size());

    if (options.witnesses) {
        const std::string& target = tree.nodes()[0].code;
        for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
            const auto& node = tree.nodes()[id];
            auto path = tree.path_to_root(static_cast<int>(id), node.rep);
            if (diagram_code(replay(node.rep, path)) != target)
                throw Error(ErrorCode::internal, "witness path does not end at the base point");
            report.witness_paths.emplace(to_hex(node.code), std::move(path));
        }
    }
    return report;
}

std::string report_json(const MoveGraphReport& report) {
    // nlohmann::json objects keep keys sorted.
    nlohmann::json j;
    j["type"] = {{"g", report.type.g}, {"p", report.type.p}, {"q", report.type.q}};
    j["bound"] = report.edge_bound;
    j["classes"] = report.class_count;
    j["components"] = report.component_count;
    j["unreached"] = report.unreached;
    nlohmann::json lengths = nlohmann::json::object();
    for (const auto& [code, path] : report.witness_paths) lengths[code] = path.size();
    j["witness_lengths"] = lengths;
    j["moves_checked"] = report.stats.moves_checked;
    j["type_violations"] = report.stats.type_violations;
    j["generated_classes"] = report.generated_count;
    j["ungenerated"] = report.ungenerated;
    j["gamma0"] = report.gamma0_code;
    return j.dump(2) + "\n";
}

std::vector<Move> path_to_canonical(const ChordDiagram& c, int slack) {
    const TopType t = c.type();
    const ChordDiagram base = canonical_gamma0(t.g, t.p, t.q);
    const int ceiling = std::max(c.graph().edge_count(), base.graph().edge_count()) + std::max(0, slack);

    SearchTree from_c(c, ceiling, 1);
    SearchTree from_base(base, ceiling, 1);
    const std::string target = from_base.nodes()[0].code;

    auto meet_in = [](const SearchTree& a, const SearchTree& b, const std::vector<int>& ids) {
        for (int id : ids)
            if (b.find(a.nodes()[id].code) >= 0) return id;
        return -1;
    };

    int meet_c = meet_in(from_c, from_base, {0});
    while (meet_c < 0) {
        const bool grow_c = !from_c.frontier().empty() &&
                            (from_base.frontier().empty() || from_c.frontier().size() <= from_base.frontier().size());
        if (grow_c) {
            meet_c = meet_in(from_c, from_base, from_c.grow());
        } else if (!from_base.frontier().empty()) {
            const auto added = from_base.grow();
            const int meet_base = meet_in(from_base, from_c, added);
            if (meet_base >= 0) meet_c = from_c.find(from_base.nodes()[meet_base].code);
        } else {
            throw Error(ErrorCode::search_exhausted,
                        "no path within " + std::to_string(ceiling) + " edges after visiting " +
                            std::to_string(from_c.nodes().size() + from_base.nodes().size()) +
                            " classes (frontier sizes 0 and 0); this does not show the classes are disconnected");
        }
    }

    std::vector<Move> path = from_c.path_from_root(meet_c);
    const ChordDiagram middle = replay(c, path);
    const int meet_base = from_base.find(from_c.nodes()[meet_c].code);
    auto rest = from_base.path_to_root(meet_base, middle);
    path.insert(path.end(), rest.begin(), rest.end());

    if (diagram_code(replay(c, path)) != target)
        throw Error(ErrorCode::internal, "path to the base point failed to replay");
    return path;
}

}  // namespace chordlab
