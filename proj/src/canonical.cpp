#include <algorithm>
#include <array>
#include <cstdint>
#include <tuple>

#include "chordlab/error.hpp"
#include "chordlab/fatgraph.hpp"

namespace chordlab {

namespace {

// Local invariant used to restrict the candidate start half-edges. Any
// isomorphism maps a half-edge to one with the same key.
using StartKey = std::tuple<std::uint32_t, int, int, int>;

std::string encode(int count, const std::vector<std::uint32_t>& values) {
    std::uint32_t max_value = static_cast<std::uint32_t>(count);
    for (auto v : values) max_value = std::max(max_value, v);
    int width = 1;
    while (width < 4 && (max_value >> (8 * width)) != 0) ++width;

    std::string out;
    out.reserve(5 + values.size() * width);
    out.push_back(static_cast<char>(width));
    for (int b = 3; b >= 0; --b) out.push_back(static_cast<char>((count >> (8 * b)) & 0xff));
    for (auto v : values)
        for (int b = width - 1; b >= 0; --b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    return out;
}

}  // namespace

CanonicalForm canonical_form(const FatGraph& g, std::span<const std::uint32_t> colors, std::uint64_t* steps) {
    const int count = g.half_edge_count();
    const bool colored = !colors.empty();
    if (colored && static_cast<int>(colors.size()) != count)
        throw Error(ErrorCode::internal, "color table has the wrong size");

    std::vector<int> cycle_len(count, 0);
    for (const auto& c : boundary_cycles(g))
        for (int h : c.half_edges) cycle_len[h] = c.size();

    auto key = [&](int h) {
        return StartKey{colored ? colors[h] : 0u, g.valence(g.vertex_of(h)), g.valence(g.vertex_of(g.pair(h))),
                        cycle_len[h]};
    };
    std::vector<StartKey> keys(count);
    for (int h = 0; h < count; ++h) keys[h] = key(h);
    const StartKey best_key = *std::min_element(keys.begin(), keys.end());

    std::vector<std::uint32_t> best;
    std::vector<int> best_labeling;
    std::vector<std::uint32_t> cur;
    std::vector<int> label(count), order(count);
    std::uint64_t work = 0;

    for (int s = 0; s < count; ++s) {
        if (keys[s] != best_key) continue;
        std::fill(label.begin(), label.end(), -1);
        cur.clear();
        int assigned = 1;
        label[s] = 0;
        order[0] = s;
        // Emission follows label order; while `tied` the prefix equals best.
        bool tied = !best.empty();
        bool worse = false;
        for (int i = 0; i < assigned && !worse; ++i) {
            ++work;
            const int h = order[i];
            for (int x : {g.pair(h), g.next(h)}) {
                if (label[x] < 0) {
                    label[x] = assigned;
                    order[assigned++] = x;
                }
            }
            const std::array<std::uint32_t, 3> rec{static_cast<std::uint32_t>(label[g.pair(h)]),
                                                   static_cast<std::uint32_t>(label[g.next(h)]),
                                                   colored ? colors[h] : 0u};
            for (auto v : rec) {
                if (tied) {
                    const auto b = best[cur.size()];
                    if (v > b) {
                        worse = true;
                        break;
                    }
                    if (v < b) tied = false;
                }
                cur.push_back(v);
            }
        }
        if (worse) continue;
        if (assigned != count) throw Error(ErrorCode::disconnected, "canonical form needs a connected graph");
        if (best.empty() || !tied) {
            best = cur;
            best_labeling = label;
        }
    }
    if (steps) *steps = work;
    return {encode(count, best), best_labeling};
}

}  // namespace chordlab
