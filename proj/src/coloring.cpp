#include "ore5/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ore5/errors.hpp"
#include "ore5/hstructure.hpp"

namespace ore5 {

namespace {

// Per-component search over proper 3-colorings, tracking only the color
// counts. The frontier (colored vertices that still have uncolored
// neighbors) stays tiny for every Ore-degree-5 shape, so states are
// (frontier colors, count0, count1) with parent pointers for rebuilding.
struct ComponentColorings {
    std::vector<int> order;               // BFS order, component vertices
    std::vector<std::vector<int>> nbr;    // neighbors by order index, earlier ones only
    std::vector<std::vector<int>> frontier; // order indices alive entering position i
    int sz = 0;
    // parents[i]: state after coloring i vertices -> (state before, color used)
    std::vector<std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>>> parents;
    std::vector<std::uint64_t> finals; // keys with empty frontier at i == sz
    std::uint64_t span = 0;            // sz + 1, key stride

    std::uint64_t key(std::uint64_t code, int c0, int c1) const {
        return (code * span + (std::uint64_t)c0) * span + (std::uint64_t)c1;
    }
};

ComponentColorings color_component(const Graph& h, const std::vector<int>& comp_verts) {
    ComponentColorings cc;
    cc.sz = (int)comp_verts.size();
    cc.span = (std::uint64_t)cc.sz + 1;
    std::vector<char> in_comp(h.n, 0);
    for (int v : comp_verts) in_comp[v] = 1;
    int start = *std::min_element(comp_verts.begin(), comp_verts.end());
    std::vector<int> pos(h.n, -1);
    cc.order.push_back(start);
    pos[start] = 0;
    for (size_t head = 0; head < cc.order.size(); ++head)
        for (int w : h.adj[cc.order[head]])
            if (in_comp[w] && pos[w] < 0) {
                pos[w] = (int)cc.order.size();
                cc.order.push_back(w);
            }
    check_internal((int)cc.order.size() == cc.sz, "component not connected under its label");

    std::vector<int> last_needed(cc.sz, -1);
    cc.nbr.assign(cc.sz, {});
    for (int i = 0; i < cc.sz; ++i)
        for (int w : h.adj[cc.order[i]])
            if (in_comp[w]) {
                int j = pos[w];
                last_needed[std::min(i, j)] = std::max(last_needed[std::min(i, j)], std::max(i, j));
                if (j < i) cc.nbr[i].push_back(j);
            }
    cc.frontier.assign(cc.sz + 1, {});
    for (int i = 0; i <= cc.sz; ++i)
        for (int j = 0; j < std::min(i, cc.sz); ++j)
            if (j < i && last_needed[j] >= i) cc.frontier[i].push_back(j);
    for (int i = 0; i <= cc.sz; ++i)
        check_internal(cc.frontier[i].size() <= 12, "coloring frontier too wide for this shape");

    cc.parents.assign(cc.sz + 1, {});
    std::unordered_map<std::uint64_t, char> cur;
    cur[cc.key(0, 0, 0)] = 1;
    for (int i = 0; i < cc.sz; ++i) {
        std::unordered_map<std::uint64_t, char> next;
        const auto& fr = cc.frontier[i];
        const auto& fr_next = cc.frontier[i + 1];
        for (const auto& [k, unused] : cur) {
            (void)unused;
            int c1 = (int)(k % cc.span);
            int c0 = (int)((k / cc.span) % cc.span);
            std::uint64_t code = k / (cc.span * cc.span);
            // colors of live vertices, addressed by order index
            std::vector<int> col_of(cc.sz, -1);
            std::uint64_t rest = code;
            for (int j : fr) {
                col_of[j] = (int)(rest % 3);
                rest /= 3;
            }
            for (int col = 0; col < 3; ++col) {
                bool ok = true;
                for (int j : cc.nbr[i])
                    if (col_of[j] == col) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::uint64_t ncode = 0;
                for (auto it = fr_next.rbegin(); it != fr_next.rend(); ++it)
                    ncode = ncode * 3 + (std::uint64_t)(*it == i ? col : col_of[*it]);
                std::uint64_t nk =
                    cc.key(ncode, c0 + (col == 0 ? 1 : 0), c1 + (col == 1 ? 1 : 0));
                if (next.emplace(nk, 1).second) cc.parents[i + 1].emplace(nk, std::make_pair(k, col));
            }
        }
        cur = std::move(next);
    }
    for (const auto& [k, unused] : cur) {
        (void)unused;
        cc.finals.push_back(k);
    }
    std::sort(cc.finals.begin(), cc.finals.end());
    return cc;
}

// rebuild one coloring of the component ending at the given final state
void assign_colors(const ComponentColorings& cc, std::uint64_t final_key,
                   std::vector<int>& color_of) {
    std::uint64_t k = final_key;
    for (int i = cc.sz; i >= 1; --i) {
        auto it = cc.parents[i].find(k);
        check_internal(it != cc.parents[i].end(), "missing parent state in coloring DP");
        color_of[cc.order[i - 1]] = it->second.second;
        k = it->second.first;
    }
}

} // namespace

EquitableColoring equitable_3_coloring(const Graph& h) {
    require_guest_degrees(h);
    int n = h.n;
    EquitableColoring out;
    out.color_of.assign(n, -1);
    if (n == 0) return out;

    auto comps = classify_components(h);
    std::vector<ComponentColorings> ccs;
    ccs.reserve(comps.size());
    for (const auto& c : comps) ccs.push_back(color_component(h, c.vertices));

    // forward DP over components on (color0 total, color1 total)
    std::uint64_t stride = (std::uint64_t)n + 1;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> layer(ccs.size() + 1);
    layer[0][0] = 0;
    for (size_t t = 0; t < ccs.size(); ++t) {
        const auto& cc = ccs[t];
        for (const auto& [ab, unused] : layer[t]) {
            (void)unused;
            std::uint64_t a = ab / stride, b = ab % stride;
            for (size_t fi = 0; fi < cc.finals.size(); ++fi) {
                std::uint64_t fk = cc.finals[fi];
                std::uint64_t c1 = fk % cc.span, c0 = (fk / cc.span) % cc.span;
                std::uint64_t nab = (a + c0) * stride + (b + c1);
                layer[t + 1].emplace(nab, ab * (std::uint64_t)cc.finals.size() + (std::uint64_t)fi);
            }
        }
    }
    int q = n / 3, rho = n % 3;
    int t0 = q + (rho >= 1 ? 1 : 0), t1 = q + (rho >= 2 ? 1 : 0);
    std::uint64_t target = (std::uint64_t)t0 * stride + (std::uint64_t)t1;
    auto hit = layer[ccs.size()].find(target);
    check_internal(hit != layer[ccs.size()].end(),
                   "no class-size split reachable; contradicts the Ore-degree-5 coloring theorem");

    std::uint64_t ab = target;
    std::vector<std::uint64_t> chosen(ccs.size());
    for (size_t t = ccs.size(); t-- > 0;) {
        std::uint64_t packed = layer[t + 1].at(ab);
        chosen[t] = ccs[t].finals[packed % (std::uint64_t)ccs[t].finals.size()];
        ab = packed / (std::uint64_t)ccs[t].finals.size();
    }
    for (size_t t = 0; t < ccs.size(); ++t) assign_colors(ccs[t], chosen[t], out.color_of);

    std::array<std::vector<int>, 3> raw;
    for (int v = 0; v < n; ++v) {
        check_internal(out.color_of[v] >= 0, "vertex left uncolored");
        raw[out.color_of[v]].push_back(v);
    }
    for (int v = 0; v < n; ++v)
        for (int w : h.adj[v])
            check_internal(out.color_of[v] != out.color_of[w], "coloring is not proper");
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        return raw[x].size() != raw[y].size() ? raw[x].size() < raw[y].size() : x < y;
    });
    std::array<int, 3> where{};
    for (int p = 0; p < 3; ++p) {
        out.classes[p] = raw[idx[p]];
        where[idx[p]] = p;
    }
    for (int v = 0; v < n; ++v) out.color_of[v] = where[out.color_of[v]];
    check_internal(out.classes[2].size() - out.classes[0].size() <= 1,
                   "class sizes differ by more than one");
    return out;
}

} // namespace ore5
