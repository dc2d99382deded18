#include "mgc/graphs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mgc {

int MarkedGraph::num_legs() const {
    int n = 0;
    for (int f = 0; f < static_cast<int>(flags.size()); ++f) n += is_leg(f);
    return n;
}

int MarkedGraph::valence(int v) const {
    int k = 0;
    for (const auto& fl : flags) k += fl.vertex == v;
    return k;
}

bool MarkedGraph::unlabeled() const {
    for (int f = 0; f < static_cast<int>(flags.size()); ++f)
        if (is_leg(f) && flags[f].label != 0) return false;
    return true;
}

namespace {

int edge_id(const MarkedGraph& g, int f) { return std::min(f, g.flags[f].partner); }

bool connected(const MarkedGraph& g, int skip_edge = -1) {
    std::vector<int> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) {
        const int p = g.flags[f].partner;
        if (p <= f || edge_id(g, f) == skip_edge) continue;
        parent[find(g.flags[f].vertex)] = find(g.flags[p].vertex);
    }
    for (int v = 1; v < g.num_vertices; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// Drop a set of flags, renumbering the rest and both orderings.
MarkedGraph remove_flags(const MarkedGraph& g, const std::vector<char>& drop) {
    std::vector<int> index(g.flags.size(), -1);
    int next = 0;
    for (std::size_t f = 0; f < g.flags.size(); ++f)
        if (!drop[f]) index[f] = next++;
    MarkedGraph out;
    out.num_vertices = g.num_vertices;
    out.dv = g.dv;
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
        if (drop[f]) continue;
        Flag fl = g.flags[f];
        if (drop[fl.partner]) throw std::logic_error("remove_flags: partner dropped");
        fl.partner = index[fl.partner];
        out.flags.push_back(fl);
    }
    for (int e : g.edge_order)
        if (!drop[e]) out.edge_order.push_back(index[e]);
    for (int d : g.marked_order)
        if (!drop[d]) out.marked_order.push_back(index[d]);
    return out;
}

// Merge vertex `gone` into `keep` and close the index gap.
void merge_vertex(MarkedGraph& g, int keep, int gone) {
    for (auto& fl : g.flags) {
        if (fl.vertex == gone) fl.vertex = keep;
        if (fl.vertex > gone) --fl.vertex;
    }
    if (g.dv > gone) --g.dv;
    --g.num_vertices;
}

// Colour refinement; colours are ranks of invariant signatures, so they are
// canonical. The distinguished vertex always gets colour 0.
std::vector<int> refine(const MarkedGraph& g) {
    const int nv = g.num_vertices;
    std::vector<std::vector<int>> sig(nv);
    for (int v = 0; v < nv; ++v) sig[v] = {v == g.dv ? 0 : 1, g.valence(v)};
    std::vector<std::vector<int>> legs(nv), loops(nv);
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) {
        const Flag& fl = g.flags[f];
        if (g.is_leg(f))
            legs[fl.vertex].push_back(fl.label * 2 + fl.marked);
        else if (g.is_tadpole(f) && f < fl.partner)
            loops[fl.vertex].push_back(fl.marked + g.flags[fl.partner].marked);
    }
    for (int v = 0; v < nv; ++v) {
        std::sort(legs[v].begin(), legs[v].end());
        std::sort(loops[v].begin(), loops[v].end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), legs[v].begin(), legs[v].end());
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), loops[v].begin(), loops[v].end());
    }
    auto rank = [&](const std::vector<std::vector<int>>& s) {
        std::vector<std::vector<int>> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> col(nv);
        for (int v = 0; v < nv; ++v)
            col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[v]) - sorted.begin());
        return std::make_pair(col, static_cast<int>(sorted.size()));
    };
    auto [color, classes] = rank(sig);
    while (true) {
        std::vector<std::vector<int>> next(nv);
        for (int v = 0; v < nv; ++v) next[v] = {color[v], -1};
        for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) {
            const Flag& fl = g.flags[f];
            if (g.is_leg(f) || g.is_tadpole(f)) continue;
            const Flag& other = g.flags[fl.partner];
            next[fl.vertex].push_back(color[other.vertex] * 4 + fl.marked * 2 + other.marked);
        }
        for (auto& s : next) std::sort(s.begin() + 2, s.end());
        auto [col2, classes2] = rank(next);
        if (classes2 == classes) break;
        color = std::move(col2);
        classes = classes2;
    }
    return color;
}

using EdgeDesc = std::array<int, 4>;  // (pos, mark) of the smaller side, then the larger
using LegDesc = std::array<int, 3>;   // (pos, label, mark)

struct Layout {
    std::vector<int> code;
    std::vector<EdgeDesc> edges;  // sorted
    std::vector<LegDesc> legs;    // sorted
};

Layout layout(const MarkedGraph& g, const std::vector<int>& pos) {
    Layout out;
    for (int e : g.edge_order) {
        const Flag& a = g.flags[e];
        const Flag& b = g.flags[a.partner];
        std::array<int, 2> sa{pos[a.vertex], a.marked}, sb{pos[b.vertex], b.marked};
        if (sb < sa) std::swap(sa, sb);
        out.edges.push_back({sa[0], sa[1], sb[0], sb[1]});
    }
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f)
        if (g.is_leg(f)) out.legs.push_back({pos[g.flags[f].vertex], g.flags[f].label, g.flags[f].marked});
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.legs.begin(), out.legs.end());
    out.code = {g.num_vertices, static_cast<int>(out.edges.size()), static_cast<int>(out.legs.size())};
    for (const auto& e : out.edges) out.code.insert(out.code.end(), e.begin(), e.end());
    for (const auto& l : out.legs) out.code.insert(out.code.end(), l.begin(), l.end());
    return out;
}

// Map each flag of g to its slot in the canonical layout for vertex positions `pos`.
std::vector<int> flag_slots(const MarkedGraph& g, const std::vector<int>& pos) {
    const int ne = g.num_edges();
    std::vector<std::pair<EdgeDesc, int>> edges;
    std::vector<std::pair<LegDesc, int>> legs;
    for (int e : g.edge_order) {
        const Flag& a = g.flags[e];
        const Flag& b = g.flags[a.partner];
        std::array<int, 2> sa{pos[a.vertex], a.marked}, sb{pos[b.vertex], b.marked};
        if (sb < sa) std::swap(sa, sb);
        edges.push_back({{sa[0], sa[1], sb[0], sb[1]}, edge_id(g, e)});
    }
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f)
        if (g.is_leg(f)) legs.push_back({{pos[g.flags[f].vertex], g.flags[f].label, g.flags[f].marked}, f});
    std::sort(edges.begin(), edges.end());
    std::sort(legs.begin(), legs.end());
    std::vector<int> slot(g.flags.size(), -1);
    for (int k = 0; k < ne; ++k) {
        const int f = edges[k].second;
        const int p = g.flags[f].partner;
        const std::array<int, 2> sf{pos[g.flags[f].vertex], g.flags[f].marked};
        const std::array<int, 2> sp{pos[g.flags[p].vertex], g.flags[p].marked};
        if (sp < sf) {
            slot[p] = 2 * k;
            slot[f] = 2 * k + 1;
        } else {
            slot[f] = 2 * k;
            slot[p] = 2 * k + 1;
        }
    }
    for (std::size_t j = 0; j < legs.size(); ++j) slot[legs[j].second] = 2 * ne + static_cast<int>(j);
    return slot;
}

int orientation_sign(const MarkedGraph& g, const std::vector<int>& slot) {
    std::vector<int> es, ds;
    for (int e : g.edge_order) es.push_back(slot[e] / 2);
    for (int d : g.marked_order) ds.push_back(slot[d]);
    return sequence_sign(es) * sequence_sign(ds);
}

struct SearchResult {
    Layout best;
    std::vector<std::vector<int>> orderings;  // all positions achieving the minimum
};

SearchResult search(const MarkedGraph& g) {
    const auto color = refine(g);
    const int nv = g.num_vertices;
    std::vector<int> by_color(nv);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<std::pair<int, int>> cells;  // [start, end) into by_color
    for (int i = 0; i < nv;) {
        int j = i;
        while (j < nv && color[by_color[j]] == color[by_color[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    SearchResult res;
    bool have = false;
    std::vector<int> arrangement = by_color;
    std::vector<int> pos(nv);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            for (int i = 0; i < nv; ++i) pos[arrangement[i]] = i;
            Layout l = layout(g, pos);
            if (!have || l.code < res.best.code) {
                res.best = std::move(l);
                res.orderings.assign(1, pos);
                have = true;
            } else if (l.code == res.best.code) {
                res.orderings.push_back(pos);
            }
            return;
        }
        auto first = arrangement.begin() + cells[c].first;
        auto last = arrangement.begin() + cells[c].second;
        std::sort(first, last);
        do {
            rec(c + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return res;
}

std::string key_of(const std::vector<int>& code) {
    std::string key;
    key.reserve(code.size());
    for (int v : code) {
        if (v < 0 || v > 255) throw std::out_of_range("canonical code entry out of range");
        key.push_back(static_cast<char>(v));
    }
    return key;
}

bool identical_swap_is_odd(const Layout& l) {
    for (std::size_t k = 1; k < l.edges.size(); ++k)
        if (l.edges[k] == l.edges[k - 1] && l.edges[k][1] == 0 && l.edges[k][3] == 0) return true;
    for (std::size_t k = 1; k < l.legs.size(); ++k)
        if (l.legs[k] == l.legs[k - 1] && l.legs[k][2] == 1) return true;
    return false;
}

MarkedGraph build_canonical(const Layout& l) {
    MarkedGraph out;
    out.num_vertices = l.code[0];
    out.dv = 0;
    const int ne = static_cast<int>(l.edges.size());
    for (int k = 0; k < ne; ++k) {
        const auto& e = l.edges[k];
        out.flags.push_back({e[0], 2 * k + 1, e[1] != 0, 0});
        out.flags.push_back({e[2], 2 * k, e[3] != 0, 0});
        out.edge_order.push_back(2 * k);
    }
    for (std::size_t j = 0; j < l.legs.size(); ++j) {
        const int f = 2 * ne + static_cast<int>(j);
        out.flags.push_back({l.legs[j][0], f, l.legs[j][2] != 0, l.legs[j][1]});
    }
    for (int f = 0; f < static_cast<int>(out.flags.size()); ++f)
        if (out.flags[f].marked) out.marked_order.push_back(f);
    return out;
}

int det_sign_of_map(const MarkedGraph& g, const std::vector<int>& map) {
    std::map<int, int> edge_pos, mark_pos;
    for (int i = 0; i < g.num_edges(); ++i) edge_pos[edge_id(g, g.edge_order[i])] = i;
    for (int i = 0; i < g.num_marked(); ++i) mark_pos[g.marked_order[i]] = i;
    std::vector<int> es, ds;
    for (int e : g.edge_order) es.push_back(edge_pos.at(edge_id(g, map[e])));
    for (int d : g.marked_order) ds.push_back(mark_pos.at(map[d]));
    return sequence_sign(es) * sequence_sign(ds);
}

}  // namespace

std::vector<std::string> validate(const MarkedGraph& g) {
    std::vector<std::string> out;
    const int nf = static_cast<int>(g.flags.size());
    if (g.num_vertices < 1) return {"no vertices"};
    if (g.dv < 0 || g.dv >= g.num_vertices) return {"distinguished vertex out of range"};
    for (int f = 0; f < nf; ++f) {
        const Flag& fl = g.flags[f];
        if (fl.vertex < 0 || fl.vertex >= g.num_vertices || fl.partner < 0 || fl.partner >= nf) {
            out.push_back("flag " + std::to_string(f) + " has out-of-range data");
            return out;
        }
        if (g.flags[fl.partner].partner != f) out.push_back("involution fails at flag " + std::to_string(f));
    }
    if (!out.empty()) return out;

    std::vector<int> labels;
    for (int f = 0; f < nf; ++f) {
        if (g.is_leg(f))
            labels.push_back(g.flags[f].label);
        else if (g.flags[f].label != 0)
            out.push_back("non-leg flag " + std::to_string(f) + " carries a label");
    }
    std::sort(labels.begin(), labels.end());
    const bool all_zero = std::all_of(labels.begin(), labels.end(), [](int x) { return x == 0; });
    if (!all_zero)
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != static_cast<int>(i) + 1) {
                out.push_back("leg labels are not a bijection onto 1..n");
                break;
            }

    std::set<int> edges_listed;
    for (int e : g.edge_order) {
        if (e < 0 || e >= nf || g.is_leg(e)) {
            out.push_back("edge ordering names a non-edge");
            continue;
        }
        if (!edges_listed.insert(edge_id(g, e)).second) out.push_back("edge ordering repeats an edge");
    }
    int edge_count = 0;
    for (int f = 0; f < nf; ++f) edge_count += !g.is_leg(f) && f < g.flags[f].partner;
    if (static_cast<int>(edges_listed.size()) != edge_count) out.push_back("edge ordering misses an edge");

    std::set<int> marks_listed(g.marked_order.begin(), g.marked_order.end());
    std::set<int> marked;
    for (int f = 0; f < nf; ++f)
        if (g.flags[f].marked) marked.insert(f);
    if (marks_listed != marked || marks_listed.size() != g.marked_order.size())
        out.push_back("marked ordering does not match the marked flags");

    if (!connected(g)) out.push_back("graph is disconnected");
    for (int v = 0; v < g.num_vertices; ++v)
        if (v != g.dv && g.valence(v) < 3)
            out.push_back("stability: neutral vertex " + std::to_string(v) + " has valence < 3");
    for (int f = 0; f < nf; ++f) {
        const Flag& fl = g.flags[f];
        if (g.is_tadpole(f) && f < fl.partner && fl.vertex != g.dv)
            out.push_back("neutral tadpole at vertex " + std::to_string(fl.vertex));
        if (!g.is_leg(f) && f < fl.partner && fl.marked && g.flags[fl.partner].marked)
            out.push_back("double marked edge at flag " + std::to_string(f));
        if (fl.marked && fl.vertex != g.dv)
            out.push_back("marked flag " + std::to_string(f) + " not at the distinguished vertex");
    }
    return out;
}

GraphType graph_type(const MarkedGraph& g) {
    GraphType t;
    t.g = g.num_edges() - g.num_vertices + 2;
    t.n = g.num_legs();
    t.r = g.num_marked();
    t.excess = 3 * (t.g - 1) + 2 * (t.n - t.r);
    t.degree = g.num_edges() + t.n - t.r;
    return t;
}

Canonical canonical_form(const MarkedGraph& g) {
    const SearchResult s = search(g);
    Canonical out;
    out.cls.key = key_of(s.best.code);
    out.cls.graph = build_canonical(s.best);
    out.sign = orientation_sign(g, flag_slots(g, s.orderings[0]));
    bool vanishing = identical_swap_is_odd(s.best);
    for (std::size_t i = 1; i < s.orderings.size() && !vanishing; ++i)
        if (orientation_sign(g, flag_slots(g, s.orderings[i])) != out.sign) vanishing = true;
    out.cls.vanishing = vanishing;
    return out;
}

std::string canonical_key(const MarkedGraph& g) { return key_of(search(g).best.code); }

std::vector<Automorphism> automorphisms(const MarkedGraph& g) {
    const SearchResult s = search(g);
    const auto base = flag_slots(g, s.orderings[0]);
    std::vector<int> inverse(base.size());
    for (std::size_t f = 0; f < base.size(); ++f) inverse[base[f]] = static_cast<int>(f);
    std::vector<Automorphism> out;
    auto add = [&](const std::vector<int>& slot_perm_of_flag) {
        Automorphism a;
        a.flag_map.resize(base.size());
        for (std::size_t f = 0; f < base.size(); ++f) a.flag_map[f] = inverse[slot_perm_of_flag[f]];
        bool identity = true;
        for (std::size_t f = 0; f < base.size(); ++f) identity = identity && a.flag_map[f] == static_cast<int>(f);
        if (identity) return;
        a.sign = det_sign_of_map(g, a.flag_map);
        out.push_back(std::move(a));
    };
    for (std::size_t i = 1; i < s.orderings.size(); ++i) add(flag_slots(g, s.orderings[i]));
    // swaps inside identical descriptors, written on canonical slots
    const int ne = static_cast<int>(s.best.edges.size());
    auto with_slot_swap = [&](std::vector<std::pair<int, int>> swaps) {
        std::vector<int> perm(base.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (auto [a, b] : swaps) std::swap(perm[a], perm[b]);
        std::vector<int> composed(base.size());
        for (std::size_t f = 0; f < base.size(); ++f) composed[f] = perm[base[f]];
        add(composed);
    };
    for (int k = 1; k < ne; ++k)
        if (s.best.edges[k] == s.best.edges[k - 1])
            with_slot_swap({{2 * k - 2, 2 * k}, {2 * k - 1, 2 * k + 1}});
    for (int k = 0; k < ne; ++k) {
        const auto& e = s.best.edges[k];
        if (e[0] == e[2] && e[1] == e[3]) with_slot_swap({{2 * k, 2 * k + 1}});
    }
    for (std::size_t j = 1; j < s.best.legs.size(); ++j)
        if (s.best.legs[j] == s.best.legs[j - 1])
            with_slot_swap({{2 * ne + static_cast<int>(j) - 1, 2 * ne + static_cast<int>(j)}});
    return out;
}

bool has_odd_automorphism(const MarkedGraph& g) { return canonical_form(g).cls.vanishing; }

std::vector<std::pair<MarkedGraph, int>> contract_edge(const MarkedGraph& g, int flag) {
    if (flag < 0 || flag >= static_cast<int>(g.flags.size()) || g.is_leg(flag))
        throw std::invalid_argument("contract_edge: not an edge");
    if (g.is_tadpole(flag)) return {};
    const int partner = g.flags[flag].partner;
    const int k = g.num_edges();
    int j = -1;
    for (int i = 0; i < k; ++i)
        if (edge_id(g, g.edge_order[i]) == edge_id(g, flag)) j = i;
    const int sign = (k - 1 - j) % 2 == 0 ? 1 : -1;

    int fm = -1, other = -1;
    if (g.flags[flag].marked) {
        fm = flag;
        other = partner;
    } else if (g.flags[partner].marked) {
        fm = partner;
        other = flag;
    }
    const int u = g.flags[flag].vertex, w = g.flags[partner].vertex;
    const int keep = (w == g.dv) ? w : u;
    const int gone = (keep == u) ? w : u;

    auto finish = [&](MarkedGraph h) -> std::optional<MarkedGraph> {
        std::vector<char> drop(h.flags.size(), 0);
        drop[flag] = drop[partner] = 1;
        MarkedGraph out = remove_flags(h, drop);
        merge_vertex(out, keep, gone);
        for (int f = 0; f < static_cast<int>(out.flags.size()); ++f) {
            if (out.is_leg(f)) continue;
            const Flag& a = out.flags[f];
            const Flag& b = out.flags[a.partner];
            if (a.vertex == b.vertex && a.vertex != out.dv) return std::nullopt;
            if (a.marked && b.marked) return std::nullopt;
        }
        return out;
    };

    std::vector<std::pair<MarkedGraph, int>> out;
    if (fm < 0) {
        if (auto h = finish(g)) out.emplace_back(std::move(*h), sign);
        return out;
    }
    // marked edge: fm sits at the distinguished vertex, `other` at a neutral vertex
    const int nbr = g.flags[other].vertex;
    for (int fi = 0; fi < static_cast<int>(g.flags.size()); ++fi) {
        if (fi == other || g.flags[fi].vertex != nbr) continue;
        MarkedGraph h = g;
        h.flags[fm].marked = false;
        h.flags[fi].marked = true;
        std::replace(h.marked_order.begin(), h.marked_order.end(), fm, fi);
        if (auto r = finish(h)) out.emplace_back(std::move(*r), sign);
    }
    return out;
}

std::pair<MarkedGraph, int> mark_flag(const MarkedGraph& g, int flag) {
    if (flag < 0 || flag >= static_cast<int>(g.flags.size()))
        throw std::invalid_argument("mark_flag: no such flag");
    const Flag& fl = g.flags[flag];
    if (fl.vertex != g.dv || fl.marked)
        throw std::invalid_argument("mark_flag: not an unmarked flag at the distinguished vertex");
    if (!g.is_leg(flag) && g.flags[fl.partner].marked)
        throw std::invalid_argument("mark_flag: would create a double marked tadpole");
    MarkedGraph out = g;
    out.flags[flag].marked = true;
    out.marked_order.insert(out.marked_order.begin(), flag);
    return {std::move(out), 1};
}

int marked_leg_count(const MarkedGraph& g) {
    int t = 0;
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) t += g.is_leg(f) && g.flags[f].marked;
    return t;
}

MarkedGraph core(const MarkedGraph& g) {
    std::vector<char> drop(g.flags.size(), 0);
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) drop[f] = g.is_leg(f) && g.flags[f].marked;
    MarkedGraph out = remove_flags(g, drop);
    for (auto& fl : out.flags) fl.label = 0;
    return out;
}

MarkedGraph add_marked_leg(const MarkedGraph& g) {
    MarkedGraph out = g;
    const int n = g.num_legs();
    const int f = static_cast<int>(out.flags.size());
    const int label = (n > 0 && g.unlabeled()) ? 0 : n + 1;
    out.flags.push_back({g.dv, f, true, label});
    out.marked_order.push_back(f);
    return out;
}

MarkedGraph build_theta(int g, int l, int p) {
    const int m = 3 * (g - 1) + 2 * l;
    if (g < 1 || m < 0 || p < 0 || p >= g || p > m || (g - p) % 2 == 0)
        throw std::invalid_argument("build_theta: invalid parameters");
    const int t = (g - 1 - p) / 2;
    const int y = (m - p) / 2;
    MarkedGraph out;
    out.num_vertices = 1 + p + t + y;
    out.dv = 0;
    auto add_edge = [&](int v) {
        const int f = static_cast<int>(out.flags.size());
        out.flags.push_back({0, f + 1, true, 0});
        out.flags.push_back({v, f, false, 0});
        out.edge_order.push_back(f);
        out.marked_order.push_back(f);
    };
    auto add_leg = [&](int v) {
        const int f = static_cast<int>(out.flags.size());
        out.flags.push_back({v, f, false, 0});
    };
    int v = 1;
    for (int i = 0; i < p; ++i, ++v) {
        add_edge(v);
        add_edge(v);
        add_leg(v);
    }
    for (int i = 0; i < t; ++i, ++v)
        for (int j = 0; j < 3; ++j) add_edge(v);
    for (int i = 0; i < y; ++i, ++v) {
        add_edge(v);
        add_leg(v);
        add_leg(v);
    }
    return out;
}

MarkedGraph cut_edge(const MarkedGraph& g, int flag) {
    if (flag < 0 || flag >= static_cast<int>(g.flags.size()) || g.is_leg(flag))
        throw std::invalid_argument("cut_edge: not an edge");
    if (graph_type(g).g < 2) throw std::invalid_argument("cut_edge: genus below 2");
    if (!connected(g, edge_id(g, flag))) throw std::invalid_argument("cut_edge: edge disconnects");
    const int partner = g.flags[flag].partner;
    const int n = g.num_legs();
    const bool labeled = n == 0 || !g.unlabeled();
    MarkedGraph out = g;
    out.flags[flag].partner = flag;
    out.flags[partner].partner = partner;
    out.flags[flag].label = labeled ? n + 1 : 0;
    out.flags[partner].label = labeled ? n + 2 : 0;
    out.edge_order.erase(std::remove_if(out.edge_order.begin(), out.edge_order.end(),
                                        [&](int e) { return e == flag || e == partner; }),
                         out.edge_order.end());
    return out;
}

MarkedGraph relabel_legs(const MarkedGraph& g, const Permutation& sigma) {
    if (sigma.degree() != g.num_legs()) throw std::invalid_argument("relabel_legs: degree mismatch");
    MarkedGraph out = g;
    for (auto& fl : out.flags)
        if (fl.label > 0) fl.label = sigma(fl.label - 1) + 1;
    return out;
}

MarkedGraph label_legs(const MarkedGraph& g) {
    MarkedGraph out = g;
    int next = 1;
    for (int f = 0; f < static_cast<int>(out.flags.size()); ++f)
        if (out.is_leg(f)) out.flags[f].label = next++;
    return out;
}

MarkedGraph unlabel_legs(const MarkedGraph& g) {
    MarkedGraph out = g;
    for (auto& fl : out.flags) fl.label = 0;
    return out;
}

MarkedGraph renumber(const MarkedGraph& g, const std::vector<int>& vertex_map,
                     const std::vector<int>& flag_map) {
    MarkedGraph out;
    out.num_vertices = g.num_vertices;
    out.dv = vertex_map[g.dv];
    out.flags.resize(g.flags.size());
    for (std::size_t f = 0; f < g.flags.size(); ++f) {
        Flag fl = g.flags[f];
        fl.vertex = vertex_map[fl.vertex];
        fl.partner = flag_map[fl.partner];
        out.flags[flag_map[f]] = fl;
    }
    for (int e : g.edge_order) out.edge_order.push_back(flag_map[e]);
    for (int d : g.marked_order) out.marked_order.push_back(flag_map[d]);
    return out;
}

std::vector<SignedPermutation> leg_symmetry_group(const MarkedGraph& g) {
    if (has_odd_automorphism(g)) throw std::domain_error("leg_symmetry_group: vanishing class");
    const int n = g.num_legs();
    std::vector<int> label_of(g.flags.size(), 0);
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f)
        if (g.is_leg(f)) label_of[f] = g.flags[f].label;
    if (n > 0 && g.unlabeled()) throw std::invalid_argument("leg_symmetry_group: legs are unlabeled");

    std::vector<std::pair<Permutation, int>> gens;
    for (const auto& a : automorphisms(unlabel_legs(g))) {
        std::vector<int> image(n);
        for (int f = 0; f < static_cast<int>(g.flags.size()); ++f)
            if (g.is_leg(f)) image[label_of[f] - 1] = label_of[a.flag_map[f]] - 1;
        gens.emplace_back(Permutation(image), a.sign);
    }
    std::map<Permutation, int> group{{Permutation::identity(n), 1}};
    std::vector<std::pair<Permutation, int>> frontier{{Permutation::identity(n), 1}};
    while (!frontier.empty()) {
        std::vector<std::pair<Permutation, int>> next;
        for (const auto& [p, s] : frontier)
            for (const auto& [q, t] : gens) {
                Permutation r = q * p;
                auto [it, inserted] = group.emplace(r, s * t);
                if (inserted)
                    next.emplace_back(r, s * t);
                else if (it->second != s * t)
                    throw std::domain_error("leg_symmetry_group: inconsistent signs");
            }
        frontier.swap(next);
    }
    std::vector<SignedPermutation> out;
    for (const auto& [p, s] : group) out.push_back({p, s});
    return out;
}

std::string encode(const MarkedGraph& g) {
    std::ostringstream os;
    os << g.num_vertices << ' ' << g.dv << " ;";
    for (const auto& fl : g.flags)
        os << ' ' << fl.vertex << ',' << fl.partner << ',' << (fl.marked ? 1 : 0) << ',' << fl.label;
    os << " ;";
    for (int e : g.edge_order) os << ' ' << e;
    os << " ;";
    for (int d : g.marked_order) os << ' ' << d;
    return os.str();
}

MarkedGraph decode(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::invalid_argument("decode: expected four sections");
    MarkedGraph g;
    {
        std::istringstream is(parts[0]);
        if (!(is >> g.num_vertices >> g.dv)) throw std::invalid_argument("decode: bad header");
    }
    {
        std::istringstream is(parts[1]);
        std::string tok;
        while (is >> tok) {
            Flag fl;
            int marked = 0;
            char c1, c2, c3;
            std::istringstream ts(tok);
            if (!(ts >> fl.vertex >> c1 >> fl.partner >> c2 >> marked >> c3 >> fl.label) || c1 != ',' ||
                c2 != ',' || c3 != ',')
                throw std::invalid_argument("decode: bad flag '" + tok + "'");
            fl.marked = marked != 0;
            g.flags.push_back(fl);
        }
    }
    auto ints = [](const std::string& s) {
        std::istringstream is(s);
        std::vector<int> v;
        int x;
        while (is >> x) v.push_back(x);
        if (!is.eof()) throw std::invalid_argument("decode: bad integer list");
        return v;
    };
    g.edge_order = ints(parts[2]);
    g.marked_order = ints(parts[3]);
    auto problems = validate(g);
    if (!problems.empty()) throw std::invalid_argument("decode: " + problems.front());
    return g;
}

}  // namespace mgc
