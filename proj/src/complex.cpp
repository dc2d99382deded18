#include "mgc/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mgc {

long long SparseMatrix::at(int row, int col) const {
    for (const auto& [i, v] : columns[col])
        if (i == row) return v;
    return 0;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t k = 0;
    for (const auto& c : columns) k += c.size();
    return k;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
    SparseMatrix out(rows, other.cols);
    for (int j = 0; j < other.cols; ++j) {
        std::map<int, long long> acc;
        for (const auto& [k, b] : other.columns[j])
            for (const auto& [i, a] : columns[k]) acc[i] += a * b;
        for (const auto& [i, v] : acc)
            if (v != 0) out.columns[j].emplace_back(i, v);
    }
    return out;
}

std::vector<std::vector<long long>> SparseMatrix::dense() const {
    std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : columns[j]) out[i][j] = v;
    return out;
}

long long SignedPermutationMatrix::trace() const {
    long long t = 0;
    for (int j = 0; j < size(); ++j)
        if (target[j] == j) t += sign[j];
    return t;
}

SparseMatrix SignedPermutationMatrix::sparse() const {
    SparseMatrix out(size(), size());
    for (int j = 0; j < size(); ++j) out.columns[j].emplace_back(target[j], sign[j]);
    return out;
}

int EquivariantComplex::dim(int i) const {
    if (i < 0 || i > top_degree()) return 0;
    return static_cast<int>(basis[i].size());
}

int EquivariantComplex::total_dim() const {
    int t = 0;
    for (const auto& b : basis) t += static_cast<int>(b.size());
    return t;
}

int EquivariantComplex::find(int i, const std::string& key) const {
    if (i < 0 || i > top_degree()) return -1;
    auto it = index[i].find(key);
    return it == index[i].end() ? -1 : it->second;
}

namespace {

int excess_of(int g, int n, int r) { return 3 * (g - 1) + 2 * (n - r); }

MarkedGraph graph_from_pairs(int nv, const std::vector<std::pair<int, int>>& pairs,
                             const std::vector<int>& mult) {
    MarkedGraph out;
    out.num_vertices = nv;
    out.dv = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (int t = 0; t < mult[k]; ++t) {
            const int f = static_cast<int>(out.flags.size());
            out.flags.push_back({pairs[k].first, f + 1, false, 0});
            out.flags.push_back({pairs[k].second, f, false, 0});
            out.edge_order.push_back(f);
        }
    return out;
}

bool is_connected(const MarkedGraph& g) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f)
        if (!g.is_leg(f)) adj[g.flags[f].vertex].push_back(g.flags[g.flags[f].partner].vertex);
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.num_vertices;
}

// Leg-free multigraphs with loops only at vertex 0, up to isomorphism.
std::vector<MarkedGraph> skeletons(int nv, int ne, int n) {
    std::vector<std::pair<int, int>> pairs{{0, 0}};
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
    std::vector<int> mult(pairs.size(), 0);
    std::map<std::string, MarkedGraph> found;
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k + 1 == pairs.size()) {
            mult[k] = left;
            std::vector<int> deg(nv, 0);
            for (std::size_t q = 0; q < pairs.size(); ++q) {
                deg[pairs[q].first] += mult[q];
                deg[pairs[q].second] += mult[q];
            }
            // neutral vertices ordered by degree: always achievable by renaming
            for (int v = 2; v < nv; ++v)
                if (deg[v] > deg[v - 1]) return;
            int deficit = 0;
            for (int v = 1; v < nv; ++v) deficit += std::max(0, 3 - deg[v]);
            if (deficit > n) return;
            MarkedGraph g = graph_from_pairs(nv, pairs, mult);
            if (!is_connected(g)) return;
            found.emplace(canonical_key(g), std::move(g));
            return;
        }
        for (int c = 0; c <= left; ++c) {
            mult[k] = c;
            rec(k + 1, left - c);
        }
        mult[k] = 0;
    };
    if (pairs.size() == 1) {
        mult[0] = ne;
        MarkedGraph g = graph_from_pairs(nv, pairs, mult);
        return {g};
    }
    rec(0, ne);
    std::vector<MarkedGraph> out;
    for (auto& [k, g] : found) out.push_back(std::move(g));
    return out;
}

void attach_legs(const MarkedGraph& skel, int n, std::map<std::string, MarkedGraph>& out) {
    const int nv = skel.num_vertices;
    std::vector<int> legs(nv, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nv - 1) {
            legs[v] = left;
            for (int w = 1; w < nv; ++w)
                if (skel.valence(w) + legs[w] < 3) return;
            MarkedGraph g = skel;
            for (int w = 0; w < nv; ++w)
                for (int t = 0; t < legs[w]; ++t) {
                    const int f = static_cast<int>(g.flags.size());
                    g.flags.push_back({w, f, false, 0});
                }
            out.emplace(canonical_key(g), std::move(g));
            return;
        }
        for (int c = 0; c <= left; ++c) {
            legs[v] = c;
            rec(v + 1, left - c);
        }
    };
    rec(0, n);
}

void attach_marks(const MarkedGraph& g, int r, std::map<std::string, MarkedGraph>& out) {
    std::vector<int> dv_legs, choices;  // choices: one candidate flag per edge at dv
    for (int f = 0; f < static_cast<int>(g.flags.size()); ++f) {
        if (g.flags[f].vertex != g.dv) continue;
        if (g.is_leg(f))
            dv_legs.push_back(f);
        else if (!g.is_tadpole(f) || f < g.flags[f].partner)
            choices.push_back(f);
    }
    const int k = static_cast<int>(choices.size());
    for (int a = 0; a <= static_cast<int>(dv_legs.size()); ++a)
        for (long mask = 0; mask < (1L << k); ++mask) {
            const int s = a + __builtin_popcountl(mask);
            if (s < r) continue;
            MarkedGraph h = g;
            for (int t = 0; t < a; ++t) h.flags[dv_legs[t]].marked = true;
            for (int t = 0; t < k; ++t)
                if (mask >> t & 1) h.flags[choices[t]].marked = true;
            for (int f = 0; f < static_cast<int>(h.flags.size()); ++f)
                if (h.flags[f].marked) h.marked_order.push_back(f);
            out.emplace(canonical_key(h), std::move(h));
        }
}

// All labelings of an unlabeled graph, deduplicated, vanishing ones dropped.
std::vector<OrientedClass> labelings(const MarkedGraph& u) {
    std::vector<int> legs;
    for (int f = 0; f < static_cast<int>(u.flags.size()); ++f)
        if (u.is_leg(f)) legs.push_back(f);
    std::stable_sort(legs.begin(), legs.end(), [&](int a, int b) {
        return std::pair(u.flags[a].vertex, u.flags[a].marked) < std::pair(u.flags[b].vertex, u.flags[b].marked);
    });
    // groups of interchangeable legs: consecutive runs
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i == 0 || u.flags[legs[i]].vertex != u.flags[legs[i - 1]].vertex ||
            u.flags[legs[i]].marked != u.flags[legs[i - 1]].marked)
            groups.emplace_back();
        groups.back().push_back(legs[i]);
    }
    const int n = static_cast<int>(legs.size());
    std::vector<int> fill(groups.size(), 0);
    MarkedGraph h = u;
    std::map<std::string, OrientedClass> found;
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            Canonical c = canonical_form(h);
            if (!c.cls.vanishing) found.emplace(c.cls.key, std::move(c.cls));
            return;
        }
        for (std::size_t q = 0; q < groups.size(); ++q) {
            if (fill[q] == static_cast<int>(groups[q].size())) continue;
            h.flags[groups[q][fill[q]]].label = label;
            ++fill[q];
            rec(label + 1);
            --fill[q];
        }
    };
    rec(1);
    std::vector<OrientedClass> out;
    for (auto& [k, c] : found) out.push_back(std::move(c));
    return out;
}

std::uint64_t fnv1a(const std::string& text, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

EquivariantComplex empty_shell(int g, int n, int r) {
    EquivariantComplex c;
    c.g = g;
    c.n = n;
    c.r = r;
    c.excess = excess_of(g, n, r);
    return c;
}

std::vector<std::pair<int, long long>> differential_column(const EquivariantComplex& c, int i, int j) {
    const MarkedGraph& gamma = c.basis[i][j].graph;
    std::map<int, long long> acc;
    auto add = [&](const MarkedGraph& h, int s) {
        const Canonical k = canonical_form(h);
        if (k.cls.vanishing) return;
        const int row = c.find(i - 1, k.cls.key);
        if (row < 0)
            throw std::logic_error("differential: target class missing from basis (" + encode(k.cls.graph) + ")");
        acc[row] += s * k.sign;
    };
    for (int e : gamma.edge_order)
        for (const auto& [h, s] : contract_edge(gamma, e)) add(h, s);
    const int mark_sign = gamma.num_edges() % 2 == 0 ? 1 : -1;
    for (int f = 0; f < static_cast<int>(gamma.flags.size()); ++f) {
        const Flag& fl = gamma.flags[f];
        if (fl.vertex != gamma.dv || fl.marked) continue;
        if (!gamma.is_leg(f) && gamma.flags[fl.partner].marked) continue;
        const auto [h, s] = mark_flag(gamma, f);
        add(h, s * mark_sign);
    }
    std::vector<std::pair<int, long long>> col;
    for (const auto& [row, v] : acc)
        if (v != 0) col.emplace_back(row, v);
    return col;
}

}  // namespace

std::vector<MarkedGraph> enumerate_unlabeled(int g, int n, int r) {
    if (g < 1 || n < 0 || r < 0 || excess_of(g, n, r) < 0) return {};
    const int emax = 3 * (g - 1) + n - r;
    std::map<std::string, MarkedGraph> marked;
    for (int ne = std::max(0, g - 1); ne <= emax; ++ne) {
        const int nv = ne - g + 2;
        std::map<std::string, MarkedGraph> legged;
        for (const auto& skel : skeletons(nv, ne, n)) attach_legs(skel, n, legged);
        for (const auto& [k, lg] : legged) attach_marks(lg, r, marked);
    }
    std::vector<MarkedGraph> out;
    for (auto& [k, m] : marked) out.push_back(std::move(m));
    return out;
}

std::vector<OrientedClass> enumerate_marked_graphs(int g, int n, int r, Execution exec) {
    const auto unlabeled = enumerate_unlabeled(g, n, r);
    std::vector<std::vector<OrientedClass>> parts(unlabeled.size());
    const long count = static_cast<long>(unlabeled.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long q = 0; q < count; ++q) parts[q] = labelings(unlabeled[q]);
    } else {
        for (long q = 0; q < count; ++q) parts[q] = labelings(unlabeled[q]);
    }
    std::vector<std::pair<int, OrientedClass>> all;
    for (auto& p : parts)
        for (auto& c : p) {
            const int d = graph_type(c.graph).degree;
            all.emplace_back(d, std::move(c));
        }
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return std::tie(a.first, a.second.key) < std::tie(b.first, b.second.key); });
    std::vector<OrientedClass> out;
    out.reserve(all.size());
    for (auto& [d, c] : all) out.push_back(std::move(c));
    return out;
}

SparseMatrix assemble_differential(const EquivariantComplex& c, int i, Execution exec) {
    const int cols = c.dim(i);
    SparseMatrix d(c.dim(i - 1), cols);
    if (i == 0) return d;
    if (exec == Execution::parallel) {
        // exceptions must not escape an OpenMP region
        std::string error;
#pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < cols; ++j) {
            try {
                d.columns[j] = differential_column(c, i, j);
            } catch (const std::exception& e) {
#pragma omp critical
                error = e.what();
            }
        }
        if (!error.empty()) throw std::logic_error(error);
    } else {
        for (int j = 0; j < cols; ++j) d.columns[j] = differential_column(c, i, j);
    }
    return d;
}

void check_d_squared(const EquivariantComplex& c) {
    for (int i = 2; i <= c.top_degree(); ++i) {
        const SparseMatrix dd = c.differential[i - 1].multiply(c.differential[i]);
        for (int j = 0; j < dd.cols; ++j)
            if (!dd.columns[j].empty()) {
                const int row = dd.columns[j].front().first;
                throw std::logic_error("d^2 != 0 in B(" + std::to_string(c.g) + "," + std::to_string(c.n) + "," +
                                       std::to_string(c.r) + ") from degree " + std::to_string(i) + ": [" +
                                       encode(c.basis[i][j].graph) + "] -> [" +
                                       encode(c.basis[i - 2][row].graph) + "] coefficient " +
                                       std::to_string(dd.columns[j].front().second));
            }
    }
}

EquivariantComplex assemble_complex(int g, int n, int r, std::vector<OrientedClass> classes, Execution exec) {
    EquivariantComplex c = empty_shell(g, n, r);
    if (c.excess < 0) return c;
    c.basis.assign(c.excess + 1, {});
    for (auto& cls : classes) {
        const int d = graph_type(cls.graph).degree;
        if (d < 0 || d > c.excess)
            throw std::logic_error("class degree " + std::to_string(d) + " outside [0, m]");
        c.basis[d].push_back(std::move(cls));
    }
    c.index.assign(c.basis.size(), {});
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
        std::sort(c.basis[i].begin(), c.basis[i].end(),
                  [](const OrientedClass& a, const OrientedClass& b) { return a.key < b.key; });
        for (std::size_t j = 0; j < c.basis[i].size(); ++j) c.index[i].emplace(c.basis[i][j].key, static_cast<int>(j));
    }
    c.differential.resize(c.basis.size());
    for (int i = 0; i <= c.top_degree(); ++i) c.differential[i] = assemble_differential(c, i, exec);
    check_d_squared(c);
    return c;
}

EquivariantComplex build_complex(int g, int n, int r, const BuildOptions& options) {
    std::string path;
    if (!options.cache_dir.empty()) {
        path = cache_path(options.cache_dir, g, n, r);
        std::string why;
        if (auto cached = load_cache(path, g, n, r, &why)) return std::move(*cached);
        if (options.verbose && !why.empty()) std::cerr << "cache ignored: " << why << "\n";
    }
    if (options.verbose) std::cerr << "enumerating B(" << g << "," << n << "," << r << ")\n";
    EquivariantComplex c = assemble_complex(g, n, r, enumerate_marked_graphs(g, n, r, options.exec), options.exec);
    if (!path.empty()) save_cache(c, path);
    return c;
}

ChainMap stabilization_map(const EquivariantComplex& source, const EquivariantComplex& target) {
    if (target.g != source.g || target.n != source.n + 1 || target.r != source.r + 1)
        throw std::invalid_argument("stabilization_map: target must be B(g,n+1,r+1)");
    ChainMap psi;
    psi.source_n = source.n;
    psi.target_n = target.n;
    for (int i = 0; i <= source.top_degree(); ++i) {
        SparseMatrix m(target.dim(i), source.dim(i));
        for (int j = 0; j < source.dim(i); ++j) {
            const Canonical k = canonical_form(add_marked_leg(source.basis[i][j].graph));
            if (k.cls.vanishing) continue;
            const int row = target.find(i, k.cls.key);
            if (row < 0) throw std::logic_error("stabilization_map: image class missing");
            m.columns[j].emplace_back(row, k.sign);
        }
        psi.matrices.push_back(std::move(m));
    }
    for (int i = 1; i <= source.top_degree(); ++i) {
        const SparseMatrix lhs = target.differential[i].multiply(psi.matrices[i]);
        const SparseMatrix rhs = psi.matrices[i - 1].multiply(source.differential[i]);
        if (!(lhs == rhs)) throw std::logic_error("stabilization_map: not a chain map in degree " + std::to_string(i));
    }
    return psi;
}

SignedPermutationMatrix group_action_matrix(const EquivariantComplex& c, int i, const Permutation& sigma) {
    if (sigma.degree() != c.n) throw std::invalid_argument("group_action_matrix: wrong degree");
    SignedPermutationMatrix out;
    const int d = c.dim(i);
    out.target.resize(d);
    out.sign.resize(d);
    for (int j = 0; j < d; ++j) {
        const Canonical k = canonical_form(relabel_legs(c.basis[i][j].graph, sigma));
        const int row = c.find(i, k.cls.key);
        if (row < 0 || k.cls.vanishing) throw std::logic_error("group_action_matrix: image outside basis");
        out.target[j] = row;
        out.sign[j] = k.sign;
    }
    return out;
}

ClassFunction chain_character(const EquivariantComplex& c, int i) {
    ClassFunction chi(c.n);
    for (const auto& mu : chi.cycle_types())
        chi.set(mu, Rational(group_action_matrix(c, i, Permutation::of_cycle_type(mu)).trace()));
    return chi;
}

std::string cache_path(const std::string& dir, int g, int n, int r) {
    return (std::filesystem::path(dir) /
            ("B_" + std::to_string(g) + "_" + std::to_string(n) + "_" + std::to_string(r) + ".mgc"))
        .string();
}

void save_cache(const EquivariantComplex& c, const std::string& path) {
    std::ostringstream body;
    for (int i = 0; i <= c.top_degree(); ++i)
        for (const auto& cls : c.basis[i]) body << i << '\t' << encode(cls.graph) << '\n';
    const std::string text = body.str();
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << "mgc-cache " << c.version << "\n";
        out << "type " << c.g << ' ' << c.n << ' ' << c.r << "\n";
        out << "counts";
        for (int i = 0; i <= c.top_degree(); ++i) out << ' ' << c.dim(i);
        out << "\n";
        out << "checksum " << std::hex << fnv1a(text) << std::dec << "\n";
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

std::optional<EquivariantComplex> load_cache(const std::string& path, int g, int n, int r, std::string* why) {
    auto fail = [&](const std::string& msg) -> std::optional<EquivariantComplex> {
        if (why) *why = msg;
        return std::nullopt;
    };
    std::ifstream in(path);
    if (!in) return fail("");
    std::string line, word;
    int version = -1;
    if (!std::getline(in, line) || !(std::istringstream(line) >> word >> version) || word != "mgc-cache")
        return fail(path + ": bad header");
    if (version != kEnumerationVersion) return fail(path + ": version " + std::to_string(version));
    int cg, cn, cr;
    if (!std::getline(in, line) || !(std::istringstream(line) >> word >> cg >> cn >> cr) || word != "type")
        return fail(path + ": bad type line");
    if (cg != g || cn != n || cr != r) return fail(path + ": type mismatch");
    std::vector<int> counts;
    if (!std::getline(in, line)) return fail(path + ": missing counts");
    {
        std::istringstream is(line);
        is >> word;
        int x;
        while (is >> x) counts.push_back(x);
    }
    std::uint64_t checksum = 0;
    if (!std::getline(in, line) || !(std::istringstream(line) >> word >> std::hex >> checksum) || word != "checksum")
        return fail(path + ": missing checksum");
    std::string body;
    while (std::getline(in, line)) body += line + "\n";
    if (fnv1a(body) != checksum) return fail(path + ": checksum mismatch");

    std::vector<OrientedClass> classes;
    std::vector<int> seen(counts.size(), 0);
    std::istringstream lines(body);
    try {
        while (std::getline(lines, line)) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos) return fail(path + ": malformed line");
            const int d = std::stoi(line.substr(0, tab));
            MarkedGraph graph = decode(line.substr(tab + 1));
            Canonical k = canonical_form(graph);
            if (k.cls.vanishing || k.sign != 1 || !(k.cls.graph == graph) || graph_type(graph).degree != d)
                return fail(path + ": stored class is not canonical");
            if (d < 0 || d >= static_cast<int>(counts.size())) return fail(path + ": degree out of range");
            ++seen[d];
            classes.push_back(std::move(k.cls));
        }
    } catch (const std::exception& e) {
        return fail(path + ": " + e.what());
    }
    if (seen != counts) return fail(path + ": counts mismatch");
    try {
        EquivariantComplex c = assemble_complex(g, n, r, std::move(classes));
        return c;
    } catch (const std::logic_error& e) {
        return fail(path + ": " + e.what());
    }
}

}  // namespace mgc
