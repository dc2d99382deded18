#include "mgc/homology.hpp"

#include <optional>
#include <stdexcept>

namespace mgc {

long long HomologyProfile::euler_chain() const {
    long long t = 0;
    for (std::size_t i = 0; i < chain_dims.size(); ++i) t += (i % 2 ? -1 : 1) * chain_dims[i];
    return t;
}

long long HomologyProfile::euler_homology() const {
    long long t = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) t += (i % 2 ? -1 : 1) * dims[i];
    return t;
}

long long HomologyProfile::multiplicity(int i, const Partition& lambda) const {
    if (i < 0 || i > top_degree()) return 0;
    return decompositions[i][lambda];
}

std::vector<long long> differential_ranks(const EquivariantComplex& c) {
    std::vector<long long> ranks(c.basis.size(), 0);
    const int top = c.top_degree();
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i <= top; ++i) ranks[i] = exact_rank(c.differential[i]);
    return ranks;
}

namespace {

std::vector<long long> dims_from_ranks(const EquivariantComplex& c, const std::vector<long long>& ranks) {
    std::vector<long long> out(c.basis.size());
    for (int i = 0; i <= c.top_degree(); ++i) {
        const long long next = i + 1 <= c.top_degree() ? ranks[i + 1] : 0;
        out[i] = c.dim(i) - ranks[i] - next;
        if (out[i] < 0) throw std::logic_error("negative homology dimension");
    }
    return out;
}

// Echelon basis of im d_i inside C_{i-1}, certified against the exact rank.
ModpEchelon certified_image(const EquivariantComplex& c, int i, long long exact) {
    static const std::uint32_t primes[] = {kDefaultPrime, 2147483587u, 2147483579u, 2147483563u};
    for (std::uint32_t p : primes) {
        ModpEchelon e = modp_echelon(c.differential[i].columns, p);
        if (e.rank() == exact) return e;
    }
    throw std::logic_error("no certifying prime for the image of d_" + std::to_string(i));
}

ClassFunction character_from(const EquivariantComplex& c, int i, const ModpEchelon* in_i,
                             const ModpEchelon* in_prev) {
    ClassFunction chi(c.n);
    for (const auto& mu : chi.cycle_types()) {
        const Permutation sigma = Permutation::of_cycle_type(mu);
        const SignedPermutationMatrix mi = group_action_matrix(c, i, sigma);
        long long t = mi.trace();
        if (in_i) t -= trace_on_span(*in_i, mi);
        if (in_prev) t -= trace_on_span(*in_prev, group_action_matrix(c, i - 1, sigma));
        chi.set(mu, Rational(t));
    }
    return chi;
}

}  // namespace

std::vector<long long> homology_dimensions(const EquivariantComplex& c) {
    return dims_from_ranks(c, differential_ranks(c));
}

ClassFunction homology_character(const EquivariantComplex& c, int i) {
    if (i < 0 || i > c.top_degree()) return ClassFunction(c.n);
    const long long rank_i = i >= 1 ? exact_rank(c.differential[i]) : 0;
    const long long rank_next = i + 1 <= c.top_degree() ? exact_rank(c.differential[i + 1]) : 0;
    if (c.dim(i) - rank_i - rank_next == 0) return ClassFunction(c.n);
    std::optional<ModpEchelon> in_i, in_prev;
    if (rank_next > 0) in_i = certified_image(c, i + 1, rank_next);
    if (rank_i > 0) in_prev = certified_image(c, i, rank_i);
    return character_from(c, i, in_i ? &*in_i : nullptr, in_prev ? &*in_prev : nullptr);
}

HomologyProfile homology_decomposition(const EquivariantComplex& c) {
    HomologyProfile h;
    h.g = c.g;
    h.n = c.n;
    h.r = c.r;
    for (int i = 0; i <= c.top_degree(); ++i) h.chain_dims.push_back(c.dim(i));
    h.ranks = differential_ranks(c);
    h.dims = dims_from_ranks(c, h.ranks);
    const int top = c.top_degree();
    // images[i] = echelon basis of im d_i inside C_{i-1}
    std::vector<std::optional<ModpEchelon>> images(c.basis.size());
    for (int i = 1; i <= top; ++i)
        if (h.ranks[i] > 0 && (h.dims[i - 1] > 0 || h.dims[i] > 0))
            images[i] = certified_image(c, i, h.ranks[i]);
    h.characters.assign(c.basis.size(), ClassFunction(c.n));
    for (int i = 0; i <= top; ++i) {
        if (h.dims[i] == 0) continue;
        const ModpEchelon* in_i = i + 1 <= top && images[i + 1] ? &*images[i + 1] : nullptr;
        const ModpEchelon* in_prev = i >= 1 && images[i] ? &*images[i] : nullptr;
        h.characters[i] = character_from(c, i, in_i, in_prev);
    }
    for (int i = 0; i <= top; ++i) {
        IrrDecomposition d = decompose(h.characters[i]);
        if (d.dimension() != h.dims[i]) throw std::logic_error("homology character disagrees with rank count");
        h.decompositions.push_back(std::move(d));
    }
    if (h.euler_chain() != h.euler_homology()) throw std::logic_error("Euler characteristic mismatch");
    return h;
}

SignedPermutationMatrix compose(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b) {
    SignedPermutationMatrix out;
    out.target.resize(b.size());
    out.sign.resize(b.size());
    for (int j = 0; j < b.size(); ++j) {
        out.target[j] = a.target[b.target[j]];
        out.sign[j] = a.sign[b.target[j]] * b.sign[j];
    }
    return out;
}

std::map<Permutation, SignedPermutationMatrix> full_action(const EquivariantComplex& c, int i) {
    const int n = c.n;
    std::vector<std::pair<Permutation, SignedPermutationMatrix>> gens;
    for (int k = 0; k + 1 < n; ++k) {
        const Permutation s = Permutation::transposition(n, k, k + 1);
        gens.emplace_back(s, group_action_matrix(c, i, s));
    }
    std::map<Permutation, SignedPermutationMatrix> out;
    out.emplace(Permutation::identity(n), group_action_matrix(c, i, Permutation::identity(n)));
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& [s, ms] : gens) {
                Permutation q = s * p;
                if (out.count(q)) continue;
                out.emplace(q, compose(ms, out.at(p)));
                next.push_back(q);
            }
        frontier.swap(next);
    }
    return out;
}

IrrDecomposition projector_decomposition(const EquivariantComplex& c, int i) {
    if (c.n > 6) throw std::invalid_argument("projector_decomposition: n > 6");
    IrrDecomposition out(c.n);
    if (i < 0 || i > c.top_degree()) return out;
    const CharacterTable& table = character_table(c.n);
    std::map<int, std::map<Permutation, SignedPermutationMatrix>> actions;
    for (int j : {i - 1, i, i + 1})
        if (j >= 0 && j <= c.top_degree()) actions[j] = full_action(c, j);

    for (std::size_t a = 0; a < table.partitions.size(); ++a) {
        // columns of P_j span e_lambda C_j
        std::map<int, SparseMatrix> proj;
        for (const auto& [j, acts] : actions) {
            const int d = c.dim(j);
            std::vector<std::map<int, long long>> cols(d);
            for (const auto& [sigma, m] : acts) {
                const long long chi = table.values[a][table.index_of(sigma.cycle_type())];
                if (chi == 0) continue;
                for (int col = 0; col < d; ++col) cols[col][m.target[col]] += chi * m.sign[col];
            }
            SparseMatrix p(d, d);
            for (int col = 0; col < d; ++col)
                for (const auto& [row, v] : cols[col])
                    if (v != 0) p.columns[col].emplace_back(row, v);
            proj.emplace(j, std::move(p));
        }
        long long dim = exact_rank(proj.at(i));
        if (i >= 1) dim -= exact_rank(c.differential[i].multiply(proj.at(i)));
        if (i + 1 <= c.top_degree()) dim -= exact_rank(c.differential[i + 1].multiply(proj.at(i + 1)));
        const long long d_lambda = irreducible_dimension(table.partitions[a]);
        if (dim % d_lambda != 0) throw std::logic_error("projector: isotypic dimension not divisible");
        if (dim) out.add(table.partitions[a], dim / d_lambda);
    }
    return out;
}

}  // namespace mgc
