#include "blch/homotopy.hpp"

#include <numeric>

namespace blch {

namespace {

// Find-with-path-compression union-find over augmentation indices.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

int betti_at(const ChainComplex& cx, int k) {
    const auto b = betti(cx);
    auto it = b.find(k);
    return it == b.end() ? 0 : it->second;
}

}  // namespace

std::optional<HomotopyWitness> homotopy_witness(const DGA& dga, const Augmentation& eps1,
                                                const Augmentation& eps2) {
    const ChainComplex cx = bilinearize(dga, eps1, eps2);
    const auto deg0 = dga.indices_of_degree(0);
    const auto degm1 = dga.indices_of_degree(-1);

    // One equation per degree-0 generator; one unknown per degree -1
    // generator. The coefficient matrix is the transpose of d_0.
    const gf2::BitMatrix system = cx.boundary_matrix(0).transposed();
    gf2::Vec rhs(deg0.size());
    for (std::size_t r = 0; r < deg0.size(); ++r)
        rhs[r] = static_cast<std::uint8_t>(eps1.value(deg0[r]) ^ eps2.value(deg0[r]));

    const auto x = gf2::solve(system, rhs);
    if (!x) return std::nullopt;

    HomotopyWitness w;
    for (std::size_t c = 0; c < degm1.size(); ++c)
        w.kbar[dga.generators[degm1[c]].name] = (*x)[c];
    return w;
}

int witness_derivation(const DGA& dga, const Augmentation& eps1,
                       const Augmentation& eps2, const HomotopyWitness& w,
                       const Word& word) {
    int acc = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = w.kbar.find(dga.generators[word[i]].name);
        int kbar = it == w.kbar.end() ? 0 : it->second;
        if (!kbar) continue;
        int coeff = 1;
        for (std::size_t j = 0; j < i && coeff; ++j) coeff = eps1.value(word[j]);
        for (std::size_t j = i + 1; j < word.size() && coeff; ++j)
            coeff = eps2.value(word[j]);
        acc ^= (kbar & coeff);
    }
    return acc;
}

int tau0_rank(const DGA& dga, const Augmentation& eps1, const Augmentation& eps2) {
    const ChainComplex cx = bilinearize(dga, eps1, eps2);
    const auto deg0 = dga.indices_of_degree(0);

    // tau_0 is eps1 - eps2 at chain level; its rank on homology is nonzero
    // exactly when the functional is nonzero on some degree-0 cycle.
    const auto cycles = gf2::nullspace_basis(cx.boundary_matrix(0));
    for (const gf2::Vec& z : cycles) {
        int dot = 0;
        for (std::size_t c = 0; c < deg0.size(); ++c)
            if (z[c]) dot ^= eps1.value(deg0[c]) ^ eps2.value(deg0[c]);
        if (dot) return 1;
    }
    return 0;
}

bool homotopic_by_dimension(const DGA& dga, const Augmentation& eps1,
                            const Augmentation& eps2) {
    const int n = dga.ambient_dim;
    const int dim_top = betti_at(bilinearize(dga, eps2, eps1), n);
    const int dim_neg = betti_at(bilinearize(dga, eps1, eps2), -1);
    const int d = dim_top - dim_neg;
    if (d == 1) return true;
    if (d == 0) return false;
    throw DomainError("homotopy: dimension criterion gave D = " + std::to_string(d) +
                      "; input is not a connected-Legendrian DGA");
}

HomotopyPartition homotopy_classes(const DGA& dga, HomotopyMethod method,
                                   std::size_t cap) {
    const auto augs = enumerate_augmentations(dga, cap);
    const std::size_t m = augs.size();

    HomotopyPartition part;
    part.method = method;
    part.decisions.assign(m, std::vector<HomotopyPartition::PairDecision>(m));

    const bool want_witness =
        method == HomotopyMethod::Witness || method == HomotopyMethod::CrossCheck;
    const bool want_dimension =
        method == HomotopyMethod::Dimension || method == HomotopyMethod::CrossCheck;

    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            auto& dec = part.decisions[i][j];
            if (want_witness)
                dec.witness = homotopy_witness(dga, augs[i], augs[j]).has_value();
            if (want_dimension)
                dec.dimension = homotopic_by_dimension(dga, augs[i], augs[j]);
            if (method == HomotopyMethod::CrossCheck && *dec.witness != *dec.dimension)
                throw DomainError("homotopy: witness and dimension methods disagree on pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            rel[i][j] = want_witness ? *dec.witness : *dec.dimension;
        }
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (rel[i][j] != rel[j][i])
                throw DomainError("homotopy: relation is not symmetric on pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");

    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (rel[i][j]) uf.unite(i, j);

    // Components must be cliques, otherwise the pairwise relation failed
    // transitivity somewhere.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (uf.find(i) == uf.find(j) && !rel[i][j])
                throw DomainError("homotopy: relation is not transitive on pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < m; ++i) by_root[uf.find(i)].push_back(i);
    for (auto& [root, members] : by_root) part.classes.push_back(members);
    return part;
}

std::vector<std::vector<LaurentPolynomial>> blch_table(const DGA& dga, std::size_t cap) {
    const auto augs = enumerate_augmentations(dga, cap);
    const std::size_t m = augs.size();
    std::vector<std::vector<LaurentPolynomial>> table(m);
    for (std::size_t i = 0; i < m; ++i) {
        table[i].reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            table[i].push_back(poincare(bilinearize(dga, augs[i], augs[j])));
    }
    return table;
}

}  // namespace blch
