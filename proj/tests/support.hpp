#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blch/augment.hpp"
#include "blch/dga.hpp"

namespace blch::testsupport {

// Builds a random DGA that satisfies the differential laws by construction:
// generators are split into a bottom layer with zero differential and a top
// layer whose differentials only use bottom-layer generators, so d^2 = 0
// holds for any degree-legal choice of words.
inline DGA random_valid_dga(std::mt19937& rng, int max_generators = 6) {
    std::uniform_int_distribution<int> gen_count(2, max_generators);
    std::uniform_int_distribution<int> degree_dist(-2, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> dim_dist(1, 3);

    const int total = gen_count(rng);
    const int bottom = std::max(1, total / 2);

    std::vector<int> degrees(total);
    for (int i = 0; i < total; ++i) degrees[i] = degree_dist(rng);
    // Bias towards interesting homotopy instances: make sure degree 0 shows
    // up below and degree -1 exists somewhere reachable.
    degrees[0] = 0;
    if (bottom >= 2) degrees[1] = -1;

    std::ostringstream src;
    src << "dim " << dim_dist(rng) << "\n";
    for (int i = 0; i < total; ++i)
        src << "gen g" << i << " " << degrees[i] << "\n";

    // Candidate words over the bottom layer of the exact degree, length <= 3.
    auto candidates = [&](int target) {
        std::vector<std::vector<int>> found;
        std::vector<int> stack;
        auto dfs = [&](auto&& self, int remaining_len, int degree_so_far) -> void {
            if (found.size() >= 24) return;
            if (degree_so_far == target && !stack.empty()) found.push_back(stack);
            if (remaining_len == 0) return;
            for (int i = 0; i < bottom; ++i) {
                stack.push_back(i);
                self(self, remaining_len - 1, degree_so_far + degrees[i]);
                stack.pop_back();
            }
        };
        dfs(dfs, 3, 0);
        return found;
    };

    for (int i = 0; i < total; ++i) {
        src << "d g" << i << " = ";
        if (i < bottom) {
            src << "0\n";
            continue;
        }
        std::vector<std::string> terms;
        if (degrees[i] == 1 && coin(rng)) terms.push_back("1");
        for (const auto& word : candidates(degrees[i] - 1)) {
            if (coin(rng) && coin(rng)) continue;  // keep roughly half
            std::string term;
            for (std::size_t f = 0; f < word.size(); ++f) {
                if (f) term += "*";
                term += "g" + std::to_string(word[f]);
            }
            terms.push_back(term);
            if (terms.size() >= 5) break;
        }
        if (terms.empty()) {
            src << "0\n";
            continue;
        }
        for (std::size_t t = 0; t < terms.size(); ++t)
            src << (t ? " + " : "") << terms[t];
        src << "\n";
    }
    return parse_dga(src.str());
}

// Brute force over all functionals on the degree -1 generators: does any
// Kbar satisfy Kbar(d^{e1,e2} c) = e1(c) - e2(c) on every degree-0 chord?
inline bool witness_exists_brute_force(const DGA& dga, const Augmentation& e1,
                                       const Augmentation& e2) {
    const ChainComplex cx = bilinearize(dga, e1, e2);
    const auto deg0 = dga.indices_of_degree(0);
    const auto degm1 = dga.indices_of_degree(-1);
    const std::size_t d = degm1.size();

    std::map<std::uint32_t, std::size_t> col;
    for (std::size_t c = 0; c < d; ++c) col[degm1[c]] = c;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        bool ok = true;
        for (std::size_t r = 0; r < deg0.size() && ok; ++r) {
            int lhs = 0;
            for (std::uint32_t t : cx.boundary_of(deg0[r]))
                lhs ^= static_cast<int>((mask >> col.at(t)) & 1);
            const int rhs = e1.value(deg0[r]) ^ e2.value(deg0[r]);
            ok = lhs == rhs;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace blch::testsupport
