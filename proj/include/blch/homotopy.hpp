#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blch/augment.hpp"
#include "blch/laurent.hpp"

namespace blch {

// A degree +1 functional Kbar on chords with eps1 - eps2 = Kbar o
// d^{eps1,eps2}. Since the target field sits in degree 0, Kbar can only be
// supported on degree -1 generators.
struct HomotopyWitness {
    std::map<std::string, int> kbar;  // degree -1 generator name -> bit
};

// Solves the GF(2) system Kbar(d^{eps1,eps2} c) = eps1(c) - eps2(c) over the
// degree-0 generators c; empty optional when no witness exists.
std::optional<HomotopyWitness> homotopy_witness(const DGA& dga, const Augmentation& eps1,
                                                const Augmentation& eps2);

// Value of the derivation K induced by a witness on a word,
// K(a1...an) = sum_i eps1(a1...a_{i-1}) Kbar(a_i) eps2(a_{i+1}...a_n).
int witness_derivation(const DGA& dga, const Augmentation& eps1,
                       const Augmentation& eps2, const HomotopyWitness& w,
                       const Word& word);

// Rank (0 or 1) of the map induced by eps1 - eps2 on degree-0 homology of
// the bilinearized complex. Zero exactly when a homotopy witness exists.
int tau0_rank(const DGA& dga, const Augmentation& eps1, const Augmentation& eps2);

// The dimension criterion: D = dim LCH^{eps2,eps1}_n - dim LCH^{eps1,eps2}_{-1}
// equals 1 for homotopic pairs and 0 otherwise on connected-Legendrian DGAs.
// Throws DomainError when D is outside {0,1} (non-geometric input).
bool homotopic_by_dimension(const DGA& dga, const Augmentation& eps1,
                            const Augmentation& eps2);

enum class HomotopyMethod { Witness, Dimension, CrossCheck };

struct HomotopyPartition {
    std::vector<std::vector<std::size_t>> classes;  // ascending members, sorted by min
    HomotopyMethod method;

    struct PairDecision {
        std::optional<bool> witness;
        std::optional<bool> dimension;
    };
    std::vector<std::vector<PairDecision>> decisions;  // per ordered pair
};

// Decides every ordered pair of enumerated augmentations, checks that the
// relation is symmetric and transitive, and assembles the classes.
// CrossCheck runs both methods and throws DomainError on any disagreement.
HomotopyPartition homotopy_classes(const DGA& dga, HomotopyMethod method,
                                   std::size_t cap = 24);

// Entry (i,j) is the Poincare polynomial of (C, d^{eps_i,eps_j}) for the
// enumerated augmentation order.
std::vector<std::vector<LaurentPolynomial>> blch_table(const DGA& dga,
                                                       std::size_t cap = 24);

}  // namespace blch
