#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blch/chain_complex.hpp"
#include "blch/dga.hpp"

namespace blch {

// GF(2) assignment on the degree-0 generators of a fixed DGA, extended by 0
// on every other generator and by 1 on the unit. Construction validates that
// only degree-0 generators are assigned; whether the assignment actually
// kills the differential is a separate check (is_augmentation).
class Augmentation {
public:
    // Unmentioned degree-0 generators default to 0. Mentioning a generator
    // of nonzero degree or an unknown name is an error.
    Augmentation(const DGA& dga, const std::map<std::string, int>& values);

    static Augmentation zero(const DGA& dga);
    // bits follows the declaration order of the degree-0 generators.
    static Augmentation from_bits(const DGA& dga, const std::vector<std::uint8_t>& bits);

    int value(GenIndex i) const { return values_[i]; }
    int eval_word(const Word& w) const {
        for (GenIndex i : w)
            if (!values_[i]) return 0;
        return 1;
    }
    int eval_poly(const Poly& p) const {
        int acc = 0;
        for (const Word& w : p) acc ^= eval_word(w);
        return acc;
    }

    // Comma list over degree-0 generators in declaration order, "b1=0,b2=1".
    std::string to_string(const DGA& dga) const;

    bool operator==(const Augmentation&) const = default;

private:
    explicit Augmentation(std::size_t num_generators) : values_(num_generators, 0) {}
    std::vector<std::uint8_t> values_;
};

// True iff the multiplicative extension of eps kills d(g) for every generator.
bool is_augmentation(const DGA& dga, const Augmentation& eps);
bool is_augmentation(const DGA& dga, const std::map<std::string, int>& values);

// All augmentations, in lexicographic order of the degree-0 generator values
// (declaration order, first generator most significant). Refuses when the
// number of degree-0 generators exceeds cap.
std::vector<Augmentation> enumerate_augmentations(const DGA& dga, std::size_t cap = 24);

// The chain complex (C, d^{eps1,eps2}): for a word b1...bk in d(g), position
// i contributes b_i with coefficient eps1(b1)...eps1(b_{i-1}) *
// eps2(b_{i+1})...eps2(bk). Validates both augmentations and checks d^2 = 0
// on the result.
ChainComplex bilinearize(const DGA& dga, const Augmentation& eps1,
                         const Augmentation& eps2);

// bilinearize(dga, eps, eps).
ChainComplex linearize(const DGA& dga, const Augmentation& eps);

}  // namespace blch
