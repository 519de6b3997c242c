#include "blch/augment.hpp"

#include <sstream>

namespace blch {

Augmentation::Augmentation(const DGA& dga, const std::map<std::string, int>& values)
    : values_(dga.generators.size(), 0) {
    for (const auto& [name, bit] : values) {
        auto idx = dga.find(name);
        if (!idx)
            throw InputError("augment: unknown generator '" + name + "'");
        if (dga.degree(*idx) != 0)
            throw InputError("augment: generator '" + name +
                             "' has degree " + std::to_string(dga.degree(*idx)) +
                             "; augmentations are supported on degree 0 only");
        if (bit != 0 && bit != 1)
            throw InputError("augment: value for '" + name + "' must be 0 or 1");
        values_[*idx] = static_cast<std::uint8_t>(bit);
    }
}

Augmentation Augmentation::zero(const DGA& dga) {
    return Augmentation(dga.generators.size());
}

Augmentation Augmentation::from_bits(const DGA& dga,
                                     const std::vector<std::uint8_t>& bits) {
    const auto deg0 = dga.indices_of_degree(0);
    if (bits.size() != deg0.size())
        throw InputError("augment: expected " + std::to_string(deg0.size()) +
                         " bits, got " + std::to_string(bits.size()));
    Augmentation eps(dga.generators.size());
    for (std::size_t i = 0; i < deg0.size(); ++i) eps.values_[deg0[i]] = bits[i] & 1;
    return eps;
}

std::string Augmentation::to_string(const DGA& dga) const {
    std::ostringstream out;
    bool first = true;
    for (GenIndex i : dga.indices_of_degree(0)) {
        if (!first) out << ",";
        first = false;
        out << dga.generators[i].name << "=" << int(values_[i]);
    }
    return out.str();
}

bool is_augmentation(const DGA& dga, const Augmentation& eps) {
    for (GenIndex g = 0; g < dga.generators.size(); ++g)
        if (eps.eval_poly(dga.differentials[g]) != 0) return false;
    return true;
}

bool is_augmentation(const DGA& dga, const std::map<std::string, int>& values) {
    return is_augmentation(dga, Augmentation(dga, values));
}

std::vector<Augmentation> enumerate_augmentations(const DGA& dga, std::size_t cap) {
    const auto deg0 = dga.indices_of_degree(0);
    const std::size_t m = deg0.size();
    if (m > cap)
        throw InputError("augment: " + std::to_string(m) +
                         " degree-0 generators exceeds cap " + std::to_string(cap));

    std::vector<Augmentation> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint8_t> bits(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            bits[j] = static_cast<std::uint8_t>((mask >> (m - 1 - j)) & 1);
        Augmentation eps = Augmentation::from_bits(dga, bits);
        if (is_augmentation(dga, eps)) result.push_back(std::move(eps));
    }
    return result;
}

ChainComplex bilinearize(const DGA& dga, const Augmentation& eps1,
                         const Augmentation& eps2) {
    if (!is_augmentation(dga, eps1) || !is_augmentation(dga, eps2))
        throw InputError("augment: assignment is not an augmentation");

    std::vector<BasisElement> basis;
    basis.reserve(dga.generators.size());
    for (const Generator& g : dga.generators) basis.push_back({g.name, g.degree});

    std::vector<std::vector<std::uint32_t>> boundary(dga.generators.size());
    for (GenIndex g = 0; g < dga.generators.size(); ++g) {
        for (const Word& w : dga.differentials[g]) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                int coeff = 1;
                for (std::size_t j = 0; j < i && coeff; ++j)
                    coeff = eps1.value(w[j]);
                for (std::size_t j = i + 1; j < w.size() && coeff; ++j)
                    coeff = eps2.value(w[j]);
                if (coeff) boundary[g].push_back(w[i]);
            }
        }
    }

    ChainComplex cx(dga.ambient_dim, std::move(basis), std::move(boundary));
    if (!cx.dd_is_zero())
        throw DomainError("augment: bilinearized differential does not square to zero");
    return cx;
}

ChainComplex linearize(const DGA& dga, const Augmentation& eps) {
    return bilinearize(dga, eps, eps);
}

}  // namespace blch
