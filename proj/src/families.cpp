#include "blch/families.hpp"

#include <map>
#include <sstream>

#include "blch/errors.hpp"

namespace blch::families {

DGA trefoil_dga() {
    return parse_dga(
        "dim 1\n"
        "gen a1 1\n"
        "gen a2 1\n"
        "gen b1 0\n"
        "gen b2 0\n"
        "gen b3 0\n"
        "d a1 = 1 + b1 + b3 + b1*b2*b3\n"
        "d a2 = 1 + b1 + b3 + b3*b2*b1\n"
        "d b1 = 0\n"
        "d b2 = 0\n"
        "d b3 = 0\n");
}

std::vector<Augmentation> trefoil_augmentations(const DGA& dga) {
    static const int rows[5][3] = {
        {1, 1, 1}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}, {0, 1, 1}};
    std::vector<Augmentation> augs;
    for (const auto& row : rows) {
        augs.emplace_back(dga, std::map<std::string, int>{
                                   {"b1", row[0]}, {"b2", row[1]}, {"b3", row[2]}});
        if (!is_augmentation(dga, augs.back()))
            throw DomainError("families: trefoil augmentation table row rejected");
    }
    return augs;
}

DGA trefoil_link_dga(int shift_k) {
    const int k = shift_k;
    std::ostringstream src;
    src << "dim 1\n"
        << "gen a1 1 @knot\n"
        << "gen a2 1 @knot\n"
        << "gen b1 0 @knot\n"
        << "gen b2 0 @knot\n"
        << "gen b3 0 @knot\n"
        << "gen a3 1 @unknot\n"
        << "gen c1 " << k - 1 << "\n"
        << "gen c2 " << k << "\n"
        << "gen d1 " << 1 - k << "\n"
        << "gen d2 " << -k << "\n"
        << "d a1 = 1 + b1 + b3 + b1*b2*b3\n"
        << "d a2 = 1 + b1 + b3 + b3*b2*b1\n"
        << "d b1 = 0\n"
        << "d b2 = 0\n"
        << "d b3 = 0\n"
        << "d a3 = 0\n"
        << "d c1 = 0\n"
        << "d c2 = c1 + b2*b1*c1\n"
        << "d d1 = d2 + d2*b2*b1\n"
        << "d d2 = 0\n";
    return parse_dga(src.str());
}

DGA hopf_dga(int n, int k) {
    if (n < 1) throw InputError("families: hopf link needs n >= 1");
    // Chord lengths, for the record (not used computationally): c11, c22
    // have length l; c12 and c21 have l+e and l-e for the component shift e;
    // m12 and M12 have e-d and e+d for the Morse perturbation amplitude d.
    std::ostringstream src;
    src << "dim " << n << "\n"
        << "gen c11 " << n << " @low\n"
        << "gen c22 " << n << " @high\n"
        << "gen c12 " << n + k << "\n"
        << "gen c21 " << n - k << "\n"
        << "gen m12 " << k - 1 << "\n"
        << "gen M12 " << n + k - 1 << "\n"
        << "d c11 = c21*m12\n"
        << "d c22 = m12*c21\n"
        << "d c12 = M12 + m12*c11 + c22*m12\n"
        << "d c21 = 0\n"
        << "d m12 = 0\n"
        << "d M12 = 0\n";
    return parse_dga(src.str());
}

namespace {

std::string chord_name(const char* prefix, int i, int j, bool compact) {
    std::ostringstream out;
    out << prefix;
    if (compact)
        out << i << j;
    else
        out << "_" << i << "_" << j;
    return out.str();
}

struct ComplexBuilder {
    std::vector<BasisElement> basis;
    std::vector<std::vector<std::uint32_t>> boundary;
    std::map<std::string, std::uint32_t> index;

    std::uint32_t add(const std::string& name, int degree) {
        const auto idx = static_cast<std::uint32_t>(basis.size());
        basis.push_back({name, degree});
        boundary.emplace_back();
        index.emplace(name, idx);
        return idx;
    }
    void hit(const std::string& source, const std::string& target) {
        boundary[index.at(source)].push_back(index.at(target));
    }
};

}  // namespace

ChainComplex multicopy_complex(int N, int n) {
    if (N < 1) throw InputError("families: multicopy needs N >= 1");
    const int top = 2 * N;
    const bool compact = top <= 9;
    auto name = [&](const char* p, int i, int j) { return chord_name(p, i, j, compact); };

    ComplexBuilder b;
    for (int i = 1; i <= top; ++i) b.add(name("c", i, i), n);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) b.add(name("c", i, j), n + j - i);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) b.add(name("c", j, i), n - j + i);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) b.add(name("m", i, j), j - i - 1);
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) b.add(name("M", i, j), n + j - i - 1);

    const auto odd = [](int i) { return i % 2 != 0; };

    // Alternating-augmentation differential; any chord whose index leaves
    // [1, 2N], or a diagonal m/M, drops out.
    for (int i = 1; i <= top; ++i) {
        const std::string src = name("c", i, i);
        if (odd(i)) {
            if (i - 1 >= 1) b.hit(src, name("c", i, i - 1));
            if (i + 1 <= top) b.hit(src, name("c", i + 1, i));
        }
    }
    for (int i = 1; i <= top; ++i) {
        for (int j = i + 1; j <= top; ++j) {
            const std::string upper = name("c", i, j);
            b.hit(upper, name("M", i, j));
            if (odd(j)) b.hit(upper, name("c", i, j - 1));
            if (odd(i)) b.hit(upper, name("c", i + 1, j));

            const std::string lower = name("c", j, i);
            if (odd(i) && i - 1 >= 1) b.hit(lower, name("c", j, i - 1));
            if (odd(j) && j + 1 <= top) b.hit(lower, name("c", j + 1, i));

            const std::string minchord = name("m", i, j);
            if (odd(j) && j - 1 > i) b.hit(minchord, name("m", i, j - 1));
            if (odd(i) && i + 1 < j) b.hit(minchord, name("m", i + 1, j));

            const std::string maxchord = name("M", i, j);
            if (odd(j) && j - 1 > i) b.hit(maxchord, name("M", i, j - 1));
            if (odd(i) && i + 1 < j) b.hit(maxchord, name("M", i + 1, j));
        }
    }

    return ChainComplex(n, std::move(b.basis), std::move(b.boundary));
}

ChainComplex note_subcomplex(int k, int m, int n) {
    if (k < 1) throw InputError("families: note subcomplex needs k >= 1");
    const bool compact = k <= 9;
    auto name = [&](const char* p, int i, int j) { return chord_name(p, i, j, compact); };

    ComplexBuilder b;
    b.add(name("c", 0, 0), n);
    for (int j = 1; j <= k; ++j) b.add(name("c", 0, j), n + j - m);
    for (int j = 1; j <= k; ++j) b.add(name("c", j, 0), n - j + m);
    for (int j = 1; j <= k; ++j) b.add(name("m", 0, j), j - m - 1);
    for (int j = 1; j <= k; ++j) b.add(name("M", 0, j), n + j - m - 1);

    const auto odd = [](int j) { return j % 2 != 0; };

    // d c00 = 0; in the other right-hand sides c00, c_{k+1,0}, m00 and M00
    // drop out.
    for (int j = 1; j <= k; ++j) {
        const std::string c0j = name("c", 0, j);
        b.hit(c0j, name("M", 0, j));
        if (odd(j) && j >= 2) b.hit(c0j, name("c", 0, j - 1));

        if (odd(j) && j + 1 <= k) b.hit(name("c", j, 0), name("c", j + 1, 0));
        if (odd(j) && j >= 2) b.hit(name("m", 0, j), name("m", 0, j - 1));
        if (odd(j) && j >= 2) b.hit(name("M", 0, j), name("M", 0, j - 1));
    }

    return ChainComplex(n, std::move(b.basis), std::move(b.boundary));
}

ChainComplex attach_s(const ChainComplex& cx, int n,
                      const std::set<std::string>& rho_support) {
    if (n != cx.ambient_dim())
        throw InputError("families: attach_s dimension does not match the complex");
    if (cx.find("s"))
        throw InputError("families: basis already contains a generator named 's'");

    std::vector<std::uint32_t> rho;
    for (const std::string& name : rho_support) {
        auto idx = cx.find(name);
        if (!idx) throw InputError("families: rho names unknown basis element '" + name + "'");
        if (cx.basis()[*idx].degree != n)
            throw InputError("families: rho must be supported in degree " +
                             std::to_string(n) + ", but '" + name + "' has degree " +
                             std::to_string(cx.basis()[*idx].degree));
        rho.push_back(*idx);
    }

    // rho must kill the image of d_{n+1}, otherwise d^2 = 0 fails.
    for (std::uint32_t i = 0; i < cx.basis().size(); ++i) {
        if (cx.basis()[i].degree != n + 1) continue;
        int parity = 0;
        for (std::uint32_t t : cx.boundary_of(i))
            for (std::uint32_t r : rho)
                if (t == r) parity ^= 1;
        if (parity)
            throw DomainError("families: rho does not vanish on the image of the "
                              "degree " + std::to_string(n + 1) + " boundary");
    }

    std::vector<BasisElement> basis = cx.basis();
    std::vector<std::vector<std::uint32_t>> boundary;
    boundary.reserve(basis.size() + 1);
    for (std::uint32_t i = 0; i < basis.size(); ++i) boundary.push_back(cx.boundary_of(i));

    const auto s_index = static_cast<std::uint32_t>(basis.size());
    basis.push_back({"s", n - 1});
    boundary.emplace_back();
    for (std::uint32_t r : rho) boundary[r].push_back(s_index);

    return ChainComplex(cx.ambient_dim(), std::move(basis), std::move(boundary));
}

}  // namespace blch::families
