#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "blch/errors.hpp"

namespace blch {

using GenIndex = std::uint32_t;

struct Generator {
    std::string name;
    int degree = 0;
    std::string component;  // optional link-component tag, informational
};

// Monomial in the free noncommutative algebra: ordered generator indices.
// The empty word is the unit 1.
using Word = std::vector<GenIndex>;

struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// GF(2) combination of words; a word is present iff its coefficient is 1,
// so addition is symmetric difference.
class Poly {
public:
    void toggle(const Word& w) {
        auto it = words_.find(w);
        if (it == words_.end())
            words_.insert(w);
        else
            words_.erase(it);
    }
    void add(const Poly& p) {
        for (const Word& w : p.words_) toggle(w);
    }

    bool contains(const Word& w) const { return words_.count(w) != 0; }
    bool is_zero() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }

    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    bool operator==(const Poly&) const = default;

private:
    std::set<Word, ShortlexLess> words_;
};

// Free noncommutative Z-graded DGA over GF(2). Treat as immutable once
// built; every operation on it is a pure function.
class DGA {
public:
    int ambient_dim = 1;  // dim M; the Legendrian is ambient_dim-dimensional
    std::vector<Generator> generators;
    std::vector<Poly> differentials;  // parallel to generators

    std::optional<GenIndex> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    GenIndex add_generator(const Generator& g) {
        if (index_.count(g.name))
            throw InputError("dga: duplicate generator name '" + g.name + "'");
        GenIndex idx = static_cast<GenIndex>(generators.size());
        generators.push_back(g);
        differentials.emplace_back();
        index_.emplace(g.name, idx);
        return idx;
    }

    int degree(GenIndex i) const { return generators[i].degree; }

    int word_degree(const Word& w) const {
        int d = 0;
        for (GenIndex i : w) d += generators[i].degree;
        return d;
    }

    std::vector<GenIndex> indices_of_degree(int d) const {
        std::vector<GenIndex> out;
        for (GenIndex i = 0; i < generators.size(); ++i)
            if (generators[i].degree == d) out.push_back(i);
        return out;
    }

    std::string word_to_string(const Word& w) const;

private:
    std::map<std::string, GenIndex> index_;
};

struct ValidationIssue {
    enum class Kind { Degree, DSquare };
    Kind kind;
    std::string generator;
    std::string message;
};

// Leibniz expansion of the differential on a word:
// d(b1...bk) = sum_i b1...d(b_i)...bk (no signs over GF(2)).
Poly differentiate(const DGA& dga, const Word& w);

// Checks that every word of d(g) has degree |g|-1 and that d(d(g)) = 0 for
// every generator. An empty report means the DGA is valid.
std::vector<ValidationIssue> validate(const DGA& dga);

// Line-oriented text format:
//   dim <integer>
//   gen <name> <degree> [@<component>]
//   d <name> = <poly>      where <poly> is 0 or +-separated terms,
//                          each term 1 or *-separated generator names
// '#' starts a comment. Every generator needs exactly one d line.
DGA parse_dga(const std::string& text);
std::string serialize(const DGA& dga);

// Parses a differential right-hand side against an existing generator set.
Poly parse_poly_text(const DGA& dga, const std::string& text);

}  // namespace blch
