#include "blch/dga.hpp"

#include <cctype>
#include <sstream>

namespace blch {

std::string DGA::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += generators[w[i]].name;
    }
    return out;
}

Poly differentiate(const DGA& dga, const Word& w) {
    Poly result;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const Word& u : dga.differentials[w[i]]) {
            Word expanded;
            expanded.reserve(w.size() - 1 + u.size());
            expanded.insert(expanded.end(), w.begin(), w.begin() + i);
            expanded.insert(expanded.end(), u.begin(), u.end());
            expanded.insert(expanded.end(), w.begin() + i + 1, w.end());
            result.toggle(expanded);
        }
    }
    return result;
}

std::vector<ValidationIssue> validate(const DGA& dga) {
    std::vector<ValidationIssue> issues;
    for (GenIndex g = 0; g < dga.generators.size(); ++g) {
        const int want = dga.degree(g) - 1;
        for (const Word& w : dga.differentials[g]) {
            const int got = dga.word_degree(w);
            if (got != want) {
                issues.push_back({ValidationIssue::Kind::Degree,
                                  dga.generators[g].name,
                                  "d " + dga.generators[g].name + " contains " +
                                      dga.word_to_string(w) + " of degree " +
                                      std::to_string(got) + ", expected " +
                                      std::to_string(want)});
            }
        }
    }
    for (GenIndex g = 0; g < dga.generators.size(); ++g) {
        Poly dd;
        for (const Word& w : dga.differentials[g]) dd.add(differentiate(dga, w));
        if (!dd.is_zero()) {
            std::string terms;
            for (const Word& w : dd) {
                if (!terms.empty()) terms += " + ";
                terms += dga.word_to_string(w);
            }
            issues.push_back({ValidationIssue::Kind::DSquare,
                              dga.generators[g].name,
                              "d(d " + dga.generators[g].name + ") = " + terms});
        }
    }
    return issues;
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
    }
    return tokens;
}

std::optional<int> parse_int_token(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;
    return v;
}

Poly parse_poly_tokens(const DGA& dga, const std::string& body, int line, int col) {
    std::string compact;
    for (char c : body)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw ParseError("missing differential polynomial", line, col);

    Poly poly;
    if (compact == "0") return poly;

    std::size_t start = 0;
    while (true) {
        std::size_t plus = compact.find('+', start);
        std::string term = compact.substr(start, plus - start);
        if (term.empty())
            throw ParseError("empty term in differential", line, col);
        if (term == "0")
            throw ParseError("'0' is only allowed as the entire polynomial", line, col);

        Word w;
        if (term != "1") {
            std::size_t fstart = 0;
            while (true) {
                std::size_t star = term.find('*', fstart);
                std::string factor = term.substr(fstart, star - fstart);
                if (!valid_name(factor))
                    throw ParseError("bad generator name '" + factor + "'", line, col);
                auto idx = dga.find(factor);
                if (!idx)
                    throw ParseError("unknown generator '" + factor + "' in differential",
                                     line, col);
                w.push_back(*idx);
                if (star == std::string::npos) break;
                fstart = star + 1;
            }
        }
        poly.toggle(w);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return poly;
}

}  // namespace

Poly parse_poly_text(const DGA& dga, const std::string& text) {
    return parse_poly_tokens(dga, text, 0, 0);
}

DGA parse_dga(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    DGA dga;
    bool have_dim = false;
    struct DLine {
        std::string name;
        std::string body;
        int line;
        int col;
    };
    std::vector<DLine> dlines;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li + 1);
        std::vector<Token> toks = tokenize(lines[li]);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "dim") {
            if (have_dim) throw ParseError("duplicate dim line", lineno, toks[0].col);
            if (toks.size() != 2)
                throw ParseError("expected 'dim <integer>'", lineno, toks[0].col);
            auto n = parse_int_token(toks[1].text);
            if (!n) throw ParseError("bad dimension '" + toks[1].text + "'", lineno,
                                     toks[1].col);
            if (*n < 1) throw ParseError("dimension must be at least 1", lineno,
                                         toks[1].col);
            dga.ambient_dim = *n;
            have_dim = true;
        } else if (head == "gen") {
            if (toks.size() != 3 && toks.size() != 4)
                throw ParseError("expected 'gen <name> <degree> [@component]'", lineno,
                                 toks[0].col);
            Generator g;
            g.name = toks[1].text;
            if (!valid_name(g.name))
                throw ParseError("bad generator name '" + g.name + "'", lineno,
                                 toks[1].col);
            auto deg = parse_int_token(toks[2].text);
            if (!deg)
                throw ParseError("bad degree '" + toks[2].text + "'", lineno,
                                 toks[2].col);
            g.degree = *deg;
            if (toks.size() == 4) {
                const std::string& tag = toks[3].text;
                if (tag.size() < 2 || tag[0] != '@' || !valid_name(tag.substr(1)))
                    throw ParseError("bad component tag '" + tag + "'", lineno,
                                     toks[3].col);
                g.component = tag.substr(1);
            }
            if (dga.find(g.name))
                throw ParseError("duplicate generator name '" + g.name + "'", lineno,
                                 toks[1].col);
            dga.add_generator(g);
        } else if (head == "d") {
            if (toks.size() < 4 || toks[2].text != "=")
                throw ParseError("expected 'd <name> = <poly>'", lineno, toks[0].col);
            std::string body;
            for (std::size_t t = 3; t < toks.size(); ++t) {
                if (t > 3) body += " ";
                body += toks[t].text;
            }
            dlines.push_back({toks[1].text, body, lineno, toks[3].col});
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno, toks[0].col);
        }
    }

    if (!have_dim) throw ParseError("missing 'dim' header");

    std::vector<bool> seen(dga.generators.size(), false);
    for (const DLine& dl : dlines) {
        auto idx = dga.find(dl.name);
        if (!idx)
            throw ParseError("differential for unknown generator '" + dl.name + "'",
                             dl.line, dl.col);
        if (seen[*idx])
            throw ParseError("duplicate differential for '" + dl.name + "'", dl.line,
                             dl.col);
        seen[*idx] = true;
        dga.differentials[*idx] = parse_poly_tokens(dga, dl.body, dl.line, dl.col);
    }
    for (GenIndex g = 0; g < dga.generators.size(); ++g)
        if (!seen[g])
            throw ParseError("generator '" + dga.generators[g].name +
                             "' has no differential line");

    return dga;
}

std::string serialize(const DGA& dga) {
    std::ostringstream out;
    out << "dim " << dga.ambient_dim << "\n";
    for (const Generator& g : dga.generators) {
        out << "gen " << g.name << " " << g.degree;
        if (!g.component.empty()) out << " @" << g.component;
        out << "\n";
    }
    for (GenIndex i = 0; i < dga.generators.size(); ++i) {
        out << "d " << dga.generators[i].name << " = ";
        if (dga.differentials[i].is_zero()) {
            out << "0";
        } else {
            bool first = true;
            for (const Word& w : dga.differentials[i]) {
                if (!first) out << " + ";
                first = false;
                out << dga.word_to_string(w);
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace blch
