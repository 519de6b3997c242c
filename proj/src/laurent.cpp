#include "blch/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "blch/errors.hpp"

namespace blch {

LaurentPolynomial LaurentPolynomial::term(long long coeff, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

long long LaurentPolynomial::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int j) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + j, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::reversed() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
}

long long LaurentPolynomial::eval_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

long long LaurentPolynomial::eval_minus_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) s += (e % 2 == 0) ? c : -c;
    return s;
}

bool LaurentPolynomial::nonnegative() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

std::optional<int> LaurentPolynomial::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> LaurentPolynomial::max_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::string LaurentPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

void trim(std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    s = s.substr(a, b - a);
}

// A signed integer occupying the whole string.
std::optional<long long> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;
    return v;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    if (body.empty()) throw ParseError("empty polynomial");

    LaurentPolynomial result;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = body.find('+', start);
        parts.push_back(body.substr(start, plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }

    for (std::string part : parts) {
        trim(part);
        if (part.empty()) throw ParseError("empty term in polynomial '" + text + "'");

        long long coeff = 1;
        std::string tpart = part;
        std::size_t star = part.find('*');
        if (star != std::string::npos) {
            std::string cs = part.substr(0, star);
            trim(cs);
            auto c = parse_int(cs);
            if (!c) throw ParseError("bad coefficient '" + cs + "' in polynomial");
            coeff = *c;
            tpart = part.substr(star + 1);
            trim(tpart);
        } else if (auto c = parse_int(part)) {
            result.add_term(0, *c);
            continue;
        }

        if (tpart.empty() || tpart[0] != 't')
            throw ParseError("bad term '" + part + "' in polynomial");
        int exponent = 1;
        if (tpart.size() > 1) {
            if (tpart[1] != '^')
                throw ParseError("bad term '" + part + "' in polynomial");
            std::string es = tpart.substr(2);
            trim(es);
            auto e = parse_int(es);
            if (!e) throw ParseError("bad exponent '" + es + "' in polynomial");
            exponent = static_cast<int>(*e);
        }
        result.add_term(exponent, coeff);
    }
    return result;
}

}  // namespace blch
