#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace blch {

// Laurent polynomial with integer coefficients, indexed by arbitrary integer
// exponents. Zero coefficients are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial constant(long long c) { return term(c, 0); }
    static LaurentPolynomial term(long long coeff, int exponent);

    long long coeff(int e) const;
    void add_term(int e, long long c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    bool operator==(const LaurentPolynomial&) const = default;

    // Multiplication by t^j.
    LaurentPolynomial shifted(int j) const;
    // Substitution t -> t^{-1}.
    LaurentPolynomial reversed() const;

    long long eval_one() const;        // P(1)
    long long eval_minus_one() const;  // P(-1)

    bool is_zero() const { return coeffs_.empty(); }
    bool nonnegative() const;
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    // Ascending exponents, e.g. "2 + t + 3*t^2 + t^-1" prints as
    // "t^-1 + 2 + t + 3*t^2".
    std::string to_string() const;
    // Accepts "+"-separated terms of the form INT, t, t^E, INT*t or INT*t^E.
    static LaurentPolynomial parse(const std::string& text);

    const std::map<int, long long>& terms() const { return coeffs_; }

private:
    std::map<int, long long> coeffs_;
};

}  // namespace blch
