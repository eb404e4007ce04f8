#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ksc/errors.hpp"

namespace ksc {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable t, stored densely as the
// coefficient run [lo .. lo+c.size()-1].  Invariant: c is empty iff the
// polynomial is zero; otherwise c.front() != 0 and c.back() != 0.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(Int constant);
    Laurent(std::initializer_list<std::pair<int, Int>> terms);

    static Laurent term(int exp, Int coeff);
    static Laurent from_terms(const std::vector<std::pair<int, Int>>& terms);

    bool is_zero() const { return c_.empty(); }
    int lo_exp() const;          // requires nonzero
    int hi_exp() const;          // requires nonzero
    int span() const;            // hi_exp - lo_exp; requires nonzero
    Int coeff(int exp) const;    // 0 outside the stored run

    Int eval_at_one() const;     // sum of coefficients
    Laurent involute() const;    // t -> t^-1
    Laurent shifted(int k) const; // multiply by t^k

    // Ascending (exponent, coefficient) pairs, zero coefficients omitted.
    std::vector<std::pair<int, Int>> terms() const;

    std::string to_json() const;   // {"-1":1,"0":-3,"1":1}, keys ascending
    std::string to_text() const;   // human-readable, e.g. "t^-1 - 3 + t"

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b);
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Exact quotient a / b; requires b nonzero and the division to be exact
    // (used by fraction-free elimination, where exactness is guaranteed).
    static Laurent divide_exact(const Laurent& a, const Laurent& b);

private:
    int lo_ = 0;
    std::vector<Int> c_;
    void normalize();
};

// The unique unit multiple +-t^k of p that is involute-symmetric whenever a
// symmetric representative exists, has its minimum degree at -floor(span/2)
// otherwise, and always has a positive coefficient on the highest exponent.
// Throws precondition_error on the zero polynomial.
Laurent canonicalize(const Laurent& p);

using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Exact determinant: cofactor expansion for n <= 6, fraction-free
// (Bareiss) elimination above.  Returns the raw determinant, no
// canonicalization; zero is a valid result.
Laurent det_laurent(const LaurentMatrix& m);
Laurent det_laurent_cofactor(const LaurentMatrix& m);
Laurent det_laurent_bareiss(const LaurentMatrix& m);

} // namespace ksc
