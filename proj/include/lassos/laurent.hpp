#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lassos/error.hpp"

namespace lassos {

using Int = boost::multiprecision::cpp_int;

/// Formal variable of a Laurent polynomial.
///   A - bracket variable
///   U - u with u^2 = t; exponents count half powers of t
///   T - plain t
enum class Var { A, U, T };

const char* var_name(Var v);

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. Canonical form: exponent -> coefficient map with no zero
/// entries; the zero polynomial is the empty map. The variable tag rides
/// along and arithmetic refuses to mix tags (zero is compatible with any).
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(Var v) : var_(v) {}

    static Laurent zero(Var v) { return Laurent(v); }
    static Laurent one(Var v) { return constant(1, v); }
    static Laurent constant(Int c, Var v);
    /// c * x^e  in variable v.
    static Laurent term(Int c, int e, Var v);

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<int, Int>& terms() const { return terms_; }

    /// Lowest / highest exponent; ZeroArgument on the zero polynomial.
    int min_exp() const;
    int max_exp() const;

    /// Coefficient of x^e (zero when absent).
    Int coeff(int e) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

private:
    void set(int e, Int c);
    void check_var(const Laurent& o) const;

    Var var_ = Var::A;
    std::map<int, Int> terms_;

    friend Laurent exact_divide(const Laurent& p, const Laurent& q);
    friend Laurent substitute_power(const Laurent& p, int d);
    friend Laurent mirror(const Laurent& p);
    friend Laurent to_jones_variable(const Laurent& p);
};

/// Quotient p / q when the division is exact; NonExactDivision otherwise.
Laurent exact_divide(const Laurent& p, const Laurent& q);

/// x -> x^d on all exponents (d = 0 collapses to the coefficient sum).
Laurent substitute_power(const Laurent& p, int d);

/// x -> x^-1, i.e. negate every exponent.
Laurent mirror(const Laurent& p);

/// A-variable polynomial with even exponents -> u-variable, A^e -> u^(-e/2).
Laurent to_jones_variable(const Laurent& p);

/// (-A^-3)^n, the writhe correction factor.
Laurent framing_factor(int n);

/// Integer power, n >= 0.
Laurent pow(const Laurent& p, int n);

/// Canonical text form: descending exponents, explicit signs, '^' powers.
/// U-tagged polynomials print in t with halved exponents ("t^-23/2").
std::string to_string(const Laurent& p);

/// Inverse of to_string for the given variable tag.
Laurent parse_laurent(const std::string& text, Var v);

} // namespace lassos
