#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ktg {

using Rat = mpq_class;

/// Truncated power series with exact rational coefficients.  All ring
/// operations are exact and truncate to the shorter operand.
class Series {
public:
    explicit Series(int trunc);  // zero series with coefficients 0..trunc
    static Series constant(int trunc, const Rat& c);
    static Series monomial(int trunc, int degree, const Rat& c = Rat(1));
    static Series from_coefficients(std::vector<Rat> coeff);

    int trunc() const { return (int)coeff_.size() - 1; }
    const Rat& coefficient(int n) const;  // throws std::out_of_range past trunc
    const Rat& operator[](int n) const { return coefficient(n); }
    void set_coefficient(int n, Rat v);

    Series add(const Series& o) const;
    Series sub(const Series& o) const;
    Series mul(const Series& o) const;
    Series derivative() const;

    /// a(z^i): coefficient n*i receives coefficient n of a.
    Series substitute_power(int i) const;

    /// Formal exponential via n*e_n = sum_{m=1}^{n} m*a_m*e_{n-m}.
    /// Throws std::domain_error when the constant term is nonzero.
    Series exp() const;

    /// Horner evaluation of the truncated polynomial at x, carried out in
    /// floating arithmetic with at least `precision_digits` significant
    /// digits internally.
    double evaluate(double x, int precision_digits = 50) const;

    /// Debug dump: one "numerator/denominator" string per coefficient.
    std::vector<std::string> to_fraction_strings() const;

    friend Series operator+(const Series& a, const Series& b) { return a.add(b); }
    friend Series operator-(const Series& a, const Series& b) { return a.sub(b); }
    friend Series operator*(const Series& a, const Series& b) { return a.mul(b); }
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rat> coeff_;
};

}  // namespace ktg
