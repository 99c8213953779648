// Copyright 2026 The cmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMAP_POLYNOMIAL_H
#define CMAP_POLYNOMIAL_H

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cmap/rational.h"

namespace cmap {

using Exponents = std::array<unsigned, 3>;

struct Monomial {
    Exponents exponents;
    Rational coeff;
};

/// Univariate polynomial with exact coefficients; coeffs()[k] multiplies t^k.
class UniPolynomial {
   public:
    UniPolynomial() = default;
    explicit UniPolynomial(std::vector<Rational> coeffs);

    /// The polynomial t.
    static UniPolynomial identity();

    const std::vector<Rational> &coeffs() const {
        return coeffs_;
    }
    std::size_t degree() const {
        return coeffs_.empty() ? 0 : coeffs_.size() - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }

    double operator()(double t) const;
    Rational operator()(const Rational &t) const;

    UniPolynomial operator+(const UniPolynomial &o) const;
    UniPolynomial operator-(const UniPolynomial &o) const;
    UniPolynomial operator*(const UniPolynomial &o) const;
    /// Composition (*this)(inner(t)).
    UniPolynomial compose(const UniPolynomial &inner) const;
    bool operator==(const UniPolynomial &) const = default;

    std::string str(char var = 't') const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Polynomial in (x, y, z) with exact coefficients. Terms are kept merged and
/// ordered by (a, b, c) lexicographically; zero terms are dropped.
class Polynomial3 {
   public:
    Polynomial3() = default;

    static Polynomial3 constant(const Rational &c);
    /// x, y or z for index 0, 1, 2.
    static Polynomial3 variable(std::size_t index);

    void add_term(const Exponents &e, const Rational &coeff);

    const std::map<Exponents, Rational> &terms() const {
        return terms_;
    }
    std::vector<Monomial> monomials() const;
    Rational coefficient(const Exponents &e) const;
    std::size_t total_degree() const;
    bool is_zero() const {
        return terms_.empty();
    }

    double operator()(double x, double y, double z) const;
    Rational operator()(const Rational &x, const Rational &y, const Rational &z) const;

    Polynomial3 operator+(const Polynomial3 &o) const;
    Polynomial3 operator-(const Polynomial3 &o) const;
    Polynomial3 operator*(const Polynomial3 &o) const;
    Polynomial3 operator*(const Rational &s) const;
    Polynomial3 pow(unsigned k) const;
    bool operator==(const Polynomial3 &) const = default;

    /// Partial derivative with respect to variable 0, 1 or 2.
    Polynomial3 derivative(std::size_t var) const;
    /// p(y, z, x), i.e. x^a y^b z^c becomes x^c y^a z^b.
    Polynomial3 cyclic_shift() const;
    /// p(t, t, t).
    UniPolynomial on_diagonal() const;
    /// p with the variables other than `var` fixed to 1.
    UniPolynomial restrict_to(std::size_t var) const;

    std::string str() const;

   private:
    std::map<Exponents, Rational> terms_;
};

}  // namespace cmap

#endif
