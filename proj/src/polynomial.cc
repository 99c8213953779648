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

#include "cmap/polynomial.h"

#include <algorithm>
#include <stdexcept>

namespace cmap {

namespace {

double ipow(double v, unsigned k) {
    double r = 1;
    for (unsigned i = 0; i < k; i++) {
        r *= v;
    }
    return r;
}

Rational ipow(const Rational &v, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; i++) {
        r *= v;
    }
    return r;
}

std::string signed_term(const Rational &c, const std::string &vars, bool first) {
    std::string out;
    Rational mag = c.numerator() < 0 ? -c : c;
    if (!first) {
        out += c.numerator() < 0 ? " - " : " + ";
    } else if (c.numerator() < 0) {
        out += "-";
    }
    if (mag != Rational(1) || vars.empty()) {
        out += to_string(mag);
    }
    return out + vars;
}

}  // namespace

UniPolynomial::UniPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPolynomial UniPolynomial::identity() {
    return UniPolynomial({Rational(0), Rational(1)});
}

void UniPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().numerator() == 0) {
        coeffs_.pop_back();
    }
}

double UniPolynomial::operator()(double t) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + to_double(*it);
    }
    return acc;
}

Rational UniPolynomial::operator()(const Rational &t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

UniPolynomial UniPolynomial::operator+(const UniPolynomial &o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        c[i] += coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); i++) {
        c[i] += o.coeffs_[i];
    }
    return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::operator-(const UniPolynomial &o) const {
    std::vector<Rational> neg(o.coeffs_.size());
    for (std::size_t i = 0; i < neg.size(); i++) {
        neg[i] = -o.coeffs_[i];
    }
    return *this + UniPolynomial(std::move(neg));
}

UniPolynomial UniPolynomial::operator*(const UniPolynomial &o) const {
    if (is_zero() || o.is_zero()) {
        return {};
    }
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        for (std::size_t j = 0; j < o.coeffs_.size(); j++) {
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::compose(const UniPolynomial &inner) const {
    UniPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + UniPolynomial({*it});
    }
    return acc;
}

std::string UniPolynomial::str(char var) const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].numerator() == 0) {
            continue;
        }
        std::string v;
        if (k >= 1) {
            v = std::string(1, var) + (k > 1 ? "^" + std::to_string(k) : "");
        }
        out += signed_term(coeffs_[k], v, out.empty());
    }
    return out.empty() ? "0" : out;
}

Polynomial3 Polynomial3::constant(const Rational &c) {
    Polynomial3 p;
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial3 Polynomial3::variable(std::size_t index) {
    if (index > 2) {
        throw std::out_of_range("variable index must be 0, 1 or 2");
    }
    Exponents e{0, 0, 0};
    e[index] = 1;
    Polynomial3 p;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial3::add_term(const Exponents &e, const Rational &coeff) {
    if (coeff.numerator() == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.numerator() == 0) {
            terms_.erase(it);
        }
    }
}

std::vector<Monomial> Polynomial3::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto &[e, c] : terms_) {
        out.push_back({e, c});
    }
    return out;
}

Rational Polynomial3::coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial3::total_degree() const {
    std::size_t d = 0;
    for (const auto &[e, c] : terms_) {
        d = std::max<std::size_t>(d, e[0] + e[1] + e[2]);
    }
    return d;
}

double Polynomial3::operator()(double x, double y, double z) const {
    double acc = 0;
    for (const auto &[e, c] : terms_) {
        acc += to_double(c) * ipow(x, e[0]) * ipow(y, e[1]) * ipow(z, e[2]);
    }
    return acc;
}

Rational Polynomial3::operator()(const Rational &x, const Rational &y, const Rational &z) const {
    Rational acc(0);
    for (const auto &[e, c] : terms_) {
        acc += c * ipow(x, e[0]) * ipow(y, e[1]) * ipow(z, e[2]);
    }
    return acc;
}

Polynomial3 Polynomial3::operator+(const Polynomial3 &o) const {
    Polynomial3 out = *this;
    for (const auto &[e, c] : o.terms_) {
        out.add_term(e, c);
    }
    return out;
}

Polynomial3 Polynomial3::operator-(const Polynomial3 &o) const {
    return *this + o * Rational(-1);
}

Polynomial3 Polynomial3::operator*(const Polynomial3 &o) const {
    Polynomial3 out;
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : o.terms_) {
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        }
    }
    return out;
}

Polynomial3 Polynomial3::operator*(const Rational &s) const {
    Polynomial3 out;
    for (const auto &[e, c] : terms_) {
        out.add_term(e, c * s);
    }
    return out;
}

Polynomial3 Polynomial3::pow(unsigned k) const {
    Polynomial3 out = constant(Rational(1));
    for (unsigned i = 0; i < k; i++) {
        out = out * *this;
    }
    return out;
}

Polynomial3 Polynomial3::derivative(std::size_t var) const {
    Polynomial3 out;
    for (const auto &[e, c] : terms_) {
        if (e[var] == 0) {
            continue;
        }
        Exponents d = e;
        d[var]--;
        out.add_term(d, c * Rational(static_cast<std::int64_t>(e[var])));
    }
    return out;
}

Polynomial3 Polynomial3::cyclic_shift() const {
    Polynomial3 out;
    for (const auto &[e, c] : terms_) {
        out.add_term({e[2], e[0], e[1]}, c);
    }
    return out;
}

UniPolynomial Polynomial3::on_diagonal() const {
    std::vector<Rational> c(total_degree() + 1, Rational(0));
    for (const auto &[e, coeff] : terms_) {
        c[e[0] + e[1] + e[2]] += coeff;
    }
    return UniPolynomial(std::move(c));
}

UniPolynomial Polynomial3::restrict_to(std::size_t var) const {
    std::vector<Rational> c(total_degree() + 1, Rational(0));
    for (const auto &[e, coeff] : terms_) {
        c[e[var]] += coeff;
    }
    return UniPolynomial(std::move(c));
}

std::string Polynomial3::str() const {
    std::string out;
    // Highest total degree first reads more naturally.
    auto ms = monomials();
    std::stable_sort(ms.begin(), ms.end(), [](const Monomial &a, const Monomial &b) {
        return a.exponents[0] + a.exponents[1] + a.exponents[2] > b.exponents[0] + b.exponents[1] + b.exponents[2];
    });
    for (const auto &m : ms) {
        std::string v;
        for (int i = 0; i < 3; i++) {
            if (m.exponents[i] > 0) {
                v += "xyz"[i];
                if (m.exponents[i] > 1) {
                    v += "^" + std::to_string(m.exponents[i]);
                }
            }
        }
        out += signed_term(m.coeff, v, out.empty());
    }
    return out.empty() ? "0" : out;
}

}  // namespace cmap
