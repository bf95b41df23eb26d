#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paq/errors.hpp"
#include "paq/rational.hpp"

namespace paq {

// Univariate polynomial over the rationals, dense coefficient list c0..cd.
// The zero polynomial is the empty list; otherwise the last coefficient is
// nonzero.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    // c * t^k
    static Poly monomial(Rational c, std::size_t k) {
        if (c == 0) return Poly();
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    Rational constant_term() const { return coeff(0); }
    Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    bool operator==(const Poly& other) const = default;
    // degree first, then coefficients; an arbitrary total order for keying
    bool operator<(const Poly& other) const {
        if (degree() != other.degree()) return degree() < other.degree();
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != other.coeffs_[k]) return coeffs_[k] < other.coeffs_[k];
        return false;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r = p;
        for (auto& x : r.coeffs_) x *= c;
        r.normalize();
        return r;
    }

    // Exact division with remainder: a = q*b + r, deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        Poly q, r = a;
        const int db = b.degree();
        const Rational lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
            const Rational factor = r.leading() / lb;
            q = q + monomial(factor, shift);
            r = r - monomial(factor, shift) * b;
        }
        return {q, r};
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval_double(double x) const {
        double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }
    // Substitution p(q(t)), Horner over Poly.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + Poly(*it);
        return acc;
    }

    // Rendered with variable `var`, descending powers: "t^2 - 3*t + 1".
    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational c = coeff(static_cast<std::size_t>(k));
            if (c == 0) continue;
            const bool first = out.empty();
            const Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            if (k == 0) {
                out += paq::to_string(mag);
            } else {
                if (mag != 1) out += paq::to_string(mag) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Decomposition f(t) = t*h(t) - kappa of a property-F polynomial.
struct HKappa {
    Poly h;
    Rational kappa;
};

// Property F over the field Q: nonconstant with nonzero constant term.
inline bool is_property_F(const Poly& f) {
    return f.degree() >= 1 && f.constant_term() != 0;
}

inline HKappa extract_h_kappa(const Poly& f) {
    if (!is_property_F(f))
        throw PropertyFViolationError("polynomial " + f.to_string() +
                                      " is constant or has zero constant term");
    const Rational c0 = f.constant_term();
    auto [h, rem] = Poly::divmod(f - Poly(c0), Poly::variable());
    (void)rem;  // exact by construction
    return HKappa{h, -c0};
}

// m-th cyclotomic polynomial in z, by exact division of z^m - 1 by the
// product of the proper-divisor cyclotomics.
inline Poly cyclotomic(int m) {
    if (m < 1) throw Error("cyclotomic index must be >= 1");
    std::vector<Rational> pow(static_cast<std::size_t>(m) + 1);
    pow[0] = -1;
    pow[static_cast<std::size_t>(m)] = 1;
    Poly num{std::vector<Rational>(pow)};
    Poly den = Poly::one();
    for (int d = 1; d < m; ++d)
        if (m % d == 0) den = den * cyclotomic(d);
    auto [q, r] = Poly::divmod(num, den);
    if (!r.is_zero()) throw Error("cyclotomic division not exact");
    return q;
}

// Minimal polynomial C_m of 4cos^2(pi/m) for finite m >= 3. The cyclotomic
// Phi_m is palindromic of even degree 2n; folding it through z + 1/z gives
// the minimal polynomial Psi of 2cos(2pi/m), and 4cos^2(pi/m) = 2 + 2cos(2pi/m)
// turns that into C_m(t) = Psi(t - 2). Monic of degree phi(m)/2 over Z.
inline Poly minpoly_4cos2(int m) {
    if (m < 3) throw Error("minpoly_4cos2 requires m >= 3");
    const Poly phi = cyclotomic(m);
    const int n = phi.degree() / 2;
    // V_k(z + 1/z) = z^k + z^-k:  V_0 = 2, V_1 = u, V_{k+1} = u*V_k - V_{k-1}.
    Poly psi(phi.coeff(static_cast<std::size_t>(n)));
    Poly v_prev(Rational(2));
    Poly v_cur = Poly::variable();
    for (int k = 1; k <= n; ++k) {
        psi = psi + phi.coeff(static_cast<std::size_t>(n + k)) * v_cur;
        Poly v_next = Poly::variable() * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
    return psi.compose(Poly{std::vector<Rational>{Rational(-2), Rational(1)}});
}

}  // namespace paq
