#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "paq/poly.hpp"
#include "paq/rational.hpp"

namespace paq {

enum class FactorKind { PolyQuotient, Laurent, FreeTwoVars };

// One free factor of Q. PolyQuotient is K[t]/<f> with deg f >= 2 and
// f(0) != 0 (degree-1 quotients collapse to scalars and are kept out of the
// universe); Laurent is K[z, z^-1]; FreeTwoVars is K[x, xbar].
struct Factor {
    std::string id;
    FactorKind kind = FactorKind::Laurent;
    Poly modulus;           // PolyQuotient only
    std::string edge_name;  // provenance
    char role = 0;          // 't' tree, 'z'/'u' cycle in Y1, 'x' free cycle
};

class FactorUniverse {
  public:
    FactorUniverse() = default;
    explicit FactorUniverse(std::vector<Factor> factors) : factors_(std::move(factors)) {
        for (int i = 0; i < count(); ++i) {
            const auto& f = factors_[static_cast<std::size_t>(i)];
            if (f.kind == FactorKind::PolyQuotient &&
                (f.modulus.degree() < 2 || f.modulus.constant_term() == 0))
                throw Error("factor '" + f.id + "' needs degree >= 2 and nonzero constant term");
            if (!index_by_id_.emplace(f.id, i).second)
                throw Error("duplicate factor id '" + f.id + "'");
        }
    }

    int count() const { return static_cast<int>(factors_.size()); }
    const Factor& factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }
    const std::vector<Factor>& factors() const { return factors_; }
    int index_of(const std::string& id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end()) throw Error("unknown factor '" + id + "'");
        return it->second;
    }

  private:
    std::vector<Factor> factors_;
    std::map<std::string, int> index_by_id_;
};

using FactorUniversePtr = std::shared_ptr<const FactorUniverse>;

inline FactorUniversePtr make_universe(std::vector<Factor> factors) {
    return std::make_shared<const FactorUniverse>(std::move(factors));
}

// One letter of an alternating word: a basis element of its factor's
// complement of K. PolyQuotient: t^exp, 1 <= exp <= deg-1. Laurent: z^exp,
// exp != 0. FreeTwoVars: a nonempty word over {x, xbar}, stored as a string
// of 'x' and 'X'.
struct Letter {
    int factor = -1;
    long long exp = 0;
    std::string xword;

    auto operator<=>(const Letter&) const = default;
};

inline Letter poly_letter(int factor, long long exp) { return Letter{factor, exp, {}}; }
inline Letter laurent_letter(int factor, long long exp) { return Letter{factor, exp, {}}; }
inline Letter xword_letter(int factor, std::string xw) {
    return Letter{factor, 0, std::move(xw)};
}

inline void validate_letter(const FactorUniverse& uni, const Letter& l) {
    if (l.factor < 0 || l.factor >= uni.count()) throw Error("letter factor out of range");
    const Factor& f = uni.factor(l.factor);
    switch (f.kind) {
        case FactorKind::PolyQuotient:
            if (l.exp < 1 || l.exp > f.modulus.degree() - 1)
                throw Error("letter exponent out of range for factor '" + f.id + "'");
            break;
        case FactorKind::Laurent:
            if (l.exp == 0) throw Error("Laurent letter with exponent 0");
            break;
        case FactorKind::FreeTwoVars:
            if (l.xword.empty()) throw Error("empty word letter in factor '" + f.id + "'");
            for (char c : l.xword)
                if (c != 'x' && c != 'X') throw Error("bad symbol in word letter");
            break;
    }
}

// Alternating word: consecutive letters from distinct factors; the empty
// word is the identity of Q. Ordered length first, then letterwise.
struct Word {
    std::vector<Letter> letters;

    static Word empty() { return {}; }
    static Word checked(const FactorUniverse& uni, std::vector<Letter> ls) {
        for (const auto& l : ls) validate_letter(uni, l);
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            if (ls[i].factor == ls[i + 1].factor) throw Error("word is not alternating");
        return Word{std::move(ls)};
    }

    std::size_t size() const { return letters.size(); }

    auto operator<=>(const Word& other) const {
        if (auto c = letters.size() <=> other.letters.size(); c != 0) return c;
        return letters <=> other.letters;
    }
    bool operator==(const Word&) const = default;
};

// Element of the free product Q in canonical form: a finitely supported
// rational combination of alternating words.
class FreeProductElement {
  public:
    FreeProductElement() = default;
    explicit FreeProductElement(FactorUniversePtr uni) : uni_(std::move(uni)) {}

    static FreeProductElement zero(FactorUniversePtr uni) {
        return FreeProductElement(std::move(uni));
    }
    static FreeProductElement scalar(FactorUniversePtr uni, Rational c) {
        FreeProductElement r(std::move(uni));
        if (c != 0) r.terms_.emplace(Word::empty(), std::move(c));
        return r;
    }
    static FreeProductElement one(FactorUniversePtr uni) {
        return scalar(std::move(uni), Rational(1));
    }
    static FreeProductElement word(FactorUniversePtr uni, Word w, Rational c = Rational(1)) {
        FreeProductElement r(std::move(uni));
        if (c != 0) r.terms_.emplace(std::move(w), std::move(c));
        return r;
    }
    static FreeProductElement letter(const FactorUniversePtr& uni, Letter l,
                                     Rational c = Rational(1)) {
        validate_letter(*uni, l);
        return word(uni, Word{{std::move(l)}}, std::move(c));
    }

    const FactorUniversePtr& universe() const { return uni_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.size() == 0);
    }

    bool operator==(const FreeProductElement& other) const { return terms_ == other.terms_; }

    FreeProductElement& add_term(const Word& w, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend FreeProductElement operator+(const FreeProductElement& a,
                                        const FreeProductElement& b) {
        check_same_universe(a, b);
        FreeProductElement r = a.terms_.empty() ? FreeProductElement(b.uni_) : a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend FreeProductElement operator-(const FreeProductElement& a,
                                        const FreeProductElement& b) {
        return a + (Rational(-1) * b);
    }
    friend FreeProductElement operator*(const Rational& c, const FreeProductElement& a) {
        FreeProductElement r(a.uni_);
        if (c == 0) return r;
        for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
        return r;
    }

    friend FreeProductElement operator*(const FreeProductElement& a,
                                        const FreeProductElement& b) {
        check_same_universe(a, b);
        FreeProductElement r(a.uni_ ? a.uni_ : b.uni_);
        for (const auto& [u, c] : a.terms_)
            for (const auto& [v, d] : b.terms_)
                r.accumulate_product(u.letters, v.letters, c * d);
        return r;
    }

    // Display: letters joined by a middle dot; t[edge]^k for polynomial
    // quotients, z[edge]^k for Laurent factors, w[edge]:xxbar... for free
    // factors. Scalar coefficient printed first unless it is +-1.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            const bool first = out.empty();
            const Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            std::string body;
            for (const auto& l : w.letters) {
                if (!body.empty()) body += "·";
                body += letter_string(l);
            }
            if (w.size() == 0) {
                out += paq::to_string(mag);
            } else {
                if (mag != 1) out += paq::to_string(mag) + "·";
                out += body;
            }
        }
        return out;
    }

    std::string letter_string(const Letter& l) const {
        const Factor& f = uni_->factor(l.factor);
        switch (f.kind) {
            case FactorKind::PolyQuotient:
                return "t[" + f.edge_name + "]^" + std::to_string(l.exp);
            case FactorKind::Laurent:
                return "z[" + f.edge_name + "]^" + std::to_string(l.exp);
            case FactorKind::FreeTwoVars: {
                std::string s = "w[" + f.edge_name + "]:";
                for (char c : l.xword) s += (c == 'x') ? "x" : "xbar";
                return s;
            }
        }
        return {};
    }

  private:
    static void check_same_universe(const FreeProductElement& a, const FreeProductElement& b) {
        if (a.uni_ && b.uni_ && a.uni_.get() != b.uni_.get())
            throw Error("elements live over different factor universes");
    }

    // Concatenate two alternating words and reduce at the seam. Reductions
    // inside a PolyQuotient factor can split one word into a scalar part and
    // basis parts; the scalar part rejoins the flanking letters, which may
    // collide again, so the merge cascades inward.
    void accumulate_product(const std::vector<Letter>& u, const std::vector<Letter>& v,
                            const Rational& coef) {
        if (coef == 0) return;
        if (u.empty() || v.empty()) {
            add_term(Word{u.empty() ? v : u}, coef);
            return;
        }
        const Letter& a = u.back();
        const Letter& b = v.front();
        if (a.factor != b.factor) {
            std::vector<Letter> w = u;
            w.insert(w.end(), v.begin(), v.end());
            add_term(Word{std::move(w)}, coef);
            return;
        }
        const Factor& f = uni_->factor(a.factor);
        auto joined = [&](const Letter& mid) {
            std::vector<Letter> w(u.begin(), u.end() - 1);
            w.push_back(mid);
            w.insert(w.end(), v.begin() + 1, v.end());
            return w;
        };
        switch (f.kind) {
            case FactorKind::FreeTwoVars:
                add_term(Word{joined(xword_letter(a.factor, a.xword + b.xword))}, coef);
                return;
            case FactorKind::Laurent: {
                const long long k = a.exp + b.exp;
                if (k != 0) {
                    add_term(Word{joined(laurent_letter(a.factor, k))}, coef);
                } else {
                    accumulate_product({u.begin(), u.end() - 1}, {v.begin() + 1, v.end()}, coef);
                }
                return;
            }
            case FactorKind::PolyQuotient: {
                const long long k = a.exp + b.exp;
                const Poly rem =
                    Poly::divmod(Poly::monomial(Rational(1), static_cast<std::size_t>(k)),
                                 f.modulus)
                        .second;
                for (int j = 1; j <= rem.degree(); ++j) {
                    const Rational cj = rem.coeff(static_cast<std::size_t>(j));
                    if (cj != 0) add_term(Word{joined(poly_letter(a.factor, j))}, coef * cj);
                }
                const Rational c0 = rem.constant_term();
                if (c0 != 0)
                    accumulate_product({u.begin(), u.end() - 1}, {v.begin() + 1, v.end()},
                                       coef * c0);
                return;
            }
        }
    }

    FactorUniversePtr uni_;
    std::map<Word, Rational> terms_;
};

}  // namespace paq
