#pragma once

#include <string>
#include <vector>

#include "paq/free_product.hpp"

namespace paq {

// Dense N x N matrix over the free product Q. N is the vertex count of the
// underlying graph, so no sparse storage is needed.
class MatrixElement {
  public:
    MatrixElement() = default;
    MatrixElement(FactorUniversePtr uni, int n)
        : uni_(std::move(uni)), n_(n),
          entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   FreeProductElement::zero(uni_)) {
        if (n < 1) throw Error("matrix size must be positive");
    }

    static MatrixElement zero(FactorUniversePtr uni, int n) {
        return MatrixElement(std::move(uni), n);
    }

    static MatrixElement identity(FactorUniversePtr uni, int n) {
        MatrixElement m(uni, n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = FreeProductElement::one(uni);
        return m;
    }

    // q in position (i, j), zeros elsewhere.
    static MatrixElement unit(const FactorUniversePtr& uni, int n, int i, int j,
                              FreeProductElement q) {
        MatrixElement m(uni, n);
        m.at(i, j) = std::move(q);
        return m;
    }
    static MatrixElement unit(const FactorUniversePtr& uni, int n, int i, int j) {
        return unit(uni, n, i, j, FreeProductElement::one(uni));
    }

    int size() const { return n_; }
    const FactorUniversePtr& universe() const { return uni_; }

    FreeProductElement& at(int i, int j) {
        check_index(i), check_index(j);
        return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }
    const FreeProductElement& at(int i, int j) const {
        check_index(i), check_index(j);
        return entries_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const MatrixElement& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

    friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
        check_same_size(a, b);
        MatrixElement r = a;
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = r.entries_[k] + b.entries_[k];
        return r;
    }
    friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
        return a + (Rational(-1) * b);
    }
    friend MatrixElement operator*(const Rational& c, const MatrixElement& a) {
        MatrixElement r = a;
        for (auto& e : r.entries_) e = c * e;
        return r;
    }
    friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
        check_same_size(a, b);
        MatrixElement r(a.uni_ ? a.uni_ : b.uni_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int k = 1; k <= a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 1; j <= a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

    // Row-major printout, one bracketed row per line.
    std::string to_string() const {
        std::string out;
        for (int i = 1; i <= n_; ++i) {
            out += "[";
            for (int j = 1; j <= n_; ++j) {
                if (j > 1) out += ", ";
                out += at(i, j).to_string();
            }
            out += "]";
            if (i < n_) out += "\n";
        }
        return out;
    }

  private:
    void check_index(int i) const {
        if (i < 1 || i > n_) throw Error("matrix index out of range");
    }
    static void check_same_size(const MatrixElement& a, const MatrixElement& b) {
        if (a.n_ != b.n_) throw Error("matrix size mismatch");
        if (a.uni_ && b.uni_ && a.uni_.get() != b.uni_.get())
            throw Error("matrices live over different factor universes");
    }

    FactorUniversePtr uni_;
    int n_ = 0;
    std::vector<FreeProductElement> entries_;
};

}  // namespace paq
