#pragma once
// Polynomials in the statistic variable w with exact integer coefficients.
// Stored densely; the public view never exposes a zero leading coefficient, and
// term iteration skips interior zeros, so observable state mirrors a sparse
// degree -> coefficient map.

#include <optional>
#include <vector>

#include "prec.hpp"

namespace hookpoly {

class WPoly {
  public:
    WPoly() = default;

    static WPoly constant(Int c) {
        WPoly p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }
    static WPoly monomial(Int c, unsigned deg) {
        WPoly p;
        if (c != 0) {
            p.c_.resize(deg + 1);
            p.c_[deg] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // zero polynomial has no degree
    std::optional<unsigned> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<unsigned>(c_.size() - 1);
    }
    const Int& coeff(unsigned k) const {
        static const Int kZero = 0;
        return k < c_.size() ? c_[k] : kZero;
    }
    // nonzero terms in increasing degree
    template <typename F>
    void for_terms(F&& fn) const {
        for (unsigned k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) fn(k, c_[k]);
    }
    unsigned term_count() const {
        unsigned n = 0;
        for (const auto& c : c_)
            if (c != 0) ++n;
        return n;
    }

    void add_term(unsigned deg, const Int& c);
    // *this += scale * w^d * q  (workhorse of the series recurrences)
    void add_scaled_shifted(const WPoly& q, unsigned d, const Int& scale);

    friend bool operator==(const WPoly& a, const WPoly& b) { return a.c_ == b.c_; }

    Int eval_int(const Int& w) const;                       // exact Horner
    Rat eval_rat(const Rat& w) const;                       // exact Horner
    Complex eval_ball(const Complex& w) const;              // Horner with err tracking
    Mag coeff_abs_eval(const Mag& r) const;                 // sum_k |c_k| r^k, upper bound
    Int max_abs_coeff() const;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

  private:
    std::vector<Int> c_;
};

} // namespace hookpoly
