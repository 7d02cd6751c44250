#include "hookpoly/wpoly.hpp"

namespace hookpoly {

void WPoly::add_term(unsigned deg, const Int& c) {
    if (c == 0) return;
    if (deg >= c_.size()) c_.resize(deg + 1);
    c_[deg] += c;
    normalize();
}

void WPoly::add_scaled_shifted(const WPoly& q, unsigned d, const Int& scale) {
    if (q.c_.empty() || scale == 0) return;
    size_t need = q.c_.size() + d;
    if (c_.size() < need) c_.resize(need);
    if (scale == 1) {
        for (size_t k = 0; k < q.c_.size(); ++k)
            mpz_add(c_[k + d].get_mpz_t(), c_[k + d].get_mpz_t(), q.c_[k].get_mpz_t());
    } else if (scale == -1) {
        for (size_t k = 0; k < q.c_.size(); ++k)
            mpz_sub(c_[k + d].get_mpz_t(), c_[k + d].get_mpz_t(), q.c_[k].get_mpz_t());
    } else {
        for (size_t k = 0; k < q.c_.size(); ++k)
            mpz_addmul(c_[k + d].get_mpz_t(), scale.get_mpz_t(), q.c_[k].get_mpz_t());
    }
    normalize();
}

Int WPoly::eval_int(const Int& w) const {
    Int acc = 0;
    for (size_t k = c_.size(); k-- > 0;) {
        acc *= w;
        acc += c_[k];
    }
    return acc;
}

Rat WPoly::eval_rat(const Rat& w) const {
    Rat acc = 0;
    for (size_t k = c_.size(); k-- > 0;) {
        acc *= w;
        acc += c_[k];
    }
    return acc;
}

Complex WPoly::eval_ball(const Complex& w) const {
    mpfr_prec_t p = w.prec();
    Complex acc(p);
    for (size_t k = c_.size(); k-- > 0;) {
        acc = acc * w;
        if (c_[k] != 0) acc = acc.add_int(c_[k]);
    }
    return acc;
}

Mag WPoly::coeff_abs_eval(const Mag& r) const {
    Mag acc;
    for (size_t k = c_.size(); k-- > 0;) {
        acc = acc * r;
        if (c_[k] != 0) acc += Mag::from_int(c_[k]);
    }
    return acc;
}

Int WPoly::max_abs_coeff() const {
    Int m = 0;
    for (const auto& c : c_) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

} // namespace hookpoly
