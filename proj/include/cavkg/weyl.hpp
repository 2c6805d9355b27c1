// 2x2 complex matrices in the (s, p) polarization basis.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cavkg {

using cplx = std::complex<double>;

inline constexpr cplx iu{0.0, 1.0};

// Dense 2x2 complex matrix; rows/columns ordered (s, p).
struct Weyl {
    cplx ss{}, sp{}, ps{}, pp{};

    static Weyl zero() { return {}; }
    static Weyl identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Weyl diagonal(cplx s, cplx p) { return {s, 0.0, 0.0, p}; }

    Weyl transpose() const { return {ss, ps, sp, pp}; }
    Weyl conjugate() const { return {std::conj(ss), std::conj(sp), std::conj(ps), std::conj(pp)}; }
    Weyl adjoint() const { return {std::conj(ss), std::conj(ps), std::conj(sp), std::conj(pp)}; }

    cplx det() const { return ss * pp - sp * ps; }
    cplx trace() const { return ss + pp; }

    Weyl inverse() const {
        const cplx d = det();
        if (std::abs(d) == 0.0)
            throw std::domain_error("Weyl::inverse(): singular matrix");
        return {pp / d, -sp / d, -ps / d, ss / d};
    }

    Weyl& operator+=(const Weyl& o) {
        ss += o.ss; sp += o.sp; ps += o.ps; pp += o.pp;
        return *this;
    }
    Weyl& operator-=(const Weyl& o) {
        ss -= o.ss; sp -= o.sp; ps -= o.ps; pp -= o.pp;
        return *this;
    }
    Weyl& operator*=(cplx c) {
        ss *= c; sp *= c; ps *= c; pp *= c;
        return *this;
    }
};

inline Weyl operator+(Weyl a, const Weyl& b) { return a += b; }
inline Weyl operator-(Weyl a, const Weyl& b) { return a -= b; }
inline Weyl operator-(const Weyl& a) { return {-a.ss, -a.sp, -a.ps, -a.pp}; }
inline Weyl operator*(Weyl a, cplx c) { return a *= c; }
inline Weyl operator*(cplx c, Weyl a) { return a *= c; }
inline Weyl operator*(Weyl a, double c) { return a *= cplx(c); }
inline Weyl operator*(double c, Weyl a) { return a *= cplx(c); }

inline Weyl operator*(const Weyl& a, const Weyl& b) {
    return {a.ss * b.ss + a.sp * b.ps, a.ss * b.sp + a.sp * b.pp,
            a.ps * b.ss + a.pp * b.ps, a.ps * b.sp + a.pp * b.pp};
}

// Frobenius norm.
inline double norm(const Weyl& m) {
    return std::sqrt(std::norm(m.ss) + std::norm(m.sp) + std::norm(m.ps) + std::norm(m.pp));
}

inline double max_abs(const Weyl& m) {
    return std::max(std::max(std::abs(m.ss), std::abs(m.sp)),
                    std::max(std::abs(m.ps), std::abs(m.pp)));
}

}  // namespace cavkg
