#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdr/alg/fp.hpp"
#include "hdr/alg/poly.hpp"
#include "hdr/alg/ratfun.hpp"
#include "hdr/alg/rational.hpp"
#include "hdr/simd/mod_kernels.hpp"

namespace hdr::alg {

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Poly& a) { return a.is_zero(); }
inline bool is_zero(const RatFun& a) { return a.is_zero(); }
inline Fp inverse(const Fp& a) { return a.inverse(); }
inline RatFun inverse(const RatFun& a) { return a.inverse(); }
inline Fp one_like(const Fp& a) { return Fp(1, a.p); }
inline Poly one_like(const Poly& a) { return Poly::constant(a.prime(), 1); }
inline RatFun one_like(const RatFun& a) { return RatFun::constant(a.prime(), 1); }
inline std::size_t pivot_cost(const Fp&) { return 0; }
inline std::size_t pivot_cost(const RatFun& f) { return f.num().degree() + f.den().degree(); }
inline std::string to_string(const Fp& a) { return a.to_string(); }
inline std::string to_string(const Poly& a) { return a.to_string(); }
inline std::string to_string(const RatFun& a) { return a.to_string(); }

// Dense row-major matrix over a ring whose zero needs a prototype (the prime
// lives inside the element).
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : r_(rows), c_(cols), zero_(std::move(zero)), d_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix m(n, n, zero);
        T one = one_like(zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    const T& zero() const noexcept { return zero_; }
    T one() const { return one_like(zero_); }
    Matrix make(std::size_t r, std::size_t c) const { return Matrix(r, c, zero_); }

    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    const T& get(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    void set(std::size_t i, std::size_t j, T v) { d_[i * c_ + j] = std::move(v); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    void row_scale(std::size_t r, const T& f, std::size_t from = 0) {
        for (std::size_t j = from; j < c_; ++j) (*this)(r, j) = (*this)(r, j) * f;
    }
    void col_scale(std::size_t c, const T& f) {
        for (std::size_t i = 0; i < r_; ++i) (*this)(i, c) = (*this)(i, c) * f;
    }
    // row dst += f * row src
    void row_axpy(std::size_t dst, std::size_t src, const T& f, std::size_t from = 0) {
        for (std::size_t j = from; j < c_; ++j)
            if (!is_zero((*this)(src, j))) (*this)(dst, j) = (*this)(dst, j) + f * (*this)(src, j);
    }
    // col dst += f * col src
    void col_axpy(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t i = 0; i < r_; ++i)
            if (!is_zero((*this)(i, src))) (*this)(i, dst) = (*this)(i, dst) + (*this)(i, src) * f;
    }

    bool is_zero_matrix() const {
        for (const auto& v : d_)
            if (!is_zero(v)) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix m(a.r_, b.c_, a.zero_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (!is_zero(b(k, j))) m(i, j) = m(i, j) + aik * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.d_.size(); ++i) a.d_[i] = a.d_[i] + b.d_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.d_.size(); ++i) a.d_[i] = a.d_[i] - b.d_[i];
        return a;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.d_) v = -v;
        return m;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& v : a.d_) v = s * v;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix m(c_, r_, zero_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix m(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }
    Matrix column(std::size_t j) const { return block(0, j, r_, 1); }
    Matrix columns(const std::vector<std::size_t>& idx) const {
        Matrix m(r_, idx.size(), zero_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
        return m;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t i = 0; i < b.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(r_, c_, f(zero_));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < c_; ++j) {
                if (j) s += ", ";
                using hdr::alg::to_string;
                s += to_string((*this)(i, j));
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t r_ = 0, c_ = 0;
    T zero_{};
    std::vector<T> d_;

    void check_same(const Matrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix dimension mismatch");
    }
};

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<T> m = a.make(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix<T> m = a.make(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
    Matrix<T> r = Matrix<T>::identity(a.rows(), a.zero());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

// Dense F_p matrix on contiguous residues so row operations go through the
// vector kernels.
class ModMatrix {
public:
    using value_type = Fp;

    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols, u32 p) : r_(rows), c_(cols), p_(p), d_(rows * cols, 0) {}
    static ModMatrix identity(std::size_t n, u32 p) {
        ModMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.d_[i * n + i] = 1 % p;
        return m;
    }
    static ModMatrix from_rows(u32 p, const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    u32 prime() const noexcept { return p_; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    ModMatrix make(std::size_t r, std::size_t c) const { return ModMatrix(r, c, p_); }

    u32& at(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    u32 at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    Fp get(std::size_t i, std::size_t j) const { return Fp(d_[i * c_ + j], p_); }
    void set(std::size_t i, std::size_t j, Fp v) { d_[i * c_ + j] = v.v; }
    u32* row_ptr(std::size_t i) { return d_.data() + i * c_; }
    const u32* row_ptr(std::size_t i) const { return d_.data() + i * c_; }

    void swap_rows(std::size_t a, std::size_t b);
    void row_scale(std::size_t r, Fp f, std::size_t from = 0);
    void row_axpy(std::size_t dst, std::size_t src, Fp f, std::size_t from = 0);

    bool is_zero_matrix() const;
    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
    friend ModMatrix operator+(ModMatrix a, const ModMatrix& b);
    friend ModMatrix operator-(ModMatrix a, const ModMatrix& b);
    ModMatrix operator-() const;
    ModMatrix scaled(u32 s) const;
    friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend bool operator!=(const ModMatrix& a, const ModMatrix& b) { return !(a == b); }

    ModMatrix transpose() const;
    ModMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    ModMatrix column(std::size_t j) const { return block(0, j, r_, 1); }
    ModMatrix columns(const std::vector<std::size_t>& idx) const;
    void set_block(std::size_t r0, std::size_t c0, const ModMatrix& b);
    std::string to_string() const;

    Matrix<RatFun> to_ratfun() const;
    Matrix<Poly> to_poly() const;

private:
    std::size_t r_ = 0, c_ = 0;
    u32 p_ = 0;
    std::vector<u32> d_;
};

ModMatrix hstack(const ModMatrix& a, const ModMatrix& b);
ModMatrix vstack(const ModMatrix& a, const ModMatrix& b);
ModMatrix power(const ModMatrix& a, unsigned k);

// Entrywise evaluation at x = a; throws on a pole.
ModMatrix evaluate(const Matrix<RatFun>& m, u32 a);
ModMatrix evaluate(const Matrix<Poly>& m, u32 a);
Matrix<RatFun> to_ratfun(const Matrix<Poly>& m);
// Throws if some entry is not a polynomial.
Matrix<Poly> to_poly(const Matrix<RatFun>& m);

}  // namespace hdr::alg
