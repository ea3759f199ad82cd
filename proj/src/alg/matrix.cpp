#include "hdr/alg/matrix.hpp"

namespace hdr::alg {

ModMatrix ModMatrix::from_rows(u32 p, const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    ModMatrix m(rows.size(), c, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = reduce(rows[i][j], p);
    }
    return m;
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + c_, row_ptr(b));
}

void ModMatrix::row_scale(std::size_t r, Fp f, std::size_t from) {
    if (from < c_) simd::active().scale(row_ptr(r) + from, f.v, c_ - from, p_);
}

void ModMatrix::row_axpy(std::size_t dst, std::size_t src, Fp f, std::size_t from) {
    if (from < c_ && f.v) simd::active().axpy(row_ptr(dst) + from, row_ptr(src) + from, f.v, c_ - from, p_);
}

bool ModMatrix::is_zero_matrix() const {
    for (u32 v : d_)
        if (v) return false;
    return true;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product dimension mismatch");
    ModMatrix m(a.r_, b.c_, a.p_ ? a.p_ : b.p_);
    if (b.c_ == 0) return m;
    const auto& k = simd::active();
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t t = 0; t < a.c_; ++t)
            if (u32 s = a.at(i, t)) k.axpy(m.row_ptr(i), b.row_ptr(t), s, b.c_, m.p_);
    return m;
}

ModMatrix operator+(ModMatrix a, const ModMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix dimension mismatch");
    if (!a.d_.empty()) simd::active().add(a.d_.data(), b.d_.data(), a.d_.size(), a.p_);
    return a;
}

ModMatrix operator-(ModMatrix a, const ModMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix dimension mismatch");
    if (!a.d_.empty()) simd::active().sub(a.d_.data(), b.d_.data(), a.d_.size(), a.p_);
    return a;
}

ModMatrix ModMatrix::operator-() const {
    ModMatrix m = *this;
    for (auto& v : m.d_) v = neg_mod(v, p_);
    return m;
}

ModMatrix ModMatrix::scaled(u32 s) const {
    ModMatrix m = *this;
    if (!m.d_.empty()) simd::active().scale(m.d_.data(), s % p_, m.d_.size(), p_);
    return m;
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix m(c_, r_, p_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ModMatrix ModMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ModMatrix m(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

ModMatrix ModMatrix::columns(const std::vector<std::size_t>& idx) const {
    ModMatrix m(r_, idx.size(), p_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) m.at(i, k) = at(i, idx[k]);
    return m;
}

void ModMatrix::set_block(std::size_t r0, std::size_t c0, const ModMatrix& b) {
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

std::string ModMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) s += ", ";
            s += std::to_string(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

Matrix<RatFun> ModMatrix::to_ratfun() const {
    Matrix<RatFun> m(r_, c_, RatFun(p_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = RatFun::constant(p_, at(i, j));
    return m;
}

Matrix<Poly> ModMatrix::to_poly() const {
    Matrix<Poly> m(r_, c_, Poly(p_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = Poly::constant(p_, at(i, j));
    return m;
}

ModMatrix hstack(const ModMatrix& a, const ModMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    ModMatrix m(a.rows(), a.cols() + b.cols(), a.prime() ? a.prime() : b.prime());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

ModMatrix vstack(const ModMatrix& a, const ModMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    ModMatrix m(a.rows() + b.rows(), a.cols(), a.prime() ? a.prime() : b.prime());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

ModMatrix power(const ModMatrix& a, unsigned k) {
    ModMatrix r = ModMatrix::identity(a.rows(), a.prime());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

ModMatrix evaluate(const Matrix<RatFun>& m, u32 a) {
    ModMatrix r(m.rows(), m.cols(), m.zero().prime());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m(i, j).eval(a);
    return r;
}

ModMatrix evaluate(const Matrix<Poly>& m, u32 a) {
    ModMatrix r(m.rows(), m.cols(), m.zero().prime());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m(i, j).eval(a);
    return r;
}

Matrix<RatFun> to_ratfun(const Matrix<Poly>& m) {
    return m.map([](const Poly& f) { return RatFun(f); });
}

Matrix<Poly> to_poly(const Matrix<RatFun>& m) {
    return m.map([](const RatFun& f) {
        if (!f.is_polynomial()) throw std::domain_error("entry " + f.to_string() + " is not a polynomial");
        return f.num();
    });
}

}  // namespace hdr::alg
