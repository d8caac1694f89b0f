#include "sympair/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace sympair {

namespace {

long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

Fraction make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = 1;
    {
        __int128 a = an, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        g = a == 0 ? 1 : a;
    }
    Fraction f;
    f.num = checked(n / g);
    f.den = checked(d / g);
    return f;
}

}  // namespace

Fraction::Fraction(long long n) : num(n), den(1) {}

Fraction::Fraction(long long n, long long d) { *this = make(n, d); }

Fraction Fraction::operator+(const Fraction& o) const {
    return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
    return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    return make(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        }
    return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    RatMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
    return out;
}

RatMat RatMat::operator-(const RatMat& o) const { return *this + o.scaled(Fraction(-1)); }

RatMat RatMat::scaled(const Fraction& c) const {
    RatMat out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = out.at(i, j) * c;
    return out;
}

int RatMat::rank() const {
    RatMat m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Fraction lead = m.at(rank, col);
        for (int r = rank + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Fraction f = m.at(r, col) / lead;
            for (int j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

int RatMat::kernel_dim() const { return cols_ - rank(); }

Fraction RatMat::trace() const {
    Fraction t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
    return t;
}

RatMat vstack(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    RatMat out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

int kernel_intersection_dim(const RatMat& a, const RatMat& b) {
    return vstack(a, b).kernel_dim();
}

RatMat block_diag(const std::vector<RatMat>& blocks) {
    int n = 0;
    for (const RatMat& b : blocks) n += b.rows();
    RatMat out(n, n);
    int off = 0;
    for (const RatMat& b : blocks) {
        if (b.rows() != b.cols()) throw std::invalid_argument("block_diag needs square blocks");
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

}  // namespace sympair
