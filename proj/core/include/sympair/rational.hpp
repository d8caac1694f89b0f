// Exact rational arithmetic for the small matrix computations the
// dimension-formula checker needs. Dimensions stay <= 8 and entries small,
// so 64-bit numerators with 128-bit intermediates are plenty.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympair {

struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n);  // NOLINT: implicit by design
    Fraction(long long n, long long d);

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num, den); }
    bool operator==(const Fraction&) const = default;
    bool is_zero() const { return num == 0; }
};

class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static RatMat identity(int n);
    static RatMat from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Fraction& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Fraction& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat scaled(const Fraction& c) const;
    bool operator==(const RatMat&) const = default;

    int rank() const;
    // dim ker(*this), i.e. cols - rank
    int kernel_dim() const;
    Fraction trace() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Fraction> a_;
};

// stacks the rows of a over the rows of b (same column count)
RatMat vstack(const RatMat& a, const RatMat& b);

// dim (ker a  intersect  ker b) for square matrices acting on the same space
int kernel_intersection_dim(const RatMat& a, const RatMat& b);

// direct sum placement of blocks along the diagonal
RatMat block_diag(const std::vector<RatMat>& blocks);

}  // namespace sympair
