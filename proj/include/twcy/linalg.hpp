#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcy/rational.hpp"

namespace twcy {

typedef std::vector<Rational> Vector;
typedef std::map<long, Rational> SparseVector;

/**
 * Rational matrix. Entries are stored row-wise and only nonzero entries are
 * kept, but the interface is that of a full rows x cols table.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(const std::vector<std::vector<Rational>>& entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    void add(std::size_t i, std::size_t j, const Rational& v);
    const SparseVector& row(std::size_t i) const { return data_[i]; }

    Matrix transpose() const;
    bool is_zero() const;
    Vector column(std::size_t j) const;
    std::vector<std::vector<Rational>> dense() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseVector> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Rational& s);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<Vector> kernel;
};

RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
// Reduced row echelon form, zero rows dropped.
Matrix rref(const Matrix& m);
// Throws IntegrityError when m is singular or not square.
Matrix inverse(const Matrix& m);
// Throws InputError on a length mismatch.
bool membership(const Vector& v, const std::vector<Vector>& span);

/**
 * Incrementally built row echelon basis of a span of sparse vectors.
 * Every stored row has leading coefficient 1 at its pivot.
 */
class EchelonSpan {
public:
    bool add(SparseVector v);
    bool contains(SparseVector v) const;
    SparseVector reduce(SparseVector v) const;
    std::size_t rank() const { return rows_.size(); }
    // Rows brought to reduced echelon form, in increasing pivot order.
    std::vector<SparseVector> reduced_rows() const;

private:
    std::map<long, SparseVector> rows_;
};

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

struct BasisLabel {
    int weight = 0;
    int degree = 0;
    std::string text;
};

class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<BasisLabel> labels);

    std::size_t size() const { return labels_.size(); }
    const BasisLabel& operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<BasisLabel>& labels() const { return labels_; }
    long index_of(const std::string& text) const;

private:
    std::vector<BasisLabel> labels_;
};

struct HomologyEntry {
    int weight = 0;
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<Vector> representatives;
};

/**
 * Chain complex graded by (weight, degree), differential of degree -1.
 * The differential stored at (w, i) maps the piece (w, i) to (w, i - 1):
 * rows index the target basis, columns the source basis.
 */
class BigradedComplex {
public:
    void set_piece(int weight, int degree, GradedBasis basis);
    void set_differential(int weight, int degree, Matrix d);

    std::size_t dim(int weight, int degree) const;
    const GradedBasis& basis(int weight, int degree) const;
    Matrix differential(int weight, int degree) const;
    std::vector<std::pair<int, int>> bidegrees() const;

    // Throws IntegrityError naming the bidegree when d(w,i-1) d(w,i) != 0.
    void check_square_zero(int weight, int degree) const;
    void check_square_zero() const;

private:
    std::map<std::pair<int, int>, GradedBasis> pieces_;
    std::map<std::pair<int, int>, Matrix> diffs_;
};

HomologyEntry homology(const BigradedComplex& c, int weight, int degree, bool representatives = true);

// Complex with the same homology but the basis of every piece permuted.
BigradedComplex permute_labels(const BigradedComplex& c, unsigned seed);

}  // namespace twcy
