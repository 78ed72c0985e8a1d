#include "twcy/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "twcy/errors.hpp"

namespace twcy {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix::Matrix(const std::vector<std::vector<Rational>>& entries)
    : rows_(entries.size()), cols_(entries.empty() ? 0 : entries[0].size()), data_(entries.size())
{
    for (std::size_t i = 0; i < rows_; ++i) {
        if (entries[i].size() != cols_)
            throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < cols_; ++j)
            if (entries[i][j] != 0)
                data_[i][j] = entries[i][j];
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Rational Matrix::at(std::size_t i, std::size_t j) const
{
    auto it = data_[i].find(j);
    return it == data_[i].end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& v)
{
    if (v == 0)
        data_[i].erase(j);
    else
        data_[i][j] = v;
}

void Matrix::add(std::size_t i, std::size_t j, const Rational& v)
{
    if (v == 0)
        return;
    Rational& e = data_[i][j];
    e += v;
    if (e == 0)
        data_[i].erase(j);
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i])
            t.data_[j][i] = v;
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& r : data_)
        if (!r.empty())
            return false;
    return true;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

std::vector<std::vector<Rational>> Matrix::dense() const
{
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i])
            out[i][j] = v;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (const auto& [k, x] : a.data_[i])
            for (const auto& [j, y] : b.data_[k])
                c.add(i, j, x * y);
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (const auto& [j, v] : b.data_[i])
            c.add(i, j, v);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + scale(b, -1); }

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size())
        throw InputError("matrix-vector dimension mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (const auto& [j, x] : a.data_[i])
            out[i] += x * v[j];
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i))
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (const auto& [l, y] : b.row(k))
                    c.set(i * b.rows() + k, j * b.cols() + l, x * y);
    return c;
}

Matrix scale(const Matrix& a, const Rational& s)
{
    Matrix c(a.rows(), a.cols());
    if (s == 0)
        return c;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i))
            c.set(i, j, x * s);
    return c;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            y.emplace(k, a * v);
        } else {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

SparseVector EchelonSpan::reduce(SparseVector v) const
{
    auto it = v.begin();
    while (it != v.end()) {
        long k = it->first;
        auto p = rows_.find(k);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        Rational c = it->second;
        axpy(v, -c, p->second);
        it = v.upper_bound(k);
    }
    return v;
}

bool EchelonSpan::add(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    Rational lead = v.begin()->second;
    if (lead != 1)
        for (auto& [k, x] : v)
            x /= lead;
    long pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

bool EchelonSpan::contains(SparseVector v) const { return reduce(std::move(v)).empty(); }

std::vector<SparseVector> EchelonSpan::reduced_rows() const
{
    std::map<long, SparseVector> rows = rows_;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        long p = it->first;
        for (auto jt = rows.begin(); jt->first != p; ++jt) {
            auto e = jt->second.find(p);
            if (e != jt->second.end()) {
                Rational c = e->second;
                axpy(jt->second, -c, it->second);
            }
        }
    }
    std::vector<SparseVector> out;
    for (auto& [p, r] : rows)
        out.push_back(std::move(r));
    return out;
}

static std::vector<SparseVector> echelon_rows(const Matrix& m)
{
    EchelonSpan s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseVector r;
        for (const auto& [j, v] : m.row(i))
            r.emplace(static_cast<long>(j), v);
        s.add(std::move(r));
    }
    return s.reduced_rows();
}

Matrix rref(const Matrix& m)
{
    auto rows = echelon_rows(m);
    Matrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i])
            out.set(i, j, v);
    return out;
}

std::size_t rank(const Matrix& m)
{
    EchelonSpan s;
    if (m.rows() <= m.cols()) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            SparseVector r(m.row(i).begin(), m.row(i).end());
            s.add(std::move(r));
        }
    } else {
        Matrix t = m.transpose();
        for (std::size_t i = 0; i < t.rows(); ++i) {
            SparseVector r(t.row(i).begin(), t.row(i).end());
            s.add(std::move(r));
        }
    }
    return s.rank();
}

RankKernel rank_kernel(const Matrix& m)
{
    auto rows = echelon_rows(m);
    RankKernel out;
    out.rank = rows.size();
    std::vector<long> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& r : rows) {
        pivots.push_back(r.begin()->first);
        is_pivot[r.begin()->first] = true;
    }
    EchelonSpan kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        SparseVector v;
        v[f] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto e = rows[r].find(f);
            if (e != rows[r].end())
                v[pivots[r]] = -e->second;
        }
        kernel.add(std::move(v));
    }
    for (const auto& r : kernel.reduced_rows()) {
        Vector v(m.cols());
        for (const auto& [j, x] : r)
            v[j] = x;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw IntegrityError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [j, v] : m.row(i))
            aug.set(i, j, v);
        aug.set(i, n + i, 1);
    }
    Matrix r = rref(aug);
    if (r.rows() != n)
        throw IntegrityError("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (r.row(i).empty() || r.row(i).begin()->first != static_cast<long>(i))
            throw IntegrityError("singular matrix");
        for (const auto& [j, v] : r.row(i))
            if (j >= n)
                inv.set(i, j - n, v);
    }
    return inv;
}

static SparseVector to_sparse(const Vector& v)
{
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            s.emplace(static_cast<long>(i), v[i]);
    return s;
}

bool membership(const Vector& v, const std::vector<Vector>& span)
{
    EchelonSpan s;
    for (const auto& u : span) {
        if (u.size() != v.size())
            throw InputError("membership: dimension mismatch");
        s.add(to_sparse(u));
    }
    return s.contains(to_sparse(v));
}

GradedBasis::GradedBasis(std::vector<BasisLabel> labels) : labels_(std::move(labels))
{
    std::sort(labels_.begin(), labels_.end(), [](const BasisLabel& a, const BasisLabel& b) {
        return std::tie(a.weight, a.degree, a.text) < std::tie(b.weight, b.degree, b.text);
    });
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i].text == labels_[i - 1].text && labels_[i].weight == labels_[i - 1].weight &&
            labels_[i].degree == labels_[i - 1].degree)
            throw InputError("duplicate basis label " + labels_[i].text);
}

long GradedBasis::index_of(const std::string& text) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].text == text)
            return static_cast<long>(i);
    return -1;
}

void BigradedComplex::set_piece(int weight, int degree, GradedBasis basis)
{
    pieces_[{weight, degree}] = std::move(basis);
}

void BigradedComplex::set_differential(int weight, int degree, Matrix d)
{
    if (d.cols() != dim(weight, degree) || d.rows() != dim(weight, degree - 1))
        throw IntegrityError("differential shape mismatch at (" + std::to_string(weight) + ", " +
                             std::to_string(degree) + ")");
    diffs_[{weight, degree}] = std::move(d);
}

std::size_t BigradedComplex::dim(int weight, int degree) const
{
    auto it = pieces_.find({weight, degree});
    return it == pieces_.end() ? 0 : it->second.size();
}

const GradedBasis& BigradedComplex::basis(int weight, int degree) const
{
    static const GradedBasis empty;
    auto it = pieces_.find({weight, degree});
    return it == pieces_.end() ? empty : it->second;
}

Matrix BigradedComplex::differential(int weight, int degree) const
{
    auto it = diffs_.find({weight, degree});
    if (it != diffs_.end())
        return it->second;
    return Matrix(dim(weight, degree - 1), dim(weight, degree));
}

std::vector<std::pair<int, int>> BigradedComplex::bidegrees() const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [k, b] : pieces_)
        out.push_back(k);
    return out;
}

void BigradedComplex::check_square_zero(int weight, int degree) const
{
    if (dim(weight, degree) == 0 || dim(weight, degree - 2) == 0)
        return;
    if (!(differential(weight, degree - 1) * differential(weight, degree)).is_zero())
        throw IntegrityError("differential does not square to zero at (weight " + std::to_string(weight) +
                             ", degree " + std::to_string(degree) + ")");
}

void BigradedComplex::check_square_zero() const
{
    for (const auto& [w, i] : bidegrees())
        check_square_zero(w, i);
}

HomologyEntry homology(const BigradedComplex& c, int weight, int degree, bool representatives)
{
    c.check_square_zero(weight, degree);
    c.check_square_zero(weight, degree + 1);
    HomologyEntry h;
    h.weight = weight;
    h.degree = degree;
    Matrix out = c.differential(weight, degree);
    Matrix in = c.differential(weight, degree + 1);
    if (!representatives) {
        h.dimension = c.dim(weight, degree) - rank(out) - rank(in);
        return h;
    }
    RankKernel rk = rank_kernel(out);
    EchelonSpan boundaries;
    for (std::size_t j = 0; j < in.cols(); ++j) {
        SparseVector v;
        for (std::size_t i = 0; i < in.rows(); ++i) {
            Rational x = in.at(i, j);
            if (x != 0)
                v.emplace(static_cast<long>(i), x);
        }
        boundaries.add(std::move(v));
    }
    std::size_t nb = boundaries.rank();
    EchelonSpan reps;
    for (const auto& k : rk.kernel) {
        SparseVector v = to_sparse(k);
        SparseVector r = boundaries.reduce(v);
        if (!r.empty() && boundaries.add(r))
            reps.add(r);
    }
    h.dimension = boundaries.rank() - nb;
    for (const auto& r : reps.reduced_rows()) {
        Vector v(c.dim(weight, degree));
        for (const auto& [j, x] : r)
            v[j] = x;
        h.representatives.push_back(std::move(v));
    }
    return h;
}

BigradedComplex permute_labels(const BigradedComplex& c, unsigned seed)
{
    std::mt19937 rng(seed);
    std::map<std::pair<int, int>, std::vector<std::size_t>> perms;
    BigradedComplex out;
    for (const auto& bd : c.bidegrees()) {
        std::vector<std::size_t> p(c.dim(bd.first, bd.second));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        perms[bd] = p;
        out.set_piece(bd.first, bd.second, c.basis(bd.first, bd.second));
    }
    for (const auto& bd : c.bidegrees()) {
        auto below = std::make_pair(bd.first, bd.second - 1);
        if (c.dim(below.first, below.second) == 0)
            continue;
        Matrix d = c.differential(bd.first, bd.second);
        Matrix pd(d.rows(), d.cols());
        const auto& pc = perms[bd];
        const auto& pr = perms[below];
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (const auto& [j, v] : d.row(i))
                pd.set(pr[i], pc[j], v);
        out.set_differential(bd.first, bd.second, pd);
    }
    return out;
}

}  // namespace twcy
