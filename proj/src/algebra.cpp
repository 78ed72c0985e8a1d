#include "twcy/algebra.hpp"

#include <algorithm>

#include "twcy/errors.hpp"

namespace twcy {

GradedAlgebra::GradedAlgebra(const QuadraticPresentation& p, int cutoff, bool stop_at_zero)
    : ngen_(p.size())
{
    p.validate();
    const int N = ngen_;
    basis_.push_back({Word{}});
    ext_.push_back({});
    if (cutoff < 1)
        return;
    std::vector<Word> b1;
    std::vector<SparseVector> e1;
    for (int x = 0; x < N; ++x) {
        b1.push_back(Word{x});
        e1.push_back(SparseVector{{x, Rational(1)}});
    }
    basis_.push_back(b1);
    ext_.push_back(e1);
    for (int m = 2; m <= cutoff; ++m) {
        const auto& prev = basis_[m - 1];
        long ncand = static_cast<long>(prev.size()) * N;
        std::vector<Word> cand(ncand);
        for (long i = 0; i < static_cast<long>(prev.size()); ++i)
            for (int x = 0; x < N; ++x) {
                Word w = prev[i];
                w.push_back(x);
                cand[i * N + x] = w;
            }
        // key(c) orders candidates by decreasing word, so pivots are the largest words
        std::vector<long> order(ncand);
        for (long c = 0; c < ncand; ++c)
            order[c] = c;
        std::sort(order.begin(), order.end(), [&](long a, long b) { return cand[a] > cand[b]; });
        std::vector<long> key(ncand), unkey(ncand);
        for (long k = 0; k < ncand; ++k) {
            key[order[k]] = k;
            unkey[k] = order[k];
        }
        EchelonSpan ideal;
        for (long k = 0; k < static_cast<long>(basis_[m - 2].size()); ++k)
            for (const auto& r : p.relations) {
                SparseVector v;
                for (const auto& [ij, coef] : r) {
                    int i = static_cast<int>(ij / N), j = static_cast<int>(ij % N);
                    for (const auto& [t, c] : ext_[m - 1][k * N + i])
                        axpy(v, coef * c, SparseVector{{key[t * N + j], Rational(1)}});
                }
                ideal.add(std::move(v));
            }
        auto rows = ideal.reduced_rows();
        std::vector<bool> is_pivot(ncand, false);
        for (const auto& r : rows)
            is_pivot[unkey[r.begin()->first]] = true;
        std::vector<Word> normal;
        for (long c = 0; c < ncand; ++c)
            if (!is_pivot[c])
                normal.push_back(cand[c]);
        std::sort(normal.begin(), normal.end());
        std::map<Word, long> idx;
        for (long i = 0; i < static_cast<long>(normal.size()); ++i)
            idx[normal[i]] = i;
        std::vector<SparseVector> ext(ncand);
        for (long c = 0; c < ncand; ++c)
            if (!is_pivot[c])
                ext[c][idx[cand[c]]] = 1;
        for (const auto& r : rows) {
            long pc = unkey[r.begin()->first];
            SparseVector v;
            for (auto it = std::next(r.begin()); it != r.end(); ++it)
                v[idx.at(cand[unkey[it->first]])] = -it->second;
            ext[pc] = v;
        }
        basis_.push_back(normal);
        ext_.push_back(ext);
        if (stop_at_zero && normal.empty())
            return;
    }
    if (stop_at_zero)
        throw InputError("dual not finite-dimensional; input not AS-regular at this cutoff");
}

int GradedAlgebra::top() const
{
    int t = 0;
    for (int m = 0; m <= cutoff(); ++m)
        if (!basis_[m].empty())
            t = m;
    return t;
}

std::size_t GradedAlgebra::dim(int m) const
{
    if (m < 0 || m > cutoff())
        return 0;
    return basis_[m].size();
}

std::vector<std::size_t> GradedAlgebra::dims() const
{
    std::vector<std::size_t> d;
    for (const auto& b : basis_)
        d.push_back(b.size());
    return d;
}

long GradedAlgebra::index(const Word& w) const
{
    if (static_cast<int>(w.size()) > cutoff())
        return -1;
    const auto& b = basis_[w.size()];
    auto it = std::lower_bound(b.begin(), b.end(), w);
    if (it == b.end() || *it != w)
        return -1;
    return it - b.begin();
}

SparseVector GradedAlgebra::times_generator(int m, const SparseVector& a, int x) const
{
    if (m + 1 > cutoff())
        throw IntegrityError("product beyond the weight cutoff " + std::to_string(cutoff()));
    SparseVector out;
    for (const auto& [i, c] : a)
        axpy(out, c, ext_[m + 1][i * ngen_ + x]);
    return out;
}

SparseVector GradedAlgebra::normal_form(const Word& w) const
{
    SparseVector cur{{0, Rational(1)}};
    for (std::size_t k = 0; k < w.size(); ++k)
        cur = times_generator(static_cast<int>(k), cur, w[k]);
    return cur;
}

SparseVector GradedAlgebra::multiply(int p, long i, int q, long j) const
{
    SparseVector cur{{i, Rational(1)}};
    const Word& w = basis_.at(q).at(j);
    for (int k = 0; k < q; ++k)
        cur = times_generator(p + k, cur, w[k]);
    return cur;
}

SparseVector GradedAlgebra::multiply(int p, const SparseVector& a, int q, const SparseVector& b) const
{
    SparseVector out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            axpy(out, x * y, multiply(p, i, q, j));
    return out;
}

SparseVector GradedAlgebra::generator_times(int x, int m, const SparseVector& a) const
{
    return multiply(1, SparseVector{{x, Rational(1)}}, m, a);
}

Matrix GradedAlgebra::graded_map(const Matrix& gen_map, int m) const
{
    Matrix out(dim(m), dim(m));
    for (std::size_t col = 0; col < dim(m); ++col) {
        SparseVector cur{{0, Rational(1)}};
        for (int k = 0; k < m; ++k) {
            int x = basis_[m][col][k];
            SparseVector next;
            for (std::size_t y = 0; y < gen_map.rows(); ++y) {
                Rational c = gen_map.at(y, x);
                if (c != 0)
                    axpy(next, c, times_generator(k, cur, static_cast<int>(y)));
            }
            cur = next;
        }
        for (const auto& [i, c] : cur)
            out.set(i, col, c);
    }
    return out;
}

std::string GradedAlgebra::word_text(const Word& w, const std::vector<std::string>& names) const
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k)
            s += " ";
        s += names.at(w[k]);
    }
    return s;
}

std::string relation_text(const SparseVector& r, const std::vector<std::string>& names)
{
    long n = static_cast<long>(names.size());
    std::string s;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        Rational c = it->second;
        std::string term = names[it->first / n] + names[it->first % n];
        if (s.empty()) {
            if (c == -1)
                s += "-";
            else if (c != 1)
                s += to_string(c) + " ";
        } else {
            s += c < 0 ? " - " : " + ";
            if (abs(c) != 1)
                s += to_string(abs(c)) + " ";
        }
        s += term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace twcy
