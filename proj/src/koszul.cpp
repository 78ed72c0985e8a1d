#include "twcy/koszul.hpp"

#include "twcy/errors.hpp"

namespace twcy {

QuadraticPresentation koszul_dual_presentation(const QuadraticPresentation& p)
{
    p.validate();
    int n = p.size();
    Matrix rel(p.relations.size(), static_cast<std::size_t>(n) * n);
    for (std::size_t r = 0; r < p.relations.size(); ++r)
        for (const auto& [k, v] : p.relations[r])
            rel.set(r, k, v);
    QuadraticPresentation d;
    d.family = "koszul-dual";
    for (const auto& g : p.generators)
        d.generators.push_back(g + "~");
    for (const auto& v : rank_kernel(rel).kernel) {
        SparseVector s;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0)
                s[k] = v[k];
        d.relations.push_back(s);
    }
    return d;
}

GradedAlgebra koszul_dual(const QuadraticPresentation& p)
{
    return GradedAlgebra(koszul_dual_presentation(p), kDualSafetyCutoff, true);
}

std::vector<Split> KoszulDualCoalgebra::left_split(long c) const
{
    std::vector<Split> out;
    for (const auto& s : delta[c])
        if (weight[s.a] == 1)
            out.push_back(s);
    return out;
}

std::vector<Split> KoszulDualCoalgebra::right_split(long c) const
{
    std::vector<Split> out;
    for (const auto& s : delta[c])
        if (weight[s.b] == 1)
            out.push_back(s);
    return out;
}

std::vector<Split> KoszulDualCoalgebra::reduced_delta(long c) const
{
    std::vector<Split> out;
    for (const auto& s : delta[c])
        if (weight[s.a] > 0 && weight[s.b] > 0)
            out.push_back(s);
    return out;
}

KoszulDualCoalgebra dual_coalgebra(const GradedAlgebra& a, const std::vector<std::string>& names)
{
    KoszulDualCoalgebra c;
    int top = a.top();
    c.global.resize(top + 1);
    for (int m = 0; m <= top; ++m)
        for (std::size_t i = 0; i < a.dim(m); ++i) {
            c.global[m].push_back(static_cast<long>(c.weight.size()));
            c.weight.push_back(m);
            c.local.push_back(static_cast<long>(i));
            const Word& w = a.basis(m)[i];
            std::string s;
            for (int x : w)
                s += names.at(x);
            c.labels.push_back(m == 0 ? "1" : "y(" + s + ")");
        }
    c.delta.resize(c.size());
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (std::size_t i = 0; i < a.dim(p); ++i)
                for (std::size_t j = 0; j < a.dim(q); ++j)
                    for (const auto& [k, v] : a.multiply(p, static_cast<long>(i), q, static_cast<long>(j)))
                        c.delta[c.global[p + q][k]].push_back({c.global[p][i], c.global[q][j], v});
    return c;
}

bool coassociative(const KoszulDualCoalgebra& c)
{
    for (std::size_t k = 0; k < c.size(); ++k) {
        std::map<std::tuple<long, long, long>, Rational> lhs, rhs;
        for (const auto& s : c.delta[k]) {
            for (const auto& t : c.delta[s.a])
                lhs[{t.a, t.b, s.b}] += s.coef * t.coef;
            for (const auto& t : c.delta[s.b])
                rhs[{s.a, t.a, t.b}] += s.coef * t.coef;
        }
        for (auto* m : {&lhs, &rhs})
            for (auto it = m->begin(); it != m->end();)
                it = it->second == 0 ? m->erase(it) : std::next(it);
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool counital(const KoszulDualCoalgebra& c)
{
    for (std::size_t k = 0; k < c.size(); ++k) {
        Rational left = 0, right = 0;
        for (const auto& s : c.delta[k]) {
            if (s.a == 0 && s.b == static_cast<long>(k))
                left += s.coef;
            if (s.b == 0 && s.a == static_cast<long>(k))
                right += s.coef;
            if ((s.a == 0 && s.b != static_cast<long>(k)) || (s.b == 0 && s.a != static_cast<long>(k)))
                return false;
        }
        if (left != 1 || right != 1)
            return false;
    }
    return true;
}

Matrix FrobeniusData::pairing_full() const
{
    std::size_t N = coalgebra.size();
    Matrix g(N, N);
    for (int m = 0; m <= n; ++m)
        for (std::size_t i = 0; i < pairing[m].rows(); ++i)
            for (const auto& [j, v] : pairing[m].row(i))
                g.set(coalgebra.global[m][i], coalgebra.global[n - m][j], v);
    return g;
}

Rational FrobeniusData::pair(long k, long l) const
{
    int m = coalgebra.weight[k];
    if (coalgebra.weight[l] != n - m)
        return 0;
    return pairing[m].at(coalgebra.local[k], coalgebra.local[l]);
}

static SparseVector apply_graded(const KoszulDualCoalgebra& c, const std::vector<Matrix>& mats, long k)
{
    int m = c.weight[k];
    SparseVector out;
    const Matrix& s = mats[m];
    for (std::size_t i = 0; i < s.rows(); ++i) {
        Rational v = s.at(i, c.local[k]);
        if (v != 0)
            out[c.global[m][i]] = v;
    }
    return out;
}

SparseVector FrobeniusData::sigma_of(long k) const { return apply_graded(coalgebra, sigma, k); }
SparseVector FrobeniusData::sigma_inv_of(long k) const { return apply_graded(coalgebra, sigma_inv, k); }

FrobeniusData frobenius_check(const GradedAlgebra& a, const std::vector<std::string>& names)
{
    FrobeniusData f;
    f.dual = a;
    int n = a.top();
    f.n = n;
    if (a.dim(n) != 1)
        throw InputError("input is not Frobenius / not AS-regular: top weight " + std::to_string(n) + " is " +
                         std::to_string(a.dim(n)) + "-dimensional");
    f.coalgebra = dual_coalgebra(a, names);
    for (int m = 0; m <= n; ++m) {
        Matrix g(a.dim(m), a.dim(n - m));
        for (std::size_t i = 0; i < a.dim(m); ++i)
            for (std::size_t j = 0; j < a.dim(n - m); ++j)
                g.set(i, j, a.multiply(m, static_cast<long>(i), n - m, static_cast<long>(j))[0]);
        if (g.rows() != g.cols() || rank(g) != g.rows())
            throw InputError("input is not Frobenius / not AS-regular: pairing block in weight " + std::to_string(m) +
                             " is singular");
        f.pairing.push_back(g);
    }
    f.eta = f.coalgebra.global[n][0];
    f.delta_eta = f.coalgebra.delta[f.eta];
    for (int m = 0; m <= n; ++m) {
        Matrix s = inverse(f.pairing[n - m]) * f.pairing[m].transpose();
        if ((m * (n - m)) % 2)
            s = scale(s, -1);
        f.sigma_star.push_back(s);
        Matrix t = inverse(s.transpose());
        f.sigma.push_back(t);
        f.sigma_inv.push_back(inverse(t));
    }
    return f;
}

FrobeniusData frobenius_data(const QuadraticPresentation& p)
{
    return frobenius_check(koszul_dual(p), p.generators);
}

FrobeniusInvariants check_frobenius_invariants(const FrobeniusData& f)
{
    FrobeniusInvariants r;
    const GradedAlgebra& a = f.dual;
    int n = f.n;
    for (int m = 0; m <= n; ++m)
        if (a.dim(m) != a.dim(n - m))
            r.dims_symmetric = false;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q)
            for (long i = 0; i < static_cast<long>(a.dim(p)); ++i)
                for (long j = 0; j < static_cast<long>(a.dim(q)); ++j) {
                    SparseVector ab = a.multiply(p, i, q, j);
                    Matrix sab = f.sigma_star[p + q];
                    SparseVector lhs;
                    for (const auto& [k, v] : ab)
                        for (std::size_t t = 0; t < sab.rows(); ++t)
                            if (sab.at(t, k) != 0)
                                axpy(lhs, v * sab.at(t, k), SparseVector{{static_cast<long>(t), Rational(1)}});
                    SparseVector sa, sb;
                    for (std::size_t t = 0; t < a.dim(p); ++t)
                        if (f.sigma_star[p].at(t, i) != 0)
                            sa[t] = f.sigma_star[p].at(t, i);
                    for (std::size_t t = 0; t < a.dim(q); ++t)
                        if (f.sigma_star[q].at(t, j) != 0)
                            sb[t] = f.sigma_star[q].at(t, j);
                    if (lhs != a.multiply(p, sa, q, sb))
                        r.sigma_star_multiplicative = false;
                    for (int s = 0; p + q + s <= n; ++s) {
                        for (long k = 0; k < static_cast<long>(a.dim(s)); ++k) {
                            SparseVector bc = a.multiply(q, j, s, k);
                            SparseVector lhs2 = a.multiply(p, SparseVector{{i, Rational(1)}}, q + s, bc);
                            SparseVector rhs2 = a.multiply(p + q, ab, s, SparseVector{{k, Rational(1)}});
                            if (lhs2 != rhs2)
                                r.associative = false;
                            if (p + q + s != n)
                                continue;
                            Rational x = 0, y = 0;
                            for (const auto& [t, v] : bc)
                                x += v * f.pairing[p].at(i, t);
                            for (const auto& [t, v] : ab)
                                y += v * f.pairing[p + q].at(t, k);
                            if (x != y)
                                r.invariant_pairing = false;
                        }
                    }
                }
    for (int m = 0; m <= n; ++m) {
        const Matrix& s = f.sigma_star[m];
        const Matrix& s2 = f.sigma_star[n - m];
        if (!(s.transpose() * f.pairing[m] * s2 == f.pairing[m]))
            r.sigma_star_isometry = false;
        // <a, b> = (-1)^{|a||b|} <b, sigma*(a)>
        Matrix rhs = (f.pairing[n - m] * s).transpose();
        if ((m * (n - m)) % 2)
            rhs = scale(rhs, -1);
        if (!(rhs == f.pairing[m]))
            r.defining_relation = false;
    }
    std::map<std::pair<long, long>, Rational> lhs, rhs;
    for (const auto& s : f.delta_eta) {
        rhs[{s.a, s.b}] += s.coef;
        for (const auto& [x, u] : f.sigma_of(s.a))
            for (const auto& [y, v] : f.sigma_of(s.b))
                lhs[{x, y}] += s.coef * u * v;
    }
    for (auto* m : {&lhs, &rhs})
        for (auto it = m->begin(); it != m->end();)
            it = it->second == 0 ? m->erase(it) : std::next(it);
    r.delta_eta_sigma_invariant = lhs == rhs;
    return r;
}

KoszulityCertificate koszulity_certificate(const QuadraticPresentation& p, const KoszulDualCoalgebra& c, int cutoff)
{
    KoszulityCertificate cert;
    cert.cutoff = cutoff;
    GradedAlgebra a(p, cutoff);
    int top = c.top();
    for (int w = 1; w <= cutoff; ++w) {
        BigradedComplex k;
        for (int q = 0; q <= std::min(w, top); ++q) {
            std::vector<BasisLabel> labels;
            for (std::size_t i = 0; i < a.dim(w - q); ++i)
                for (long cc : c.global[q])
                    labels.push_back({w, q, std::to_string(i) + "|" + std::to_string(cc)});
            k.set_piece(w, q, GradedBasis(labels));
        }
        auto col = [&](int q, std::size_t i, std::size_t j) { return i * c.global[q].size() + j; };
        for (int q = 1; q <= std::min(w, top); ++q) {
            Matrix d(k.dim(w, q - 1), k.dim(w, q));
            for (std::size_t i = 0; i < a.dim(w - q); ++i)
                for (std::size_t j = 0; j < c.global[q].size(); ++j)
                    for (const auto& s : c.left_split(c.global[q][j])) {
                        int x = static_cast<int>(c.local[s.a]);
                        SparseVector ax = a.times_generator(w - q, SparseVector{{static_cast<long>(i), Rational(1)}}, x);
                        for (const auto& [t, v] : ax)
                            d.add(col(q - 1, t, c.local[s.b]), col(q, i, j), s.coef * v);
                    }
            k.set_differential(w, q, d);
        }
        for (int q = 0; q <= std::min(w, top); ++q) {
            if (homology(k, w, q, false).dimension != 0) {
                cert.certified = false;
                cert.failing_weight = w;
                cert.failing_degree = q;
                return cert;
            }
        }
    }
    return cert;
}

}  // namespace twcy
