#include "twcy/hochschild.hpp"

#include <algorithm>
#include <functional>

#include "twcy/errors.hpp"

namespace twcy {

std::size_t HHTable::at(int i, int w) const
{
    auto it = dims.find({i, w});
    if (it != dims.end())
        return it->second;
    for (const auto& [k, v] : dims)
        if (k.second == w)
            return 0;
    throw IntegrityError("Hochschild table has no weight " + std::to_string(w));
}

std::vector<int> HHTable::weights() const
{
    std::vector<int> out;
    for (const auto& [k, v] : chain_dims)
        if (out.empty() || out.back() != k.second)
            out.push_back(k.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long HHTable::euler_homology(int w) const
{
    long s = 0;
    for (const auto& [k, v] : dims)
        if (k.second == w)
            s += parity_sign(k.first) * static_cast<long>(v);
    return s;
}

long HHTable::euler_chains(int w) const
{
    long s = 0;
    for (const auto& [k, v] : chain_dims)
        if (k.second == w)
            s += parity_sign(k.first) * static_cast<long>(v);
    return s;
}

KoszulHHComplexes::KoszulHHComplexes(const QuadraticPresentation& p, const FrobeniusData& f, const Matrix& sigma_gen,
                                     int max_weight)
    : f_(f), a_(p, max_weight), sigma_gen_(sigma_gen), n_(f.n)
{
}

Matrix KoszulHHComplexes::homology_diff(int w, int q) const
{
    const auto& c = f_.coalgebra;
    std::size_t cq = c.global[q].size(), cq1 = c.global[q - 1].size();
    int wm = w - q;
    Matrix d(a_.dim(wm + 1) * cq1, a_.dim(wm) * cq);
    Rational sq = parity_sign(q);
    for (std::size_t m = 0; m < a_.dim(wm); ++m) {
        SparseVector em{{static_cast<long>(m), Rational(1)}};
        for (std::size_t j = 0; j < cq; ++j) {
            std::size_t col = m * cq + j;
            long cc = c.global[q][j];
            for (const auto& s : c.left_split(cc)) {
                int i = static_cast<int>(c.local[s.a]);
                for (std::size_t y = 0; y < sigma_gen_.rows(); ++y) {
                    Rational sy = sigma_gen_.at(y, i);
                    if (sy == 0)
                        continue;
                    for (const auto& [t, v] : a_.times_generator(wm, em, static_cast<int>(y)))
                        d.add(t * cq1 + c.local[s.b], col, s.coef * sy * v);
                }
            }
            for (const auto& s : c.right_split(cc)) {
                int i = static_cast<int>(c.local[s.b]);
                for (const auto& [t, v] : a_.generator_times(i, wm, em))
                    d.add(t * cq1 + c.local[s.a], col, sq * s.coef * v);
            }
        }
    }
    return d;
}

Matrix KoszulHHComplexes::cohomology_diff(int w, int q) const
{
    const auto& c = f_.coalgebra;
    std::size_t cq = c.global[q].size(), cq1 = c.global[q + 1].size();
    int pm = w + q;
    std::size_t da = a_.dim(pm), da1 = a_.dim(pm + 1);
    Matrix d(cq1 * da1, cq * da);
    Rational sq = parity_sign(q + 1);
    for (std::size_t j1 = 0; j1 < cq1; ++j1) {
        long cc = c.global[q + 1][j1];
        for (const auto& s : c.left_split(cc)) {
            int i = static_cast<int>(c.local[s.a]);
            long j0 = c.local[s.b];
            for (std::size_t m = 0; m < da; ++m)
                for (const auto& [t, v] : a_.generator_times(i, pm, SparseVector{{static_cast<long>(m), Rational(1)}}))
                    d.add(j1 * da1 + t, j0 * da + m, s.coef * v);
        }
        for (const auto& s : c.right_split(cc)) {
            int i = static_cast<int>(c.local[s.b]);
            long j0 = c.local[s.a];
            for (std::size_t m = 0; m < da; ++m)
                for (const auto& [t, v] : a_.times_generator(pm, SparseVector{{static_cast<long>(m), Rational(1)}}, i))
                    d.add(j1 * da1 + t, j0 * da + m, sq * s.coef * v);
        }
    }
    return d;
}

std::map<int, std::size_t> KoszulHHComplexes::homology_chain_dims(int w) const
{
    std::map<int, std::size_t> out;
    for (int q = 0; q <= n_; ++q)
        out[q] = (w - q >= 0 ? a_.dim(w - q) : 0) * f_.coalgebra.global[q].size();
    return out;
}

std::map<int, std::size_t> KoszulHHComplexes::cohomology_chain_dims(int w) const
{
    std::map<int, std::size_t> out;
    for (int q = 0; q <= n_; ++q)
        out[q] = (w + q >= 0 ? a_.dim(w + q) : 0) * f_.coalgebra.global[q].size();
    return out;
}

static void require_weight(const GradedAlgebra& a, int m)
{
    if (m > a.cutoff())
        throw IntegrityError("Hochschild complex needs A in weight " + std::to_string(m) + " beyond cutoff " +
                             std::to_string(a.cutoff()));
}

std::map<int, std::size_t> KoszulHHComplexes::homology(int w) const
{
    require_weight(a_, w);
    auto dims = homology_chain_dims(w);
    std::map<int, std::size_t> rk;
    for (int q = 1; q <= n_; ++q)
        rk[q] = (dims[q] && dims[q - 1]) ? rank(homology_diff(w, q)) : 0;
    std::map<int, std::size_t> out;
    for (int q = 0; q <= n_; ++q)
        out[q] = dims[q] - (rk.count(q) ? rk[q] : 0) - (rk.count(q + 1) ? rk[q + 1] : 0);
    return out;
}

std::map<int, std::size_t> KoszulHHComplexes::cohomology(int w) const
{
    require_weight(a_, w + n_);
    auto dims = cohomology_chain_dims(w);
    std::map<int, std::size_t> rk;
    for (int q = 0; q < n_; ++q)
        rk[q] = (dims[q] && dims[q + 1]) ? rank(cohomology_diff(w, q)) : 0;
    std::map<int, std::size_t> out;
    for (int q = 0; q <= n_; ++q)
        out[q] = dims[q] - (rk.count(q) ? rk[q] : 0) - (rk.count(q - 1) ? rk[q - 1] : 0);
    return out;
}

bool KoszulHHComplexes::square_zero(int w) const
{
    auto hd = homology_chain_dims(w);
    for (int q = 2; q <= n_; ++q)
        if (hd[q] && hd[q - 2] && !(homology_diff(w, q - 1) * homology_diff(w, q)).is_zero())
            return false;
    auto cd = cohomology_chain_dims(w);
    for (int q = 0; q + 2 <= n_; ++q)
        if (cd[q] && cd[q + 2] && !(cohomology_diff(w, q + 1) * cohomology_diff(w, q)).is_zero())
            return false;
    return true;
}

HHTable hh_cohomology(const QuadraticPresentation& p, const FrobeniusData& f, int cutoff)
{
    KoszulHHComplexes k(p, f, f.sigma_gen(), cutoff + f.n);
    HHTable t;
    t.n = f.n;
    for (int w = -f.n; w <= cutoff; ++w) {
        for (const auto& [i, v] : k.cohomology(w))
            t.dims[{i, w}] = v;
        for (const auto& [i, v] : k.cohomology_chain_dims(w))
            t.chain_dims[{i, w}] = v;
    }
    return t;
}

HHTable hh_twisted_homology(const QuadraticPresentation& p, const FrobeniusData& f, const Matrix& sigma_gen, int cutoff)
{
    KoszulHHComplexes k(p, f, sigma_gen, std::max(cutoff, 1));
    HHTable t;
    t.n = f.n;
    for (int w = 0; w <= cutoff; ++w) {
        for (const auto& [i, v] : k.homology(w))
            t.dims[{i, w}] = v;
        for (const auto& [i, v] : k.homology_chain_dims(w))
            t.chain_dims[{i, w}] = v;
    }
    return t;
}

namespace {

typedef std::pair<int, long> Elt;
typedef std::vector<Elt> Chain;

void compositions(int s, int p, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (p == 0) {
        if (s == 0)
            out.push_back(cur);
        return;
    }
    for (int a = 1; a <= s - p + 1; ++a) {
        cur.push_back(a);
        compositions(s - a, p - 1, cur, out);
        cur.pop_back();
    }
}

void tensors(const GradedAlgebra& a, const std::vector<int>& wts, Chain& cur, std::vector<Chain>& out)
{
    if (cur.size() == wts.size()) {
        out.push_back(cur);
        return;
    }
    int w = wts[cur.size()];
    for (std::size_t i = 0; i < a.dim(w); ++i) {
        cur.push_back({w, static_cast<long>(i)});
        tensors(a, wts, cur, out);
        cur.pop_back();
    }
}

std::vector<Chain> reduced_tensors(const GradedAlgebra& a, int s, int p)
{
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(s, p, cur, comps);
    std::vector<Chain> out;
    for (const auto& c : comps) {
        Chain ch;
        tensors(a, c, ch, out);
    }
    return out;
}

std::size_t rank_of(const std::vector<Chain>& src, const std::map<Chain, long>& tgt,
                    const std::function<std::map<Chain, Rational>(const Chain&)>& diff)
{
    if (src.empty() || tgt.empty())
        return 0;
    EchelonSpan span;
    for (const auto& ch : src) {
        SparseVector v;
        for (const auto& [k, c] : diff(ch)) {
            auto it = tgt.find(k);
            if (it != tgt.end())
                v[it->second] = c;
        }
        span.add(std::move(v));
    }
    return span.rank();
}

void add_chain(std::map<Chain, Rational>& m, const Chain& k, const Rational& v)
{
    if (v == 0)
        return;
    Rational& e = m[k];
    e += v;
    if (e == 0)
        m.erase(k);
}

}  // namespace

BarOracle::BarOracle(const QuadraticPresentation& p, const Matrix& sigma_gen, int max_weight) : a_(p, max_weight)
{
    for (int m = 0; m <= max_weight; ++m)
        sigma_.push_back(a_.graded_map(sigma_gen, m));
}

std::map<int, std::size_t> BarOracle::homology(int w, int max_p) const
{
    require_weight(a_, w);
    std::map<int, std::vector<Chain>> basis;
    for (int p = 0; p <= max_p + 1; ++p)
        for (int wm = 0; wm <= w - p; ++wm)
            for (std::size_t m = 0; m < a_.dim(wm); ++m)
                for (const auto& t : reduced_tensors(a_, w - wm, p)) {
                    Chain ch{{wm, static_cast<long>(m)}};
                    ch.insert(ch.end(), t.begin(), t.end());
                    basis[p].push_back(ch);
                }
    auto diff = [&](const Chain& ch) {
        std::map<Chain, Rational> out;
        int p = static_cast<int>(ch.size()) - 1;
        const Elt& m = ch[0];
        const Elt& a1 = ch[1];
        for (std::size_t t = 0; t < a_.dim(a1.first); ++t) {
            Rational s = sigma_[a1.first].at(t, a1.second);
            if (s == 0)
                continue;
            for (const auto& [v, c] : a_.multiply(m.first, m.second, a1.first, static_cast<long>(t))) {
                Chain k{{m.first + a1.first, v}};
                k.insert(k.end(), ch.begin() + 2, ch.end());
                add_chain(out, k, s * c);
            }
        }
        for (int i = 1; i < p; ++i) {
            const Elt& x = ch[i];
            const Elt& y = ch[i + 1];
            for (const auto& [v, c] : a_.multiply(x.first, x.second, y.first, y.second)) {
                Chain k(ch.begin(), ch.begin() + i);
                k.push_back({x.first + y.first, v});
                k.insert(k.end(), ch.begin() + i + 2, ch.end());
                add_chain(out, k, parity_sign(i) * c);
            }
        }
        const Elt& ap = ch[p];
        for (const auto& [v, c] : a_.multiply(ap.first, ap.second, m.first, m.second)) {
            Chain k{{ap.first + m.first, v}};
            k.insert(k.end(), ch.begin() + 1, ch.begin() + p);
            add_chain(out, k, parity_sign(p) * c);
        }
        return out;
    };
    std::map<int, std::size_t> rk;
    for (int p = 1; p <= max_p + 1; ++p) {
        std::map<Chain, long> idx;
        for (const auto& ch : basis[p - 1])
            idx.emplace(ch, static_cast<long>(idx.size()));
        rk[p] = rank_of(basis[p], idx, diff);
    }
    std::map<int, std::size_t> out;
    for (int p = 0; p <= max_p; ++p)
        out[p] = basis[p].size() - (p > 0 ? rk[p] : 0) - rk[p + 1];
    return out;
}

std::map<int, std::size_t> BarOracle::cohomology(int w, int max_p, int input_bound) const
{
    require_weight(a_, input_bound - 1 + w);
    // basis element: inputs a_1..a_p followed by the value m
    std::map<int, std::vector<Chain>> basis;
    for (int p = 0; p <= max_p + 1; ++p)
        for (int s = p; s < input_bound; ++s) {
            if (s + w < 0)
                continue;
            for (const auto& t : reduced_tensors(a_, s, p))
                for (std::size_t m = 0; m < a_.dim(s + w); ++m) {
                    Chain ch = t;
                    ch.push_back({s + w, static_cast<long>(m)});
                    basis[p].push_back(ch);
                }
        }
    // Coefficient of each target basis cochain in δ of a source cochain.
    auto diff = [&](int p, const std::map<Chain, long>& src_index, std::vector<std::map<Chain, Rational>>& cols) {
        for (const auto& tch : basis[p + 1]) {
            Chain a(tch.begin(), tch.end() - 1);
            const Elt& mt = tch.back();
            // a_1 f(a_2..)
            {
                Chain in(a.begin() + 1, a.end());
                int wf = mt.first - a[0].first;
                for (std::size_t m = 0; wf >= 0 && m < a_.dim(wf); ++m) {
                    Chain src = in;
                    src.push_back({wf, static_cast<long>(m)});
                    auto it = src_index.find(src);
                    if (it == src_index.end())
                        continue;
                    SparseVector v = a_.multiply(a[0].first, a[0].second, wf, static_cast<long>(m));
                    auto e = v.find(mt.second);
                    if (e != v.end())
                        add_chain(cols[it->second], tch, e->second);
                }
            }
            for (int i = 0; i < p; ++i) {
                for (const auto& [v0, c0] : a_.multiply(a[i].first, a[i].second, a[i + 1].first, a[i + 1].second)) {
                    Chain src(a.begin(), a.begin() + i);
                    src.push_back({a[i].first + a[i + 1].first, v0});
                    src.insert(src.end(), a.begin() + i + 2, a.end());
                    src.push_back(mt);
                    auto it = src_index.find(src);
                    if (it != src_index.end())
                        add_chain(cols[it->second], tch, parity_sign(i + 1) * c0);
                }
            }
            {
                Chain in(a.begin(), a.end() - 1);
                int wf = mt.first - a.back().first;
                for (std::size_t m = 0; wf >= 0 && m < a_.dim(wf); ++m) {
                    Chain src = in;
                    src.push_back({wf, static_cast<long>(m)});
                    auto it = src_index.find(src);
                    if (it == src_index.end())
                        continue;
                    SparseVector v = a_.multiply(wf, static_cast<long>(m), a.back().first, a.back().second);
                    auto e = v.find(mt.second);
                    if (e != v.end())
                        add_chain(cols[it->second], tch, parity_sign(p + 1) * e->second);
                }
            }
        }
    };
    std::map<int, std::size_t> rk;
    for (int p = 0; p <= max_p; ++p) {
        if (basis[p].empty() || basis[p + 1].empty()) {
            rk[p] = 0;
            continue;
        }
        std::map<Chain, long> src_index, tgt_index;
        for (const auto& ch : basis[p])
            src_index.emplace(ch, static_cast<long>(src_index.size()));
        for (const auto& ch : basis[p + 1])
            tgt_index.emplace(ch, static_cast<long>(tgt_index.size()));
        std::vector<std::map<Chain, Rational>> cols(basis[p].size());
        diff(p, src_index, cols);
        EchelonSpan span;
        for (const auto& col : cols) {
            SparseVector v;
            for (const auto& [k, c] : col)
                v[tgt_index.at(k)] = c;
            span.add(std::move(v));
        }
        rk[p] = span.rank();
    }
    std::map<int, std::size_t> out;
    for (int p = 0; p <= max_p; ++p)
        out[p] = basis[p].size() - rk[p] - (p > 0 ? rk[p - 1] : 0);
    return out;
}

OracleReport bar_oracle_compare(const QuadraticPresentation& p, const FrobeniusData& f, int max_weight)
{
    OracleReport r;
    int n = f.n;
    int bound = n + 4;
    KoszulHHComplexes k(p, f, f.sigma_gen(), bound - 1 + max_weight);
    BarOracle bar(p, f.sigma_gen(), bound - 1 + max_weight);
    for (auto* t : {&r.koszul_homology, &r.bar_homology, &r.koszul_cohomology, &r.bar_cohomology})
        t->n = n;
    for (int w = 0; w <= max_weight; ++w) {
        auto kh = k.homology(w);
        auto bh = bar.homology(w, n + 1);
        for (int i = 0; i <= n + 1; ++i) {
            std::size_t a = kh.count(i) ? kh[i] : 0, b = bh.count(i) ? bh[i] : 0;
            r.koszul_homology.dims[{i, w}] = a;
            r.bar_homology.dims[{i, w}] = b;
            if (a != b && r.ok) {
                r.ok = false;
                r.failure = "homology mismatch at (i " + std::to_string(i) + ", weight " + std::to_string(w) + ")";
            }
        }
    }
    for (int w = -n; w <= max_weight; ++w) {
        auto kc = k.cohomology(w);
        auto bc = bar.cohomology(w, n, bound);
        for (int i = 0; i <= n; ++i) {
            std::size_t a = kc.count(i) ? kc[i] : 0, b = bc.count(i) ? bc[i] : 0;
            r.koszul_cohomology.dims[{i, w}] = a;
            r.bar_cohomology.dims[{i, w}] = b;
            if (a != b && r.ok) {
                r.ok = false;
                r.failure = "cohomology mismatch at (i " + std::to_string(i) + ", weight " + std::to_string(w) + ")";
            }
        }
    }
    return r;
}

DualityReport duality_report(const QuadraticPresentation& p, const FrobeniusData& f, int cutoff, int shift)
{
    DualityReport r;
    r.n = f.n;
    r.shift = shift;
    r.cutoff = cutoff;
    r.cohomology = hh_cohomology(p, f, cutoff);
    r.homology = hh_twisted_homology(p, f, f.sigma_gen(), std::max(0, cutoff + shift));
    for (int w = -f.n; w <= cutoff; ++w)
        for (int i = 0; i <= f.n; ++i) {
            DualityCell c;
            c.i = i;
            c.w = w;
            c.cohomology = r.cohomology.at(i, w);
            c.homology = w + shift >= 0 ? r.homology.at(f.n - i, w + shift) : 0;
            c.match = c.cohomology == c.homology;
            r.ok = r.ok && c.match;
            r.cells.push_back(c);
        }
    return r;
}

}  // namespace twcy
