#include "twcy/drep.hpp"

#include <functional>

#include "twcy/errors.hpp"

namespace twcy {

namespace {

std::string index_suffix(int i, int j)
{
    return "_" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

RepDGAlgebra::RepDGAlgebra(const NCCalculus& nc, int d) : nc_(nc), d_(d)
{
    if (d < 1)
        throw InputError("matrix size must be at least 1");
    const auto& c = nc.frobenius().coalgebra;
    long nb = nc.size();
    auto make = [&](int kind, int deg, int wt, const std::string& base, std::vector<int>& out) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                out.push_back(ring_.add_var(deg, wt, base + index_suffix(i, j)));
                kind_.push_back(kind);
            }
    };
    for (long a = 1; a < nb; ++a) {
        make(0, c.weight[a] - 1, c.weight[a], nc.letter_text(nc.g(a)), x_[a]);
        x_vars_.insert(x_vars_.end(), x_[a].begin(), x_[a].end());
        letter_of_[nc.g(a)];
    }
    for (long a = nc.cone() ? 0 : 1; a < nb; ++a) {
        make(1, c.weight[a], c.weight[a], nc.letter_text(nc.D(a)), dx_[a]);
        form_vars_.insert(form_vars_.end(), dx_[a].begin(), dx_[a].end());
    }
    for (long u = nc.cone() ? 0 : 1; u < nb; ++u)
        make(2, -c.weight[u], -c.weight[u], "D(" + c.labels[u] + ")", tan_[u]);

    auto letter_vars = [&](int l) -> const std::vector<int>& {
        return nc.is_D(l) ? dx_.at(nc.index(l)) : x_.at(nc.index(l));
    };
    auto each_letter = [&](const std::function<void(int, long)>& fn) {
        for (const auto& [a, v] : x_)
            fn(nc.g(a), a);
        for (const auto& [a, v] : dx_)
            fn(nc.D(a), a);
    };
    each_letter([&](int l, long a) {
        const auto& vars = letter_vars(l);
        NCElem single = nc_word({l});
        NCElem sig = nc.sigma(single), sig_inv = nc.sigma_inv(single);
        NCElem anti;
        if (nc.cone()) {
            anti[{l, nc.D(0)}] += 1;
            anti[{nc.D(0), l}] -= 1;
            std::erase_if(anti, [](const auto& kv) { return kv.second == 0; });
        }
        NCElem pl = nc.is_D(l) ? nc.partial_L(single) : nc.letter_partial(l);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                int v = vars[i * d + j];
                partial_[v] = entry(nc.letter_partial(l), i, j);
                sigma_[v] = entry(sig, i, j);
                sigma_inv_[v] = entry(sig_inv, i, j);
                if (!anti.empty())
                    anti_[v] = entry(anti, i, j);
                partial_l_[v] = entry(pl, i, j);
                if (!nc.is_D(l)) {
                    d_map_[v] = ring_.variable(dx(a, i, j));
                    delta_[v] = partial_[v];
                }
            }
    });
    for (const auto& [u, vars] : tan_) {
        DerElem du = nc.delta(nc.generator_derivation(u));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SPoly out;
                for (const auto& [t, coef] : du)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l) {
                            SPoly left = entry(t.r1, i, k);
                            if (left.empty())
                                continue;
                            SPoly right = entry(t.r2, l, j);
                            if (right.empty())
                                continue;
                            ring_.add(out, ring_.mul(ring_.mul(left, ring_.variable(tangent(t.u, k, l))), right), coef);
                        }
                delta_[vars[i * d + j]] = out;
            }
    }
    if (nc.cone())
        phi_matrix_ = phi_matrix(nc);
}

SPoly RepDGAlgebra::entry(const Word& w, int i, int j) const
{
    std::vector<SPoly> cur(d_);
    cur[i] = ring_.one();
    for (int l : w) {
        const auto& vars = nc_.is_D(l) ? dx_.at(nc_.index(l)) : x_.at(nc_.index(l));
        std::vector<SPoly> next(d_);
        for (int k = 0; k < d_; ++k) {
            if (cur[k].empty())
                continue;
            for (int m = 0; m < d_; ++m)
                ring_.add(next[m], ring_.mul(cur[k], ring_.variable(vars[k * d_ + m])));
        }
        cur = std::move(next);
    }
    return cur[j];
}

SPoly RepDGAlgebra::entry(const NCElem& e, int i, int j) const
{
    SPoly out;
    for (const auto& [w, c] : e)
        ring_.add(out, entry(w, i, j), c);
    return out;
}

SPoly RepDGAlgebra::trace(const NCElem& e) const
{
    SPoly out;
    for (int i = 0; i < d_; ++i)
        ring_.add(out, entry(e, i, i));
    return out;
}

SPoly RepDGAlgebra::partial(const SPoly& p) const { return ring_.derivation(p, partial_, 1); }
SPoly RepDGAlgebra::d(const SPoly& p) const { return ring_.derivation(p, d_map_, 1); }
SPoly RepDGAlgebra::sigma(const SPoly& p) const { return ring_.algebra_map(p, sigma_); }
SPoly RepDGAlgebra::sigma_inv(const SPoly& p) const { return ring_.algebra_map(p, sigma_inv_); }
SPoly RepDGAlgebra::anticommutator(const SPoly& p) const { return ring_.derivation(p, anti_, 0); }
SPoly RepDGAlgebra::partial_L(const SPoly& p) const { return ring_.derivation(p, partial_l_, 1); }
SPoly RepDGAlgebra::delta(const SPoly& t) const { return ring_.derivation(t, delta_, 1); }

SPoly RepDGAlgebra::phi(const SPoly& t) const
{
    if (!nc_.cone())
        throw IntegrityError("Φ_V needs the cone model");
    SPoly out;
    for (const auto& [m, c] : t) {
        if (m.empty() || !is_tangent(m.back().first) || m.back().second != 1)
            throw IntegrityError("not a tangent element: " + ring_.text(m));
        int v = m.back().first;
        long u = -1;
        int k = 0, l = 0;
        for (const auto& [uu, vars] : tan_)
            for (std::size_t s = 0; s < vars.size(); ++s)
                if (vars[s] == v) {
                    u = uu;
                    k = static_cast<int>(s) / d_;
                    l = static_cast<int>(s) % d_;
                }
        SPoly img;
        for (std::size_t col = 0; col < phi_matrix_.cols(); ++col) {
            Rational g = phi_matrix_.at(u, col);
            if (g != 0)
                ring_.add(img, ring_.variable(dx(static_cast<long>(col), k, l)), g);
        }
        Monomial f(m.begin(), m.end() - 1);
        ring_.add(out, ring_.mul(sigma(SPoly{{f, Rational(1)}}), img), c);
    }
    return out;
}

SPoly RepDGAlgebra::gl_action(int a, int b, const SPoly& p) const
{
    std::map<int, SPoly> on;
    auto fill = [&](const std::map<long, std::vector<int>>& table) {
        for (const auto& [alpha, vars] : table)
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) {
                    SPoly img;
                    if (i == a)
                        ring_.add(img, ring_.variable(vars[b * d_ + j]));
                    if (j == b)
                        ring_.add(img, ring_.variable(vars[i * d_ + a]), -1);
                    on[vars[i * d_ + j]] = img;
                }
    };
    fill(x_);
    fill(dx_);
    return ring_.derivation(p, on, 0);
}

std::vector<SPoly> RepDGAlgebra::rho(long a, int i, int j) const
{
    if (i < 0 || j < 0 || i >= d_ || j >= d_)
        throw InputError("matrix index out of range for d = " + std::to_string(d_));
    std::vector<SPoly> m(d_ * d_);
    for (int k = 0; k < d_; ++k) {
        ring_.add(m[k * d_ + j], ring_.variable(x(a, k, i)));
        ring_.add(m[i * d_ + k], ring_.variable(x(a, j, k)), -1);
    }
    return m;
}

std::vector<Monomial> RepDGAlgebra::monomials_of_weight(int weight, int nforms) const
{
    std::vector<int> vars = x_vars_;
    vars.insert(vars.end(), form_vars_.begin(), form_vars_.end());
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t t, int w, int nf) {
        if (t == vars.size()) {
            if (w == 0 && nf == 0)
                out.push_back(cur);
            return;
        }
        int v = vars[t];
        bool form = is_form(v);
        int vw = ring_.var(v).weight;
        int max_e = ring_.odd(v) ? 1 : 1 << 20;
        if (form)
            max_e = std::min(max_e, nf);
        if (vw > 0)
            max_e = std::min(max_e, w / vw);
        rec(t + 1, w, nf);
        for (int e = 1; e <= max_e; ++e) {
            cur.push_back({v, e});
            rec(t + 1, w - e * vw, form ? nf - e : nf);
            cur.pop_back();
        }
    };
    rec(0, weight, nforms);
    return out;
}

std::vector<Monomial> RepDGAlgebra::monomials(int weight, int degree, int nforms) const
{
    std::vector<Monomial> out;
    for (auto& m : monomials_of_weight(weight, nforms))
        if (ring_.degree(m) == degree)
            out.push_back(std::move(m));
    return out;
}

HHTable rep_homology(const RepDGAlgebra& rv, int cutoff)
{
    HHTable t;
    t.n = rv.nc().frobenius().n;
    const auto& ring = rv.ring();
    for (int w = 0; w <= cutoff; ++w) {
        std::map<int, std::vector<Monomial>> pieces;
        for (auto& m : rv.monomials_of_weight(w, 0))
            pieces[ring.degree(m)].push_back(std::move(m));
        BigradedComplex c;
        std::map<int, std::map<Monomial, long>> index;
        for (int deg = 0; deg <= w; ++deg) {
            std::vector<BasisLabel> labels;
            for (const auto& m : pieces[deg]) {
                index[deg].emplace(m, static_cast<long>(labels.size()));
                labels.push_back({w, deg, ring.text(m)});
            }
            c.set_piece(w, deg, GradedBasis(labels));
        }
        for (int deg = 1; deg <= w; ++deg) {
            Matrix dm(pieces[deg - 1].size(), pieces[deg].size());
            for (std::size_t col = 0; col < pieces[deg].size(); ++col)
                for (const auto& [m, v] : rv.partial(SPoly{{pieces[deg][col], Rational(1)}}))
                    dm.set(index[deg - 1].at(m), col, v);
            c.set_differential(w, deg, dm);
        }
        c.check_square_zero();
        for (int deg = 0; deg <= w; ++deg) {
            t.dims[{deg, w}] = homology(c, w, deg, false).dimension;
            t.chain_dims[{deg, w}] = pieces[deg].size();
        }
    }
    return t;
}

std::size_t h0_by_ideal(const RepDGAlgebra& rv, int weight)
{
    const auto& ring = rv.ring();
    auto base = rv.monomials(weight, 0, 0);
    std::map<Monomial, long> index;
    for (const auto& m : base)
        index.emplace(m, static_cast<long>(index.size()));
    EchelonSpan span;
    for (int v : rv.x_vars()) {
        if (ring.var(v).degree != 1)
            continue;
        SPoly rel = rv.partial(ring.variable(v));
        int wr = ring.var(v).weight;
        if (wr > weight)
            continue;
        for (const auto& m : rv.monomials(weight - wr, 0, 0)) {
            SparseVector vec;
            for (const auto& [mm, c] : ring.mul(SPoly{{m, Rational(1)}}, rel))
                vec[index.at(mm)] = c;
            span.add(std::move(vec));
        }
    }
    return base.size() - span.rank();
}

bool gl_invariance_check(const RepDGAlgebra& rv, const SPoly& p)
{
    for (int a = 0; a < rv.dim(); ++a)
        for (int b = 0; b < rv.dim(); ++b)
            if (!rv.gl_action(a, b, p).empty())
                return false;
    return true;
}

SPoly omega_V(const RepDGAlgebra& rv)
{
    const auto& nc = rv.nc();
    const auto& ring = rv.ring();
    SPoly out;
    for (const auto& s : nc.frobenius().delta_eta) {
        if (!nc.cone() && (s.a == 0 || s.b == 0))
            continue;
        for (int i = 0; i < rv.dim(); ++i)
            for (int j = 0; j < rv.dim(); ++j)
                ring.add(out, ring.mul(ring.variable(rv.dx(s.a, i, j)), ring.variable(rv.dx(s.b, j, i))), s.coef / 2);
    }
    return out;
}

std::string OmegaVReport::first_failure() const
{
    if (!partial_closed)
        return "∂-closure";
    if (!sigma_invariant)
        return "σ-invariance";
    if (!d_closed)
        return "d-closure";
    if (!gl_invariant)
        return "gl-invariance";
    return "";
}

OmegaVReport verify_omega_V(const RepDGAlgebra& rv, const NCElem& form)
{
    OmegaVReport r;
    SPoly omega = rv.trace(form);
    r.omega = omega;
    r.terms = omega.size();
    r.matches_direct = omega == omega_V(rv);
    r.sigma_invariant = rv.sigma(omega) == omega;
    r.partial_closed = rv.trace(rv.nc().partial_L(form)).empty();
    r.untwisted_residual_terms = rv.partial(omega).size();
    r.d_closed = rv.d(omega).empty();
    r.gl_invariant = gl_invariance_check(rv, omega);
    return r;
}

Matrix phi_V_matrix(const RepDGAlgebra& rv)
{
    long nb = rv.nc().size();
    int d = rv.dim();
    std::size_t dd = static_cast<std::size_t>(d) * d;
    Matrix m(nb * dd, nb * dd);
    for (long u = 0; u < nb; ++u)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SPoly img = rv.phi(rv.ring().variable(rv.tangent(u, i, j)));
                for (const auto& [mono, c] : img) {
                    if (mono.size() != 1 || mono[0].second != 1 || !rv.is_form(mono[0].first))
                        throw IntegrityError("Φ_V of a generator is not linear in the form symbols");
                    for (long a = 0; a < nb; ++a)
                        for (int k = 0; k < d; ++k)
                            for (int l = 0; l < d; ++l)
                                if (rv.dx(a, k, l) == mono[0].first)
                                    m.set(u * dd + i * d + j, a * dd + k * d + l, c);
                }
            }
    return m;
}

PhiVReport verify_phi_V(const RepDGAlgebra& rv)
{
    PhiVReport r;
    const auto& f = rv.nc().frobenius();
    int d = rv.dim();
    r.shift = f.n;
    r.matrix = phi_V_matrix(rv);
    r.matrix_ok = r.matrix == kronecker(f.pairing_full(), Matrix::identity(static_cast<std::size_t>(d) * d));
    r.invertible = rank(r.matrix) == r.matrix.rows();
    r.chain_ok = true;
    for (long u = 0; u < rv.nc().size(); ++u)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                SPoly t = rv.ring().variable(rv.tangent(u, i, j));
                ++r.generators;
                SPoly lhs = rv.phi(rv.delta(t));
                SPoly rhs = rv.partial_L(rv.phi(t));
                if (lhs != rhs && r.chain_ok) {
                    r.chain_ok = false;
                    r.failure = "chain identity fails on " + rv.ring().text(t) + ": " + rv.ring().text(lhs) +
                                " vs " + rv.ring().text(rhs);
                }
            }
    if (!r.matrix_ok && r.failure.empty())
        r.failure = "generator matrix differs from pairing ⊗ identity";
    if (!r.invertible && r.failure.empty())
        r.failure = "generator matrix is singular";
    return r;
}

SignGateResult rep_sign_gate(const RepDGAlgebra& rv, int max_weight, int max_forms)
{
    SignGateResult r;
    const auto& ring = rv.ring();
    auto fail = [&](const std::string& what, const Monomial& m) {
        if (r.ok) {
            r.ok = false;
            r.failure = what + " fails on " + ring.text(m);
        }
    };
    for (int w = 0; w <= max_weight; ++w)
        for (int nf = 0; nf <= max_forms; ++nf)
            for (const auto& m : rv.monomials_of_weight(w, nf)) {
                ++r.words_checked;
                SPoly p{{m, Rational(1)}};
                SPoly dp = rv.partial(p);
                if (!rv.partial(dp).empty())
                    fail("∂²", m);
                if (rv.sigma(dp) != rv.partial(rv.sigma(p)))
                    fail("σ∂ = ∂σ", m);
                {
                    SPoly ep = rv.d(p);
                    if (!rv.d(ep).empty())
                        fail("d²", m);
                    SPoly lhs = rv.partial(ep);
                    ring.add(lhs, rv.d(dp));
                    if (lhs != rv.anticommutator(p))
                        fail("∂d + d∂", m);
                }
                if (nf == 1 && !rv.partial_L(rv.partial_L(p)).empty())
                    fail("∂_L²", m);
                if (!r.ok)
                    return r;
            }
    return r;
}

SPoly KaehlerSigma::left(const SPoly& x, const SPoly& u) const
{
    const auto& ring = rv_.ring();
    SPoly out;
    for (const auto& [mx, cx] : x)
        for (const auto& [mu, cu] : u) {
            int s = (ring.degree(mx) * ring.degree(mu)) % 2 ? -1 : 1;
            ring.add(out, ring.mul(SPoly{{mu, cu}}, rv_.sigma_inv(SPoly{{mx, cx}})), s);
        }
    return out;
}

bool KaehlerSigma::leibniz(const SPoly& a, const SPoly& b) const
{
    const auto& ring = rv_.ring();
    SPoly lhs = d_sigma(ring.mul(a, b));
    SPoly rhs = right(d_sigma(a), b);
    ring.add(rhs, left(rv_.sigma(a), d_sigma(b)), ring.degree(a) % 2 ? -1 : 1);
    return lhs == rhs;
}

bool KaehlerSigma::anticommutes(const SPoly& a) const
{
    SPoly s = d_sigma(rv_.partial(a));
    rv_.ring().add(s, rv_.partial(d_sigma(a)));
    return s == rv_.anticommutator(a);
}

bool KaehlerSigma::psi_compatible(const SPoly& a, const SPoly& u, const SPoly& b) const
{
    const auto& ring = rv_.ring();
    return psi(ring.mul(ring.mul(a, u), b)) == right(left(rv_.sigma(a), psi(u)), b);
}

}  // namespace twcy
