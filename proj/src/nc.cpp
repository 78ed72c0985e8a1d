#include "twcy/nc.hpp"

#include <functional>
#include <random>

#include "twcy/errors.hpp"

namespace twcy {

NCElem nc_word(const Word& w, const Rational& c)
{
    NCElem e;
    if (c != 0)
        e[w] = c;
    return e;
}

void nc_add(NCElem& a, const NCElem& b, const Rational& s)
{
    if (s == 0)
        return;
    for (const auto& [w, c] : b) {
        auto it = a.find(w);
        if (it == a.end()) {
            a.emplace(w, s * c);
        } else {
            it->second += s * c;
            if (it->second == 0)
                a.erase(it);
        }
    }
}

NCElem nc_mul(const NCElem& a, const NCElem& b)
{
    NCElem out;
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : b) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            nc_add(out, nc_word(w, c * e));
        }
    return out;
}

template <class K>
static void add_term(std::map<K, Rational>& m, const K& k, const Rational& v)
{
    if (v == 0)
        return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, v);
    } else {
        it->second += v;
        if (it->second == 0)
            m.erase(it);
    }
}

static int sgn(long e) { return parity_sign(((e % 2) + 2) % 2); }

static std::size_t d_position(const NCCalculus& nc, const Word& w)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        if (nc.is_D(w[i]))
            return i;
    throw IntegrityError("expected a 1-form word");
}

NCCalculus::NCCalculus(const FrobeniusData& f, bool cone) : f_(f), cone_(cone), nb_(static_cast<long>(f.coalgebra.size()))
{
    const auto& c = f.coalgebra;
    partial_.resize(2 * nb_);
    d_.resize(2 * nb_);
    sigma_.resize(2 * nb_);
    sigma_inv_.resize(2 * nb_);
    b_.resize(2 * nb_);
    for (long k = 0; k < nb_; ++k) {
        if (k > 0)
            d_[g(k)] = nc_word({D(k)});
        for (const auto& [j, v] : f.sigma_of(k)) {
            if (k > 0)
                sigma_[g(k)][{g(j)}] = v;
            sigma_[D(k)][{D(j)}] = v;
        }
        for (const auto& [j, v] : f.sigma_inv_of(k)) {
            if (k > 0)
                sigma_inv_[g(k)][{g(j)}] = v;
            sigma_inv_[D(k)][{D(j)}] = v;
        }
    }
    for (long k = 1; k < nb_; ++k)
        for (const auto& s : c.reduced_delta(k))
            add_term(partial_[g(k)], Word{g(s.a), g(s.b)}, Rational(sgn(c.weight[s.a])) * s.coef);
    for (long k = 1; k < nb_; ++k) {
        NCElem e;
        nc_add(e, d(partial_[g(k)]), -1);
        if (cone_) {
            add_term(e, Word{D(0), g(k)}, Rational(-1));
            add_term(e, Word{g(k), D(0)}, Rational(1));
        }
        partial_[D(k)] = e;
    }
    for (long k = 1; k < nb_; ++k) {
        b_[g(k)] = partial_[g(k)];
        NCElem e;
        for (const auto& s : c.reduced_delta(k)) {
            nc_add(e, nc_mul(nc_word({D(s.a)}), sigma_[g(s.b)]), Rational(-sgn(c.weight[s.a])) * s.coef);
            add_term(e, Word{g(s.a), D(s.b)}, s.coef);
        }
        if (cone_) {
            add_term(e, Word{g(k), D(0)}, Rational(1));
            nc_add(e, nc_mul(nc_word({D(0)}), sigma_[g(k)]), -1);
        }
        b_[D(k)] = e;
    }
}

int NCCalculus::degree(const Word& w) const
{
    int s = 0;
    for (int l : w)
        s += letter_degree(l);
    return s;
}

int NCCalculus::weight(const Word& w) const
{
    int s = 0;
    for (int l : w)
        s += letter_weight(l);
    return s;
}

int NCCalculus::num_D(const Word& w) const
{
    int s = 0;
    for (int l : w)
        s += is_D(l);
    return s;
}

std::string NCCalculus::letter_text(int l) const
{
    long k = index(l);
    const std::string& lab = f_.coalgebra.labels[k];
    std::string base = lab.rfind("y(", 0) == 0 ? lab.substr(2, lab.size() - 3) : lab;
    if (f_.coalgebra.weight[k] > 1)
        base = "[" + base + "]";
    return is_D(l) ? "d" + base : base;
}

std::string NCCalculus::word_text(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " " : "") + letter_text(w[i]);
    return s;
}

std::string NCCalculus::text(const NCElem& e) const
{
    if (e.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : e) {
        if (!s.empty())
            s += " + ";
        s += "(" + to_string(c) + ") " + word_text(w);
    }
    return s;
}

std::vector<int> NCCalculus::generators() const
{
    std::vector<int> out;
    for (long k = 1; k < nb_; ++k)
        out.push_back(g(k));
    return out;
}

std::vector<int> NCCalculus::letters() const
{
    std::vector<int> out = generators();
    for (long k = cone_ ? 0 : 1; k < nb_; ++k)
        out.push_back(D(k));
    return out;
}

std::vector<Word> NCCalculus::words_of_weight(int weight, int nd) const
{
    std::vector<Word> out;
    std::vector<int> alphabet = letters();
    Word cur;
    std::function<void(int, int)> rec = [&](int w, int n) {
        if (w == weight && n == nd)
            out.push_back(cur);
        for (int l : alphabet) {
            int lw = letter_weight(l);
            int ln = is_D(l);
            if (w + lw > weight || n + ln > nd)
                continue;
            if (lw == 0 && w == weight && n + ln > nd)
                continue;
            cur.push_back(l);
            rec(w + lw, n + ln);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Word> NCCalculus::words(int weight, int degree, int nd) const
{
    std::vector<Word> out;
    for (auto& w : words_of_weight(weight, nd))
        if (this->degree(w) == degree)
            out.push_back(std::move(w));
    return out;
}

NCElem NCCalculus::derivation(const NCElem& e, const std::vector<NCElem>& on_letters, int deg) const
{
    NCElem out;
    bool odd = deg % 2 != 0;
    for (const auto& [w, c] : e) {
        int pre = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Rational s = (odd && pre % 2) ? -c : c;
            for (const auto& [mid, cm] : on_letters[w[i]]) {
                Word nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                add_term(out, nw, s * cm);
            }
            pre += letter_degree(w[i]);
        }
    }
    return out;
}

NCElem NCCalculus::partial(const NCElem& e) const { return derivation(e, partial_, 1); }
NCElem NCCalculus::d(const NCElem& e) const { return derivation(e, d_, 1); }

NCElem NCCalculus::map_letters(const NCElem& e, bool inverse) const
{
    const auto& table = inverse ? sigma_inv_ : sigma_;
    NCElem out;
    for (const auto& [w, c] : e) {
        NCElem cur = nc_word({}, c);
        for (int l : w)
            cur = nc_mul(cur, table[l]);
        nc_add(out, cur);
    }
    return out;
}

NCElem NCCalculus::sigma(const NCElem& e) const { return map_letters(e, false); }
NCElem NCCalculus::sigma_inv(const NCElem& e) const { return map_letters(e, true); }

static NCElem split_map(const NCCalculus& nc, const NCElem& e, const std::function<NCElem(const NCElem&)>& left,
                        const std::function<NCElem(const NCElem&)>& right)
{
    NCElem out;
    for (const auto& [w, c] : e) {
        std::size_t i = d_position(nc, w);
        NCElem l = left(nc_word(Word(w.begin(), w.begin() + i)));
        NCElem r = right(nc_word(Word(w.begin() + i + 1, w.end())));
        nc_add(out, nc_mul(nc_mul(l, nc_word({w[i]})), r), c);
    }
    return out;
}

static NCElem identity(const NCElem& e) { return e; }

NCElem NCCalculus::psi(const NCElem& e) const
{
    return split_map(*this, e, [this](const NCElem& x) { return sigma(x); }, identity);
}

NCElem NCCalculus::psi_inv(const NCElem& e) const
{
    return split_map(*this, e, [this](const NCElem& x) { return sigma_inv(x); }, identity);
}

NCElem NCCalculus::to_right(const NCElem& e) const
{
    return split_map(*this, e, [this](const NCElem& x) { return sigma_inv(x); },
                     [this](const NCElem& x) { return sigma(x); });
}

NCElem NCCalculus::partial_L(const NCElem& e) const { return psi(partial(psi_inv(e))); }
NCElem NCCalculus::partial_R(const NCElem& e) const { return derivation(e, b_, 1); }

NCElem NCCalculus::twisted_d(const NCElem& e) const
{
    NCElem out;
    for (const auto& [w, c] : e) {
        int pre = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            NCElem left = sigma(nc_word(Word(w.begin(), w.begin() + i)));
            Word rest{D(index(w[i]))};
            rest.insert(rest.end(), w.begin() + i + 1, w.end());
            nc_add(out, nc_mul(left, nc_word(rest)), Rational(sgn(pre)) * c);
            pre += letter_degree(w[i]);
        }
    }
    return out;
}

NCElem NCCalculus::omega() const
{
    NCElem out;
    for (const auto& s : f_.delta_eta) {
        if (!cone_ && (s.a == 0 || s.b == 0))
            continue;
        add_term(out, Word{D(s.a), D(s.b)}, s.coef / 2);
    }
    return out;
}

int NCCalculus::der_degree(const DerTerm& t) const
{
    return degree(t.r1) + degree(t.r2) - f_.coalgebra.weight[t.u];
}

std::map<long, TensorElem> NCCalculus::values(const DerElem& theta) const
{
    std::map<long, TensorElem> vals;
    for (const auto& [t, c] : theta) {
        int e = degree(t.r2) * (degree(t.r1) + f_.coalgebra.weight[t.u]);
        add_term(vals[t.u], std::make_pair(t.r2, t.r1), Rational(sgn(e)) * c);
    }
    return vals;
}

DerElem NCCalculus::from_values(const std::map<long, TensorElem>& vals) const
{
    DerElem out;
    for (const auto& [u, te] : vals)
        for (const auto& [xy, c] : te) {
            const Word& x = xy.first;
            const Word& y = xy.second;
            int e = degree(x) * (degree(y) + f_.coalgebra.weight[u]);
            add_term(out, DerTerm{y, u, x}, Rational(sgn(e)) * c);
        }
    return out;
}

TensorElem NCCalculus::evaluate(const std::map<long, TensorElem>& vals, int deg, const NCElem& oneform) const
{
    TensorElem out;
    for (const auto& [w, c] : oneform) {
        std::size_t i = d_position(*this, w);
        Word r1(w.begin(), w.begin() + i), r2(w.begin() + i + 1, w.end());
        auto it = vals.find(index(w[i]));
        if (it == vals.end())
            continue;
        Rational s = Rational(sgn(static_cast<long>(deg) * degree(r1))) * c;
        for (const auto& [xy, cv] : it->second) {
            Word x = r1, y = xy.second;
            x.insert(x.end(), xy.first.begin(), xy.first.end());
            y.insert(y.end(), r2.begin(), r2.end());
            add_term(out, std::make_pair(x, y), s * cv);
        }
    }
    return out;
}

TensorElem NCCalculus::partial(const TensorElem& e) const
{
    TensorElem out;
    for (const auto& [xy, c] : e) {
        for (const auto& [x, cx] : partial(nc_word(xy.first)))
            add_term(out, std::make_pair(x, xy.second), c * cx);
        Rational s = Rational(sgn(degree(xy.first))) * c;
        for (const auto& [y, cy] : partial(nc_word(xy.second)))
            add_term(out, std::make_pair(xy.first, y), s * cy);
    }
    return out;
}

static std::map<int, DerElem> by_degree(const NCCalculus& nc, const DerElem& theta)
{
    std::map<int, DerElem> parts;
    for (const auto& [t, c] : theta)
        parts[nc.der_degree(t)][t] = c;
    return parts;
}

DerElem NCCalculus::delta(const DerElem& theta) const
{
    DerElem out;
    for (const auto& [t, part] : by_degree(*this, theta)) {
        auto vals = values(part);
        std::map<long, TensorElem> dv;
        for (long k = cone_ ? 0 : 1; k < nb_; ++k) {
            TensorElem v;
            auto it = vals.find(k);
            if (it != vals.end())
                v = partial(it->second);
            TensorElem w = evaluate(vals, t, partial(nc_word({D(k)})));
            Rational s = -sgn(t);
            for (const auto& [xy, c] : w)
                add_term(v, xy, s * c);
            if (!v.empty())
                dv[k] = v;
        }
        for (const auto& [k, c] : from_values(dv))
            add_term(out, k, c);
    }
    return out;
}

NCElem NCCalculus::contract(const DerElem& theta, const NCElem& two_form) const
{
    NCElem out;
    const auto& wt = f_.coalgebra.weight;
    for (const auto& [t, part] : by_degree(*this, theta)) {
        auto vals = values(part);
        for (const auto& [w, c] : two_form) {
            if (w.size() != 2 || !is_D(w[0]) || !is_D(w[1]))
                throw IntegrityError("contract expects a 2-form without side words");
            long a = index(w[0]), b = index(w[1]);
            if (auto it = vals.find(a); it != vals.end())
                for (const auto& [xy, cv] : it->second) {
                    const Word& x = xy.first;
                    const Word& y = xy.second;
                    int e = degree(x) * (degree(y) + wt[b]);
                    NCElem term = nc_mul(nc_mul(nc_word(y), nc_word({D(b)})), sigma(nc_word(x)));
                    nc_add(out, term, Rational(sgn(e)) * c * cv);
                }
            if (auto it = vals.find(b); it != vals.end())
                for (const auto& [xy, cv] : it->second) {
                    const Word& x = xy.first;
                    const Word& y = xy.second;
                    long e = static_cast<long>(t) * wt[a] + (wt[a] + degree(x)) * degree(y);
                    NCElem term = nc_mul(nc_mul(nc_word(y), sigma(nc_word({D(a)}))), sigma(nc_word(x)));
                    nc_add(out, term, Rational(sgn(e)) * c * cv);
                }
        }
    }
    return out;
}

NCElem NCCalculus::phi(const DerElem& theta, const NCElem& two_form) const { return psi(contract(theta, two_form)); }
NCElem NCCalculus::phi(const DerElem& theta) const { return phi(theta, omega()); }

DerElem NCCalculus::generator_derivation(long u) const { return DerElem{{DerTerm{{}, u, {}}, Rational(1)}}; }

std::string NCCalculus::text(const DerElem& e) const
{
    if (e.empty())
        return "0";
    std::string s;
    for (const auto& [t, c] : e) {
        if (!s.empty())
            s += " + ";
        s += "(" + to_string(c) + ") " + word_text(t.r1) + " * D" + f_.coalgebra.labels[t.u] + " * " +
             word_text(t.r2);
    }
    return s;
}

TwistedCommutatorSpan::TwistedCommutatorSpan(const NCCalculus& nc, int weight, int degree, int nd)
{
    std::vector<Word> ws = nc.words(weight, degree, nd);
    for (const auto& w : ws)
        index_.emplace(w, static_cast<long>(index_.size()));
    for (const auto& w : ws)
        for (std::size_t i = 1; i < w.size(); ++i) {
            Word x(w.begin(), w.begin() + i), y(w.begin() + i, w.end());
            NCElem e = nc_word(w);
            int s = sgn(static_cast<long>(nc.degree(x)) * nc.degree(y));
            nc_add(e, nc_mul(nc_word(y), nc.sigma(nc_word(x))), -s);
            bool outside = false;
            SparseVector v = coords(e, outside);
            if (outside)
                throw IntegrityError("twisted commutator left its bidegree");
            span_.add(std::move(v));
            ++generators_;
        }
}

SparseVector TwistedCommutatorSpan::coords(const NCElem& e, bool& outside) const
{
    SparseVector v;
    for (const auto& [w, c] : e) {
        auto it = index_.find(w);
        if (it == index_.end()) {
            outside = true;
            continue;
        }
        v[it->second] = c;
    }
    return v;
}

bool TwistedCommutatorSpan::contains(const NCElem& e) const
{
    bool outside = false;
    SparseVector v = coords(e, outside);
    return !outside && span_.contains(v);
}

bool twisted_dr_zero_test(const NCCalculus& nc, const NCElem& form, int weight, int degree)
{
    if (form.empty())
        return true;
    int nd = nc.num_D(form.begin()->first);
    for (const auto& [w, c] : form)
        if (nc.num_D(w) != nd || nc.weight(w) != weight || nc.degree(w) != degree)
            return false;
    return TwistedCommutatorSpan(nc, weight, degree, nd).contains(form);
}

std::string ClosedInvariantReport::first_failure() const
{
    if (!partial_closed)
        return "∂-closure";
    if (!d_closed)
        return "d-closure";
    if (!sigma_invariant)
        return "σ-invariance";
    if (!tower_witness)
        return "closure tower";
    return "";
}

ClosedInvariantReport verify_closed_invariant(const NCCalculus& nc, const NCElem& omega)
{
    ClosedInvariantReport r;
    int n = nc.frobenius().n;
    r.partial_closed = twisted_dr_zero_test(nc, nc.partial(omega), n, n - 1);
    NCElem dw = nc.d(omega);
    r.d_closed = twisted_dr_zero_test(nc, dw, n, n + 1);
    NCElem diff = nc.sigma(omega);
    nc_add(diff, omega, -1);
    r.sigma_invariant = diff.empty();
    // ω is strictly d-closed, so ω_1 = ω_2 = ... = 0 closes the tower.
    r.tower_witness = dw.empty();
    return r;
}

NCElem perturbed_omega(const NCCalculus& nc, std::size_t drop)
{
    NCElem w = nc.omega();
    if (w.empty())
        return w;
    auto it = w.begin();
    std::advance(it, drop % w.size());
    w.erase(it);
    return w;
}

Matrix phi_matrix(const NCCalculus& nc)
{
    long nb = nc.size();
    Matrix m(nb, nb);
    for (long u = 0; u < nb; ++u)
        for (const auto& [w, c] : nc.phi(nc.generator_derivation(u))) {
            if (w.size() != 1)
                throw IntegrityError("Φ(Du) has side words");
            m.set(u, nc.index(w[0]), c);
        }
    return m;
}

ChainCheck phi_chain_check(const NCCalculus& nc)
{
    ChainCheck r;
    NCElem om = nc.omega();
    for (long u = 0; u < nc.size(); ++u) {
        DerElem du = nc.generator_derivation(u);
        NCElem lhs = nc.phi(nc.delta(du), om);
        NCElem rhs = nc.partial_L(nc.phi(du, om));
        if (lhs != rhs) {
            r.ok = false;
            r.failing_u = u;
            r.lhs = nc.text(lhs);
            r.rhs = nc.text(rhs);
            return r;
        }
    }
    return r;
}

BimoduleCheck phi_bimodule_check(const NCCalculus& nc, std::size_t samples, unsigned seed)
{
    BimoduleCheck r;
    std::mt19937 rng(seed);
    std::vector<int> gens = nc.generators();
    int n = nc.frobenius().n;
    auto random_word = [&]() {
        Word w;
        int len = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int i = 0; i < len; ++i)
            w.push_back(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]);
        return w;
    };
    NCElem om = nc.omega();
    for (std::size_t s = 0; s < samples; ++s) {
        long u = std::uniform_int_distribution<long>(0, nc.size() - 1)(rng);
        Word r1 = random_word(), r2 = random_word();
        if (s == 0)
            r1.clear(), r2.clear();
        NCElem lhs = nc.phi(DerElem{{DerTerm{r1, u, r2}, Rational(1)}}, om);
        NCElem rhs = nc_mul(nc_mul(nc.sigma(nc_word(r1)), nc.phi(nc.generator_derivation(u), om)),
                            nc.sigma(nc_word(r2)));
        if ((static_cast<long>(n) * nc.degree(r2)) % 2) {
            NCElem neg;
            nc_add(neg, rhs, -1);
            rhs = neg;
        }
        ++r.samples;
        if (lhs != rhs) {
            r.ok = false;
            r.failure = "u=" + nc.frobenius().coalgebra.labels[u] + " r1=" + nc.word_text(r1) +
                        " r2=" + nc.word_text(r2) + ": " + nc.text(lhs) + " vs " + nc.text(rhs);
            return r;
        }
    }
    return r;
}

SignGateResult nc_sign_gate(const NCCalculus& nc, int max_weight, int max_nd)
{
    SignGateResult r;
    auto fail = [&](const std::string& what, const Word& w) {
        r.ok = false;
        r.failure = what + " on " + nc.word_text(w);
    };
    Word d0{nc.D(0)};
    for (int nd = 0; nd <= max_nd; ++nd)
        for (int wt = 0; wt <= max_weight; ++wt)
            for (const auto& w : nc.words_of_weight(wt, nd)) {
                ++r.words_checked;
                NCElem e = nc_word(w);
                NCElem pw = nc.partial(e);
                if (!nc.partial(pw).empty())
                    return fail("∂² ≠ 0", w), r;
                NCElem dw = nc.d(e);
                if (!nc.d(dw).empty())
                    return fail("d² ≠ 0", w), r;
                NCElem anti = nc.partial(dw);
                nc_add(anti, nc.d(pw));
                NCElem expected;
                if (nc.cone()) {
                    Word x = w;
                    x.push_back(nc.D(0));
                    expected = nc_word(x);
                    Word y = d0;
                    y.insert(y.end(), w.begin(), w.end());
                    nc_add(expected, nc_word(y), -1);
                }
                if (anti != expected)
                    return fail("∂d + d∂ ≠ ad(d1)", w), r;
                if (nc.sigma(pw) != nc.partial(nc.sigma(e)))
                    return fail("σ∂ ≠ ∂σ", w), r;
                if (nd == 0) {
                    NCElem td = nc.twisted_d(e);
                    if (td != nc.psi(dw))
                        return fail("d_σ ≠ Ψd", w), r;
                    NCElem tanti = nc.partial_L(td);
                    nc_add(tanti, nc.twisted_d(pw));
                    NCElem texp;
                    if (nc.cone())
                        texp = nc.psi(expected);
                    if (tanti != texp)
                        return fail("∂d_σ + d_σ∂ ≠ Ψ ad(d1)", w), r;
                }
                if (nd == 1) {
                    if (!nc.partial_L(nc.partial_L(e)).empty())
                        return fail("∂_L² ≠ 0", w), r;
                    if (nc.to_right(nc.partial_L(e)) != nc.partial_R(nc.to_right(e)))
                        return fail("b ≠ S∂_L S⁻¹", w), r;
                }
            }
    return r;
}

namespace {

struct GradedRank {
    std::map<int, std::size_t> dims;
    std::map<int, std::size_t> ranks;
    std::map<int, std::size_t> betti() const
    {
        std::map<int, std::size_t> out;
        for (const auto& [i, n] : dims) {
            std::size_t r_out = ranks.count(i) ? ranks.at(i) : 0;
            std::size_t r_in = ranks.count(i + 1) ? ranks.at(i + 1) : 0;
            out[i] = n - r_out - r_in;
        }
        return out;
    }
};

template <class Key>
GradedRank graded_rank(const std::map<int, std::vector<Key>>& basis, const std::function<std::map<Key, Rational>(const Key&)>& diff,
                       int step)
{
    GradedRank g;
    for (const auto& [deg, keys] : basis) {
        g.dims[deg] = keys.size();
        auto tgt = basis.find(deg + step);
        std::map<Key, long> idx;
        if (tgt != basis.end())
            for (const auto& k : tgt->second)
                idx.emplace(k, static_cast<long>(idx.size()));
        EchelonSpan span;
        for (const auto& k : keys) {
            SparseVector v;
            for (const auto& [t, c] : diff(k)) {
                auto it = idx.find(t);
                if (it == idx.end())
                    throw IntegrityError("differential leaves the enumerated basis");
                v[it->second] = c;
            }
            span.add(std::move(v));
        }
        g.ranks[deg] = span.rank();
    }
    return g;
}

std::vector<Word> r_words(const NCCalculus& nc, int weight) { return nc.words_of_weight(weight, 0); }

}  // namespace

std::map<int, std::size_t> oneform_homology(const NCCalculus& nc, int weight)
{
    std::map<int, std::vector<Word>> basis;
    for (auto& w : nc.words_of_weight(weight, 1))
        basis[nc.degree(w)].push_back(w);
    GradedRank g = graded_rank<Word>(basis, [&](const Word& w) { return nc.partial_L(nc_word(w)); }, -1);
    return g.betti();
}

std::map<int, std::size_t> der_homology(const NCCalculus& nc, int weight)
{
    const auto& wt = nc.frobenius().coalgebra.weight;
    std::map<int, std::vector<DerTerm>> basis;
    for (long u = nc.cone() ? 0 : 1; u < nc.size(); ++u) {
        int side = weight + wt[u];
        for (int w1 = 0; w1 <= side; ++w1)
            for (const auto& r1 : r_words(nc, w1))
                for (const auto& r2 : r_words(nc, side - w1)) {
                    DerTerm t{r1, u, r2};
                    basis[nc.der_degree(t)].push_back(t);
                }
    }
    GradedRank g = graded_rank<DerTerm>(basis, [&](const DerTerm& t) { return nc.delta(DerElem{{t, Rational(1)}}); }, -1);
    return g.betti();
}

std::map<int, std::size_t> dr1_sigma_homology(const NCCalculus& nc, int weight)
{
    // r1 X ≡ (-1)^{|r1||X|} X σ(r1) for r1 in R: every class has a unique
    // representative D_c r.
    auto reduce = [&](const NCElem& e) {
        NCElem out;
        for (const auto& [w, c] : e) {
            std::size_t i = d_position(nc, w);
            Word r1(w.begin(), w.begin() + i), rest(w.begin() + i, w.end());
            int s = sgn(static_cast<long>(nc.degree(r1)) * nc.degree(rest));
            nc_add(out, nc_mul(nc_word(rest), nc.sigma(nc_word(r1))), Rational(s) * c);
        }
        return out;
    };
    std::map<int, std::vector<Word>> basis;
    for (long k = nc.cone() ? 0 : 1; k < nc.size(); ++k) {
        int wk = nc.frobenius().coalgebra.weight[k];
        if (wk > weight)
            continue;
        for (const auto& r : r_words(nc, weight - wk)) {
            Word w{nc.D(k)};
            w.insert(w.end(), r.begin(), r.end());
            basis[nc.degree(w)].push_back(w);
        }
    }
    GradedRank g = graded_rank<Word>(basis, [&](const Word& w) { return reduce(nc.partial(nc_word(w))); }, -1);
    return g.betti();
}

}  // namespace twcy
