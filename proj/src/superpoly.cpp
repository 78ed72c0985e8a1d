#include "twcy/superpoly.hpp"

namespace twcy {

int SuperRing::add_var(int degree, int weight, std::string name)
{
    vars_.push_back({degree, weight, std::move(name)});
    return static_cast<int>(vars_.size()) - 1;
}

SPoly SuperRing::variable(int v, const Rational& c) const
{
    if (c == 0)
        return {};
    return SPoly{{Monomial{{v, 1}}, c}};
}

bool SuperRing::mul_monomial(const Monomial& a, const Monomial& b, Monomial& out, int& sign) const
{
    out.clear();
    sign = 1;
    // number of odd factors of a that are still to the right of the merge point
    int odd_a = 0;
    for (const auto& [v, e] : a)
        if (odd(v))
            ++odd_a;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            if (odd(a[i].first))
                --odd_a;
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            if (odd(b[j].first) && (odd_a & 1))
                sign = -sign;
            out.push_back(b[j++]);
        } else {
            if (odd(a[i].first))
                return false;
            out.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return true;
}

SPoly SuperRing::mul(const SPoly& a, const SPoly& b) const
{
    SPoly out;
    Monomial m;
    int s;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (!mul_monomial(ma, mb, m, s))
                continue;
            Rational& e = out[m];
            e += s * ca * cb;
            if (e == 0)
                out.erase(m);
        }
    return out;
}

void SuperRing::add(SPoly& a, const SPoly& b, const Rational& s) const
{
    if (s == 0)
        return;
    for (const auto& [m, c] : b) {
        Rational& e = a[m];
        e += s * c;
        if (e == 0)
            a.erase(m);
    }
}

SPoly SuperRing::scale(const SPoly& a, const Rational& s) const
{
    SPoly out;
    add(out, a, s);
    return out;
}

int SuperRing::degree(const Monomial& m) const
{
    int d = 0;
    for (const auto& [v, e] : m)
        d += e * vars_[v].degree;
    return d;
}

int SuperRing::weight(const Monomial& m) const
{
    int w = 0;
    for (const auto& [v, e] : m)
        w += e * vars_[v].weight;
    return w;
}

int SuperRing::degree(const SPoly& p) const
{
    return p.empty() ? 0 : degree(p.begin()->first);
}

SPoly SuperRing::derivation(const SPoly& p, const std::map<int, SPoly>& on_vars, int parity) const
{
    SPoly out;
    for (const auto& [m, c] : p) {
        int prefix_parity = 0;
        for (std::size_t t = 0; t < m.size(); ++t) {
            auto [v, e] = m[t];
            auto it = on_vars.find(v);
            if (it != on_vars.end() && !it->second.empty()) {
                Monomial pre(m.begin(), m.begin() + t);
                Monomial post(m.begin() + t + 1, m.end());
                if (e > 1)
                    pre.push_back({v, e - 1});
                SPoly term = mul(mul(SPoly{{pre, Rational(1)}}, it->second), SPoly{{post, Rational(1)}});
                int s = (parity & prefix_parity & 1) ? -1 : 1;
                add(out, term, c * s * e);
            }
            prefix_parity += e * vars_[v].degree;
        }
    }
    return out;
}

SPoly SuperRing::algebra_map(const SPoly& p, const std::map<int, SPoly>& on_vars) const
{
    SPoly out;
    for (const auto& [m, c] : p) {
        SPoly term = one();
        for (const auto& [v, e] : m) {
            auto it = on_vars.find(v);
            SPoly img = it == on_vars.end() ? variable(v) : it->second;
            for (int k = 0; k < e; ++k)
                term = mul(term, img);
        }
        add(out, term, c);
    }
    return out;
}

std::string SuperRing::text(const Monomial& m) const
{
    if (m.empty())
        return "1";
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty())
            s += "*";
        s += vars_[v].name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string SuperRing::text(const SPoly& p) const
{
    if (p.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : p) {
        std::string cs = to_string(c);
        if (s.empty())
            s = cs[0] == '-' ? "-" : "";
        else
            s += cs[0] == '-' ? " - " : " + ";
        if (cs[0] == '-')
            cs = cs.substr(1);
        if (m.empty())
            s += cs;
        else
            s += (cs == "1" ? "" : cs + "*") + text(m);
    }
    return s;
}

}  // namespace twcy
