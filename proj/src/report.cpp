#include "twcy/report.hpp"

#include <algorithm>
#include <sstream>

#include "twcy/drep.hpp"
#include "twcy/errors.hpp"
#include "twcy/hochschild.hpp"
#include "twcy/nc.hpp"

namespace twcy {

using nlohmann::ordered_json;

namespace {

ordered_json matrix_json(const Matrix& m)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string linear_text(const std::vector<std::pair<std::string, Rational>>& terms)
{
    std::string s;
    for (const auto& [name, c] : terms) {
        if (c == 0)
            continue;
        std::string cs = to_string(c);
        bool neg = cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += (cs == "1" ? "" : cs + "*") + name;
    }
    return s.empty() ? "0" : s;
}

std::vector<std::string> images_text(const Matrix& m, const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<std::pair<std::string, Rational>> terms;
        for (std::size_t i = 0; i < m.rows(); ++i)
            terms.push_back({names[i], m.at(i, j)});
        out.push_back("σ(" + names[j] + ") = " + linear_text(terms));
    }
    return out;
}

ordered_json table_json(const HHTable& t)
{
    ordered_json rows = ordered_json::array();
    for (int w : t.weights()) {
        ordered_json dims = ordered_json::array();
        int top = 0;
        for (const auto& [k, v] : t.chain_dims)
            if (k.second == w)
                top = std::max(top, k.first);
        for (int i = 0; i <= top; ++i)
            dims.push_back(t.at(i, w));
        rows.push_back(ordered_json{{"weight", w}, {"dims", dims}});
    }
    return rows;
}

FrobeniusData checked_frobenius(const QuadraticPresentation& p)
{
    try {
        return frobenius_data(p);
    } catch (const InputError& e) {
        throw InputError(std::string("frobenius_check: ") + e.what());
    }
}

class Builder {
public:
    Builder(const std::string& command, const PresentationFile& pf, const RunOptions& opt)
        : pf_(pf), opt_(opt), f_(checked_frobenius(pf.presentation))
    {
        out_.report["schema_version"] = kSchemaVersion;
        out_.report["command"] = command;
        const auto& p = pf.presentation;
        ordered_json rels = ordered_json::array();
        for (const auto& r : p.relations)
            rels.push_back(relation_text(r, p.generators));
        out_.report["input"] = ordered_json{{"family", pf.family},
                                            {"generators", p.generators},
                                            {"relations", rels},
                                            {"cutoff", opt.cutoff},
                                            {"dim", opt.dim}};
    }

    void verdict(const std::string& check, bool pass)
    {
        verdicts_.push_back(ordered_json{{"check", check}, {"pass", pass}});
        if (!pass) {
            out_.ok = false;
            out_.failed.push_back(check);
        }
    }

    void dual()
    {
        const auto& p = pf_.presentation;
        GradedAlgebra a(p, opt_.cutoff);
        auto inv = check_frobenius_invariants(f_);
        auto kc = koszulity_certificate(p, f_.coalgebra, opt_.cutoff);
        ordered_json labels = ordered_json::array();
        for (const auto& l : f_.coalgebra.labels)
            labels.push_back(l);
        ordered_json frob{{"top_weight", f_.n},
                          {"associative", inv.associative},
                          {"invariant_pairing", inv.invariant_pairing},
                          {"nakayama_multiplicative", inv.sigma_star_multiplicative},
                          {"nakayama_isometry", inv.sigma_star_isometry},
                          {"defining_relation", inv.defining_relation},
                          {"symmetric_dims", inv.dims_symmetric}};
        ordered_json kz{{"certified", kc.certified}, {"cutoff", kc.cutoff}};
        if (!kc.certified)
            kz["failing_bidegree"] = ordered_json::array({kc.failing_weight, kc.failing_degree});
        out_.report["dual"] = ordered_json{{"algebra_dims", a.dims()},
                                           {"dual_dims", f_.dual.dims()},
                                           {"coalgebra_basis", labels},
                                           {"pairing", matrix_json(f_.pairing_full())},
                                           {"frobenius", frob},
                                           {"koszulity", kz}};
        verdict("frobenius", inv.all());
        verdict("koszulity", kc.certified);
    }

    void nakayama()
    {
        const auto& names = pf_.presentation.generators;
        ordered_json sec{{"matrix", matrix_json(f_.sigma_gen())}, {"images", images_text(f_.sigma_gen(), names)}};
        std::optional<Matrix> closed;
        if (pf_.q)
            closed = nakayama_closed_form_quantum(*pf_.q);
        if (pf_.m)
            closed = nakayama_closed_form_m(*pf_.m);
        if (closed) {
            sec["closed_form"] = matrix_json(*closed);
            sec["matches_closed_form"] = *closed == f_.sigma_gen();
        }
        out_.report["nakayama"] = sec;
        if (closed)
            verdict("nakayama closed form", *closed == f_.sigma_gen());
    }

    NCElem form(const NCCalculus& nc) const { return opt_.perturb_omega ? perturbed_omega(nc) : nc.omega(); }

    void omega()
    {
        NCCalculus nc(f_, true);
        NCElem w = form(nc);
        auto inv = check_frobenius_invariants(f_);
        auto r = verify_closed_invariant(nc, w);
        Matrix pm = phi_matrix(nc);
        bool invertible = rank(pm) == pm.rows();
        auto cc = phi_chain_check(nc);
        auto bc = phi_bimodule_check(nc, opt_.bimodule_samples);
        ordered_json sec{{"omega", nc.text(w)},
                         {"perturbed", opt_.perturb_omega},
                         {"delta_eta_sigma_invariant", inv.delta_eta_sigma_invariant},
                         {"partial_closed", r.partial_closed},
                         {"d_closed", r.d_closed},
                         {"sigma_invariant", r.sigma_invariant},
                         {"phi_matrix", matrix_json(pm)},
                         {"phi_matrix_invertible", invertible},
                         {"phi_chain_map", cc.ok},
                         {"phi_bimodule_samples", bc.samples},
                         {"phi_bimodule", bc.ok}};
        if (!cc.ok)
            sec["phi_chain_counterexample"] = ordered_json{{"generator", cc.failing_u}, {"lhs", cc.lhs}, {"rhs", cc.rhs}};
        if (!bc.ok)
            sec["phi_bimodule_counterexample"] = bc.failure;
        out_.report["omega"] = sec;
        verdict("σ-invariance of Δ(η)", inv.delta_eta_sigma_invariant);
        verdict("∂-closure", r.partial_closed);
        verdict("d-closure", r.d_closed);
        verdict("σ-invariance of ω", r.sigma_invariant);
        verdict("phi_matrix invertible", invertible);
        verdict("phi chain map", cc.ok);
        verdict("phi bimodule", bc.ok);
    }

    void hochschild()
    {
        const auto& p = pf_.presentation;
        HHTable coh = hh_cohomology(p, f_, opt_.cutoff);
        HHTable hom = hh_twisted_homology(p, f_, f_.sigma_gen(), opt_.cutoff);
        KoszulHHComplexes k(p, f_, f_.sigma_gen(), opt_.cutoff + f_.n);
        bool sq = true;
        for (int w = -f_.n; w <= opt_.cutoff; ++w)
            sq = sq && k.square_zero(w);
        bool euler = true;
        for (int w : coh.weights())
            euler = euler && coh.euler_homology(w) == coh.euler_chains(w);
        for (int w : hom.weights())
            euler = euler && hom.euler_homology(w) == hom.euler_chains(w);
        out_.report["hochschild"] =
            ordered_json{{"cohomology", table_json(coh)}, {"twisted_homology", table_json(hom)}};
        verdict("Hochschild square zero", sq);
        verdict("Hochschild Euler characteristic", euler);
    }

    void duality()
    {
        int shift = opt_.shift.value_or(f_.n);
        auto r = duality_report(pf_.presentation, f_, opt_.cutoff, shift);
        ordered_json cells = ordered_json::array();
        for (const auto& c : r.cells)
            cells.push_back(ordered_json{{"i", c.i},
                                         {"weight", c.w},
                                         {"cohomology", c.cohomology},
                                         {"homology", c.homology},
                                         {"match", c.match}});
        out_.report["duality"] = ordered_json{{"n", r.n}, {"shift", shift}, {"cells", cells}};
        verdict("duality", r.ok);
    }

    void drep()
    {
        NCCalculus nc(f_, true);
        RepDGAlgebra rv(nc, opt_.dim);
        auto om = verify_omega_V(rv, form(nc));
        auto ph = verify_phi_V(rv);
        HHTable h = rep_homology(rv, opt_.cutoff);
        ordered_json ideal = ordered_json::array();
        bool h0 = true;
        for (int w = 0; w <= opt_.cutoff; ++w) {
            std::size_t v = h0_by_ideal(rv, w);
            ideal.push_back(v);
            h0 = h0 && v == h.at(0, w);
        }
        ordered_json sec{{"dim", opt_.dim},
                         {"variables", rv.ring().num_vars()},
                         {"omega_V", rv.ring().text(om.omega)},
                         {"omega_V_terms", om.terms},
                         {"omega_V_matches_direct", om.matches_direct},
                         {"sigma_invariant", om.sigma_invariant},
                         {"partial_closed", om.partial_closed},
                         {"untwisted_partial_residual_terms", om.untwisted_residual_terms},
                         {"d_closed", om.d_closed},
                         {"gl_invariant", om.gl_invariant},
                         {"phi_V_shift", ph.shift},
                         {"phi_V_matrix_is_pairing_tensor_identity", ph.matrix_ok},
                         {"phi_V_invertible", ph.invertible},
                         {"phi_V_chain_map", ph.chain_ok},
                         {"phi_V_generators", ph.generators},
                         {"rep_homology", table_json(h)},
                         {"h0_by_ideal", ideal}};
        if (!ph.failure.empty())
            sec["phi_V_failure"] = ph.failure;
        out_.report["drep"] = sec;
        verdict("ω_V σ-invariance", om.sigma_invariant);
        verdict("ω_V ∂-closure", om.partial_closed);
        verdict("ω_V d-closure", om.d_closed);
        verdict("ω_V gl-invariance", om.gl_invariant);
        verdict("phi_V matrix", ph.matrix_ok);
        verdict("phi_V invertible", ph.invertible);
        verdict("phi_V chain map", ph.chain_ok);
        verdict("H0 ideal comparison", h0);
    }

    RunResult finish()
    {
        out_.report["verdicts"] = verdicts_;
        out_.report["status"] = out_.ok ? "pass" : "fail";
        return out_;
    }

private:
    const PresentationFile& pf_;
    const RunOptions& opt_;
    FrobeniusData f_;
    RunResult out_;
    ordered_json verdicts_ = ordered_json::array();
};

std::string inline_text(const ordered_json& x)
{
    if (x.is_string())
        return x.get<std::string>();
    if (!x.is_array())
        return x.dump();
    std::string line;
    for (const auto& y : x)
        line += (line.empty() ? "" : ", ") + inline_text(y);
    return "[" + line + "]";
}

bool is_flat_list(const ordered_json& x)
{
    return x.is_array() && std::all_of(x.begin(), x.end(), [](const ordered_json& y) { return y.is_primitive(); });
}

void render(std::ostringstream& os, const ordered_json& v, const std::string& indent)
{
    bool in_list = v.is_array();
    for (auto it = v.begin(); it != v.end(); ++it) {
        const ordered_json& e = it.value();
        std::string head = indent + (in_list ? "- " : it.key() + ": ");
        bool flat_object = e.is_object() && std::all_of(e.begin(), e.end(), [](const ordered_json& x) {
                               return x.is_primitive() || is_flat_list(x);
                           });
        if (e.is_primitive() || is_flat_list(e)) {
            os << head << inline_text(e) << "\n";
        } else if (in_list && flat_object) {
            std::string line;
            for (auto f = e.begin(); f != e.end(); ++f)
                line += (line.empty() ? "" : ", ") + f.key() + ": " + inline_text(f.value());
            os << head << line << "\n";
        } else {
            os << (in_list ? indent + "-" : indent + it.key() + ":") << "\n";
            render(os, e, indent + "  ");
        }
    }
}

}  // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> c{"dual",    "nakayama", "omega",     "hochschild",
                                            "duality", "drep",     "verify-all"};
    return c;
}

RunResult run_command(const std::string& command, const PresentationFile& pf, const RunOptions& opt)
{
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
        throw InputError("unknown command '" + command + "'");
    if (opt.cutoff < 0)
        throw InputError("cutoff must be nonnegative");
    if (opt.dim < 1)
        throw InputError("dim must be at least 1");
    Builder b(command, pf, opt);
    bool all = command == "verify-all";
    if (command == "dual" || all)
        b.dual();
    if (command == "nakayama" || all)
        b.nakayama();
    if (command == "omega" || all)
        b.omega();
    if (command == "hochschild" || all)
        b.hochschild();
    if (command == "duality" || all)
        b.duality();
    if (command == "drep" || all)
        b.drep();
    return b.finish();
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

std::string render_text(const ordered_json& report)
{
    std::ostringstream os;
    render(os, report, "");
    return os.str();
}

}  // namespace twcy
