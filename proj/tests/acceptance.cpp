// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "twcy/drep.hpp"
#include "twcy/errors.hpp"
#include "twcy/hochschild.hpp"
#include "twcy/parser.hpp"

using namespace twcy;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note << "failed: " << what;
        } else if (!cond) {
            note << "; " << what;
        }
    }
};

struct Named {
    std::string name;
    QuadraticPresentation p;
    Matrix closed_form;
};

std::vector<Named> five_inputs()
{
    return {{"qplane", fixtures::qplane(), nakayama_closed_form_quantum(fixtures::qplane_q())},
            {"qaff3", fixtures::qaff3(), nakayama_closed_form_quantum(fixtures::qaff3_q())},
            {"M=[[0,-2],[1,0]]", fixtures::qplane_via_m(), nakayama_closed_form_m(fixtures::qplane_m())},
            {"M=[[1,1],[0,1]]", fixtures::jordan(), nakayama_closed_form_m(fixtures::jordan_m())},
            {"M=[[2,1],[1,1]]", fixtures::nondiag(), nakayama_closed_form_m(fixtures::nondiag_m())}};
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double s = seconds_since(t0);
    if (s > limit)
        out.require(false, "time " + std::to_string(s) + " s over " + std::to_string(limit) + " s");
    if (!out.ok)
        ++failures;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), s,
                out.note.str().empty() ? "" : " ", out.note.str().c_str());
    std::fflush(stdout);
}

}  // namespace

int main()
{
    criterion(1, "Nakayama automorphism equals the closed form on five inputs", 5, [](Outcome& o) {
        for (const auto& in : five_inputs())
            o.require(frobenius_data(in.p).sigma_gen() == in.closed_form, in.name);
    });

    // the per-input limit is 60 s, checked inside
    criterion(2, "ω: σ-invariant Δ(η), ∂- and d-closed, Φ invertible, chain and bimodule map", 300, [](Outcome& o) {
        for (const auto& in : five_inputs()) {
            auto t0 = std::chrono::steady_clock::now();
            auto f = frobenius_data(in.p);
            NCCalculus nc(f);
            o.require(check_frobenius_invariants(f).delta_eta_sigma_invariant, in.name + " Δ(η) σ-invariance");
            auto c = verify_closed_invariant(nc, nc.omega());
            o.require(c.partial_closed, in.name + " ∂ω");
            o.require(c.d_closed, in.name + " dω");
            Matrix pm = phi_matrix(nc);
            o.require(rank(pm) == pm.rows(), in.name + " phi_matrix rank");
            o.require(phi_chain_check(nc).ok, in.name + " chain map");
            auto b = phi_bimodule_check(nc, 24);
            o.require(b.ok && b.samples >= 20, in.name + " bimodule");
            o.require(seconds_since(t0) < 60, in.name + " over 60 s");
        }
    });

    criterion(3, "sign gate to weight 6 on cobar, form and R_V complexes", 1200, [](Outcome& o) {
        for (const auto& fx : fixtures::all()) {
            auto f = frobenius_data(fx.p);
            NCCalculus nc(f);
            auto g = nc_sign_gate(nc, 6, 2);
            o.require(g.ok, fx.name + " nc: " + g.failure);
            RepDGAlgebra r1(nc, 1);
            auto g1 = rep_sign_gate(r1, 6, 2);
            o.require(g1.ok, fx.name + " R_V d=1: " + g1.failure);
            RepDGAlgebra r2(nc, 2);
            auto g2 = rep_sign_gate(r2, 6, 0);
            o.require(g2.ok, fx.name + " R_V d=2: " + g2.failure);
            if (f.n == 2) {
                auto g3 = rep_sign_gate(r2, 4, 2);
                o.require(g3.ok, fx.name + " R_V d=2 forms: " + g3.failure);
            }
        }
        auto f = frobenius_data(fixtures::qplane());
        NCCalculus nc(f);
        RepDGAlgebra r2(nc, 2);
        auto g = rep_sign_gate(r2, 6, 1);
        o.require(g.ok, "qplane R_V d=2 one-forms: " + g.failure);
    });

    criterion(4, "Koszul and bar (co)homology agree to weight 4", 120, [](Outcome& o) {
        for (const auto& [name, p] : {std::pair{"comm", fixtures::comm()}, std::pair{"qplane", fixtures::qplane()}}) {
            auto f = frobenius_data(p);
            auto r = bar_oracle_compare(p, f, 4);
            o.require(r.ok, std::string(name) + ": " + r.failure);
        }
    });

    criterion(5, "Van den Bergh duality HH^i_w = HH_{n-i,w+n}", 300, [](Outcome& o) {
        auto fq = frobenius_data(fixtures::qplane());
        o.require(duality_report(fixtures::qplane(), fq, 6, fq.n).ok, "qplane");
        auto f3 = frobenius_data(fixtures::qaff3());
        o.require(duality_report(fixtures::qaff3(), f3, 5, f3.n).ok, "qaff3");
        auto p = fixtures::comm();
        auto fc = frobenius_data(p);
        auto coh = hh_cohomology(p, fc, 6);
        auto hom = hh_twisted_homology(p, fc, fc.sigma_gen(), 6);
        for (int w = 0; w + 2 <= 6; ++w) {
            o.require(coh.at(0, w) == static_cast<std::size_t>(w + 1), "comm HH^0_" + std::to_string(w));
            o.require(hom.at(2, w + 2) == static_cast<std::size_t>(w + 1), "comm HH_2," + std::to_string(w + 2));
        }
    });

    criterion(6, "ω_V and Φ_V for the quantum plane at d = 1, 2", 300, [](Outcome& o) {
        auto f = frobenius_data(fixtures::qplane());
        NCCalculus nc(f);
        for (int d : {1, 2}) {
            std::string tag = "d=" + std::to_string(d) + " ";
            RepDGAlgebra rv(nc, d);
            auto w = verify_omega_V(rv, nc.omega());
            o.require(w.sigma_invariant, tag + "σ-invariance");
            o.require(w.partial_closed, tag + "∂-closure");
            o.require(w.d_closed, tag + "d-closure");
            o.require(w.gl_invariant, tag + "gl-invariance");
            auto ph = verify_phi_V(rv);
            o.require(ph.matrix_ok, tag + "phi_V = pairing ⊗ I");
            o.require(phi_V_matrix(rv) == kronecker(f.pairing_full(), Matrix::identity(d * d)), tag + "kronecker");
            o.require(ph.invertible, tag + "invertible");
            o.require(ph.chain_ok, tag + "chain identity: " + ph.failure);
        }
    });

    criterion(7, "representation homology at d = 1", 30, [](Outcome& o) {
        auto f = frobenius_data(fixtures::qplane());
        NCCalculus nc(f);
        RepDGAlgebra rv(nc, 1);
        auto t = rep_homology(rv, 6);
        const std::size_t h0[] = {1, 2, 2, 2, 2, 2, 2};
        for (int w = 0; w <= 6; ++w) {
            o.require(t.at(0, w) == h0[w], "qplane H0 weight " + std::to_string(w));
            o.require(t.at(1, w) == 0, "qplane H1 weight " + std::to_string(w));
        }
        auto fc = frobenius_data(fixtures::comm());
        NCCalculus ncc(fc);
        RepDGAlgebra rc(ncc, 1);
        auto tc = rep_homology(rc, 6);
        // k[a,b] ⊗ Λ(t), t odd of weight 2
        for (int w = 0; w <= 6; ++w) {
            std::size_t even = w + 1, odd = w >= 2 ? w - 1 : 0;
            o.require(tc.at(0, w) == even, "q=1 H0 weight " + std::to_string(w));
            o.require(tc.at(1, w) == odd, "q=1 H1 weight " + std::to_string(w));
            for (int i = 2; i <= 3; ++i)
                o.require(tc.at(i, w) == 0, "q=1 higher homology");
        }
    });

    criterion(8, "negative controls", 120, [](Outcome& o) {
        auto f = frobenius_data(fixtures::qplane());
        NCCalculus nc(f);
        auto bad = verify_closed_invariant(nc, perturbed_omega(nc));
        o.require(!bad.partial_closed && bad.first_failure() == "∂-closure", "perturbed ω passes ∂-closure");

        bool rejected = false;
        try {
            auto pf = parse_presentation_file(std::string(TWCY_PRESENTATIONS) + "/not-frobenius.json");
            frobenius_data(pf.presentation);
        } catch (const InputError& e) {
            rejected = std::string(e.what()).find("input is not Frobenius / not AS-regular") != std::string::npos;
        }
        o.require(rejected, "non-Frobenius input accepted");

        auto p = fixtures::qplane();
        auto tw = hh_twisted_homology(p, f, f.sigma_gen(), 6);
        auto id = hh_twisted_homology(p, f, Matrix::identity(2), 6);
        o.require(tw.dims != id.dims, "σ = id leaves the table unchanged");
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
