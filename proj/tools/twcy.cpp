#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twcy/errors.hpp"
#include "twcy/report.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Twisted Calabi-Yau certificates for Koszul AS-regular algebras"};
    std::string command, path, format = "text", out;
    std::optional<int> cutoff, dim, shift;
    bool perturb = false;
    app.add_option("command", command, "dual | nakayama | omega | hochschild | duality | drep | verify-all")
        ->required()
        ->check(CLI::IsMember(twcy::commands()));
    app.add_option("file", path, "presentation file")->required();
    app.add_option("--cutoff", cutoff, "weight cutoff (default 6)");
    app.add_option("--dim", dim, "matrix size d for drep (default 1)");
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out, "write the report to PATH");
    app.add_option("--shift", shift, "weight shift in the duality table (default n)");
    app.add_flag("--perturb-omega", perturb, "debug: drop one summand of omega");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    twcy::RunResult result;
    try {
        twcy::PresentationFile pf = twcy::parse_presentation_file(path);
        twcy::RunOptions opt;
        opt.cutoff = cutoff.value_or(pf.cutoff.value_or(6));
        opt.dim = dim.value_or(pf.dim.value_or(1));
        if (opt.dim > 3)
            std::cerr << "warning: d = " << opt.dim << " is past the soft limit 3; R_V has "
                      << opt.dim * opt.dim << " variables per letter and may be slow\n";
        opt.shift = shift;
        opt.perturb_omega = perturb;
        result = twcy::run_command(command, pf, opt);
    } catch (const twcy::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const twcy::VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const twcy::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 1;
    }

    std::string text = format == "json" ? twcy::render_json(result.report) : twcy::render_text(result.report);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) {
            std::cerr << "input error: cannot write " << out << "\n";
            return 2;
        }
        os << text;
    }
    if (!result.ok) {
        std::string names;
        for (const auto& f : result.failed)
            names += (names.empty() ? "" : ", ") + f;
        std::cerr << "verification failed: " << names << "\n";
        return 1;
    }
    return 0;
}
