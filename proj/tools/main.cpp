#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hodgestar/rational.hpp"
#include "hodgestar/report.hpp"

// Exit codes: 0 all verdicts PASS, 1 a check failed, 2 usage/parse errors.
int main(int argc, char** argv) {
    CLI::App app{"exact exterior calculus, Hodge star, Maxwell formulations, and "
                 "discrete Hodge theory"};
    app.require_subcommand(1);

    bool json = false;
    unsigned long seed = 12345;
    int orientation = 1;
    app.add_flag("--json", json, "emit the structured report instead of text");
    app.add_option("--seed", seed, "seed for the randomized identity suites")
        ->capture_default_str();
    app.add_option("--orientation", orientation, "frame orientation")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();

    auto* algebra =
        app.add_subcommand("algebra", "Grassmann complement tables and identities");
    int dim = 0;
    std::string check = "all";
    algebra->add_option("--dim", dim, "frame dimension")
        ->required()
        ->check(CLI::Range(1, 8));
    algebra->add_option("--check", check, "which identity suite to run")
        ->check(CLI::IsMember({"all", "double-complement", "product-complement"}))
        ->capture_default_str();

    auto* star = app.add_subcommand("star", "Hodge star table for a diagonal signature");
    std::string sig;
    star->add_option("--sig", sig, "signature string, e.g. +--- or +++")->required();

    auto* maxwell =
        app.add_subcommand("maxwell", "Maxwell formulations on a field configuration");
    std::string config, formulation = "all", units;
    maxwell->add_option("--config", config, "field configuration file")->required();
    maxwell->add_option("--formulation", formulation)
        ->check(CLI::IsMember({"all", "classical", "minkowski", "premetric", "metric"}))
        ->capture_default_str();
    maxwell->add_option("--units", units, "override the config units")
        ->check(CLI::IsMember({"hl", "gaussian"}));

    auto* betti =
        app.add_subcommand("betti", "Betti numbers: harmonic route vs rank oracle");
    std::string mesh;
    betti->add_option("mesh", mesh, "simplicial complex file")->required();

    auto* decompose =
        app.add_subcommand("decompose", "orthogonal decomposition of a cochain");
    std::string dmesh, dcoch;
    decompose->add_option("mesh", dmesh, "simplicial complex file")->required();
    decompose->add_option("cochain", dcoch, "cochain file")->required();

    // The global flags remain usable after the subcommand name.
    for (auto* sub : {algebra, star, maxwell, betti, decompose}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        hodgestar::Report report;
        if (*algebra)
            report = hodgestar::cmd_algebra(dim, check, seed);
        else if (*star)
            report = hodgestar::cmd_star(sig, orientation);
        else if (*maxwell)
            report = hodgestar::cmd_maxwell(config, formulation, units);
        else if (*betti)
            report = hodgestar::cmd_betti(mesh);
        else
            report = hodgestar::cmd_decompose(dmesh, dcoch);
        std::cout << (json ? report.json : report.text);
        return report.pass ? 0 : 1;
    } catch (const hodgestar::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
