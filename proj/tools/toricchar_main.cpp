#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "toricchar/jobspec.hpp"

using toricchar::JobSpec;

int main(int argc, char** argv) {
    CLI::App app{"characteristic classes of subschemes of smooth projective toric varieties"};
    app.require_subcommand(1);

    JobSpec spec;
    std::string format = "text";

    struct Sub {
        const char* name;
        const char* help;
        JobSpec::Command cmd;
        bool ideal;
    };
    const Sub subs[] = {
        {"fan-info", "validate a fan and print its combinatorics", JobSpec::Command::FanInfo, false},
        {"chow", "print the Chow ring data of the toric variety", JobSpec::Command::Chow, false},
        {"segre", "Segre class of the subscheme", JobSpec::Command::Segre, true},
        {"csm", "Chern-Schwartz-MacPherson class via inclusion/exclusion", JobSpec::Command::Csm, true},
        {"csm-ci", "c_SM class of a complete intersection (no inclusion/exclusion)",
         JobSpec::Command::CsmCI, true},
        {"euler", "topological Euler characteristic", JobSpec::Command::Euler, true},
        {"all", "Segre, c_SM, Chern-Fulton and Euler characteristic", JobSpec::Command::All, true},
    };
    for (const auto& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        c->add_option("--space", spec.space, "product of projective spaces, e.g. P4xP2");
        c->add_option("--fan", spec.fan_file, "fan JSON file ({\"rays\":..,\"max_cones\":..})");
        if (s.ideal) {
            c->add_option("--ideal", spec.ideal_file, "file with one generator per line");
            c->add_option("--gens,-g", spec.generators, "inline generator (repeatable)");
            c->add_flag("--saturate-input", spec.saturate_input,
                        "replace the input ideal by its irrelevant-ideal saturation first");
        }
        auto* seed_opt = c->add_option("--seed", spec.seed, "seed for all random draws");
        c->add_option("--prime,-p", spec.prime, "coefficient field modulus (default 32749)");
        c->add_option("--workers,-j", spec.workers, "worker threads (default: all cores)");
        c->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_flag("--check", spec.check, "run the internal invariant suite first");
        if (s.cmd == JobSpec::Command::CsmCI)
            c->add_flag("--verify-front", spec.verify_front,
                        "check that the leading hypersurfaces cut a smooth subvariety");
        c->callback([&spec, seed_opt, cmd = s.cmd]() {
            spec.command = cmd;
            spec.seed_set = seed_opt->count() > 0;
        });
    }

    CLI11_PARSE(app, argc, argv);
    spec.format = (format == "json") ? JobSpec::Format::Json : JobSpec::Format::Text;

    toricchar::JobResult res = toricchar::run(spec);
    if (res.exit_code != 0) {
        std::cerr << res.text;
        return res.exit_code;
    }
    std::cout << (spec.format == JobSpec::Format::Json ? res.json : res.text);
    return 0;
}
