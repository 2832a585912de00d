#include "gkmod/engine.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"gkmod — exact computation with Lie algebra actions on Gaussian-weighted "
                 "polynomial modules"};
    app.require_subcommand(1);

    gkmod::RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "execute the tasks of a JSON config");
    run->add_option("config", opt.config_path, "path to the job config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--preset", opt.preset_override,
                    "override the Lie preset (sl2_standard | sl2_adjoint)");
    run->add_option("--out", opt.out_dir, "output directory for report.json / report.md")
        ->default_val(".");
    run->add_option("--seed-rng", opt.seed_rng, "seed for sampling reproducibility")->default_val(0);
    run->add_option("--jobs", opt.jobs, "parallel independent tasks")->default_val(1);

    CLI11_PARSE(app, argc, argv);
    return gkmod::run_job(opt);
}
