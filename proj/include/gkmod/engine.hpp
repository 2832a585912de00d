#pragma once

#include "gkmod/config.hpp"
#include "gkmod/report.hpp"

namespace gkmod {

struct RunOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::string preset_override;
    unsigned seed_rng = 0;
    int jobs = 1;
};

TaskResult run_single_task(const JobConfig& cfg, const TaskSpec& spec, unsigned seed_rng);

Report run_tasks(const JobConfig& cfg, unsigned seed_rng, int jobs);

// Full batch run: load config, execute tasks, write report.json and
// report.md under out_dir. Exit codes: 0 all verdicts pass, 1 task
// failure, 2 parse error, 3 validation error.
int run_job(const RunOptions& opt);

}  // namespace gkmod
