#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atiyah {

/// Runtime caps and knobs, settable by flags or environment (ATIYAH_MAX_K,
/// ATIYAH_STRETCH, ATIYAH_THREADS). Stretch raises the per-command caps:
/// lift/simplicial 4 -> 5, compare 3 -> 4, identity 5 -> 6.
struct CliConfig {
    unsigned max_k_lift = 4;
    unsigned max_k_compare = 3;
    unsigned max_k_identity = 5;
    bool stretch = false;
    int threads = 0;

    void apply_stretch();
    static CliConfig from_environment();
};

/// CLI dispatch. Exit code 0 on success / verified-true, 1 when a
/// verification-style command reports false, 2 on malformed input.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace atiyah
