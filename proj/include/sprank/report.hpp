// Report structure shared by the CLI verification subcommands, with JSON and
// human-readable rendering.  Ranks are carried as decimal strings so that
// consumers never truncate them.
#pragma once

#include "sprank/sbf.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sprank {

struct VerificationReport {
    std::string command;
    int m = 0, r = 0, t = 0;
    std::string q;
    std::string rank_formula;
    std::optional<std::string> rank_bruteforce;
    std::optional<std::size_t> sbf_count;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, double>> phase_ms;

    bool all_pass() const;
    // True when either rank is missing, or both are present and equal.
    bool match() const;

    // with_timings=false produces byte-stable output for identical arguments.
    std::string to_json(bool with_timings) const;
    void print_human(std::ostream& os, bool with_timings) const;
};

}  // namespace sprank
