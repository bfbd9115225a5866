#include "sprank/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace sprank {

bool VerificationReport::all_pass() const {
    return match() && std::all_of(checks.begin(), checks.end(),
                                  [](const CheckResult& c) { return c.pass; });
}

bool VerificationReport::match() const {
    return !rank_bruteforce.has_value() || *rank_bruteforce == rank_formula;
}

std::string VerificationReport::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = {{"m", m}, {"r", r}, {"t", t}, {"q", q}};
    j["rank_formula"] = rank_formula;
    if (rank_bruteforce) {
        j["rank_bruteforce"] = *rank_bruteforce;
        j["match"] = match();
    }
    if (sbf_count) j["sbf_count"] = *sbf_count;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    j["pass"] = all_pass();
    if (with_timings) {
        nlohmann::ordered_json tm;
        for (const auto& [name, msv] : phase_ms) tm[name] = msv;
        j["timings_ms"] = tm;
    }
    return j.dump(2);
}

void VerificationReport::print_human(std::ostream& os, bool with_timings) const {
    os << command << "  m=" << m << " r=" << r << " t=" << t << " q=" << q << "\n";
    os << "  rank (formula)     " << rank_formula << "\n";
    if (rank_bruteforce) {
        os << "  rank (brute force) " << *rank_bruteforce << "  ["
           << (match() ? "match" : "MISMATCH") << "]\n";
    }
    if (sbf_count) os << "  admissible SBFs    " << *sbf_count << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass && !c.witness.empty()) os << "  (" << c.witness << ")";
        os << "\n";
    }
    if (with_timings) {
        for (const auto& [name, msv] : phase_ms) {
            os << "  time " << name << ": " << msv << " ms\n";
        }
    }
}

}  // namespace sprank
