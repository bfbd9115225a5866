// sprank: exact 2-ranks of symplectic point-subspace incidence matrices.
//
// Subcommands: formula | bruteforce | verify-sbf | dims | table | odd-compare
// | export-matrix.  All big integers print as decimal strings; --json emits a
// single JSON document; --stable omits wall-clock timings so identical
// arguments produce identical bytes.
#include "sprank/gf2rank.hpp"
#include "sprank/qmatrix.hpp"
#include "sprank/rank_formulas.hpp"
#include "sprank/report.hpp"
#include "sprank/sbf.hpp"
#include "sprank/symplectic.hpp"
#include "sprank/wedge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace sprank;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string q_string(int t) { return (BigInt(1) << t).str(); }

nlohmann::ordered_json matrix_json(const BigMat& a) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& os, const BigMat& a, const std::string& name) {
    os << name << " (" << a.size() << "x" << a.size() << "):\n";
    std::vector<std::size_t> width(a.size(), 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            width[j] = std::max(width[j], a.at(i, j).str().size());
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < a.size(); ++j) {
            const std::string s = a.at(i, j).str();
            os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < a.size() ? " " : "");
        }
        os << "\n";
    }
}

// Scale guard: the incidence matrix carries |I_r| * |P| bits.
bool too_large(int m, int r, int t, BigInt* bits_out) {
    const BigInt q = BigInt(1) << t;
    const BigInt bits = num_Ir(m, r, q) * num_points(m, q);
    if (bits_out) *bits_out = bits;
    return bits > (BigInt(1) << 34);
}

struct CommonOpts {
    bool json = false;
    bool stable = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.json, "emit a single JSON document");
    cmd->add_flag("--stable", opts.stable, "omit timings for byte-stable output");
}

int cmd_formula(int m, int r, int t, const CommonOpts& opts) {
    const BigMat a = build_A(m, r);
    const BigInt rank = rank_closed_form(m, r, t);
    if (opts.json) {
        nlohmann::ordered_json j;
        j["command"] = "formula";
        j["params"] = {{"m", m}, {"r", r}, {"t", t}, {"q", q_string(t)}};
        j["rank_formula"] = rank.str();
        j["matrix_A"] = matrix_json(a);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "rank_2(B_{" << r << ",1}) over GF(" << q_string(t) << ") = " << rank
                  << "\n";
        print_matrix(std::cout, a, "A");
    }
    return 0;
}

int cmd_bruteforce(int m, int r, int t, const std::string& emit_path,
                   const std::string& sms_path, bool force, bool use_m4r, int threads,
                   const CommonOpts& opts) {
    VerificationReport rep;
    rep.command = "bruteforce";
    rep.m = m;
    rep.r = r;
    rep.t = t;
    rep.q = q_string(t);
    rep.rank_formula = rank_closed_form(m, r, t).str();

    std::size_t rank = 0;
    auto t0 = std::chrono::steady_clock::now();
    if (!sms_path.empty()) {
        std::ifstream in(sms_path);
        if (!in) {
            std::cerr << "cannot open " << sms_path << "\n";
            return 2;
        }
        const BitMatrix b = read_sms(in);
        rank = use_m4r ? rank_gf2_m4r(b) : rank_gf2(b, threads);
        rep.phase_ms.emplace_back("sms_rank", ms_since(t0));
    } else {
        BigInt bits;
        if (too_large(m, r, t, &bits) && !force) {
            std::cerr << "refusing: B_{" << r << ",1} holds " << bits
                      << " bits (> 2^34); rerun with --force\n";
            return 2;
        }
        const SympSpace sp(m, t);
        if (use_m4r || !emit_path.empty()) {
            const BitMatrix b = incidence_matrix(sp, r);
            rep.phase_ms.emplace_back("enumerate", ms_since(t0));
            if (!emit_path.empty()) {
                std::ofstream out(emit_path);
                write_sms(out, b);
            }
            t0 = std::chrono::steady_clock::now();
            rank = use_m4r ? rank_gf2_m4r(b) : rank_gf2(b, threads);
        } else {
            rank = rank_gf2_stream(
                [&](const std::function<void(BitRow)>& emit) {
                    stream_incidence_rows(sp, r, emit);
                },
                static_cast<std::size_t>(
                    num_points(m, BigInt(1) << t).convert_to<long long>()),
                threads);
        }
        rep.phase_ms.emplace_back("stream_rank", ms_since(t0));
    }
    rep.rank_bruteforce = std::to_string(rank);
    rep.checks.push_back({"brute-force rank equals closed form", rep.match(),
                          "formula=" + rep.rank_formula +
                              " bruteforce=" + *rep.rank_bruteforce});
    if (opts.json) {
        std::cout << rep.to_json(!opts.stable) << "\n";
    } else {
        rep.print_human(std::cout, !opts.stable);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify_sbf(int m, int r, int t, bool force, int threads, const CommonOpts& opts) {
    const BasisReport br = verify_basis_theorem(m, r, t, force, threads);
    VerificationReport rep;
    rep.command = "verify-sbf";
    rep.m = m;
    rep.r = r;
    rep.t = t;
    rep.q = q_string(t);
    rep.rank_formula = br.rank_formula.str();
    rep.rank_bruteforce = std::to_string(br.bruteforce_rank);
    rep.sbf_count = br.sbf_count;
    rep.checks = br.checks;
    rep.phase_ms = br.phase_ms;
    if (opts.json) {
        std::cout << rep.to_json(!opts.stable) << "\n";
    } else {
        rep.print_human(std::cout, !opts.stable);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_dims(int m, const CommonOpts& opts) {
    if (opts.json) {
        nlohmann::ordered_json j;
        j["command"] = "dims";
        j["params"] = {{"m", m}};
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int lam = 0; lam <= 2 * m; ++lam) {
            nlohmann::ordered_json entry;
            entry["lambda"] = lam;
            entry["levels"] = nlohmann::ordered_json::object();
            for (int l = std::max(0, lam - m); l <= lam / 2; ++l) {
                entry["levels"][std::to_string(l)] = dim_S(m, lam, l);
            }
            if (lam <= m) entry["weyl_count"] = weyl_basis(m, lam).size();
            rows.push_back(entry);
        }
        j["dims"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "dim S^lambda_level for m=" << m << " (rows: lambda, cols: level)\n";
    for (int lam = 0; lam <= 2 * m; ++lam) {
        std::cout << "  lambda=" << lam << ":";
        for (int l = std::max(0, lam - m); l <= lam / 2; ++l) {
            std::cout << "  [" << l << "] " << dim_S(m, lam, l);
        }
        if (lam <= m) {
            std::cout << "  (level-0 basis size " << weyl_basis(m, lam).size() << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_table(int m_max, int t_max, const std::string& out_path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    *os << "m,r,t,rank\n";
    for (int m = 2; m <= m_max; ++m) {
        for (int r = 1; r <= 2 * m - 1; ++r) {
            for (int t = 1; t <= t_max; ++t) {
                *os << m << "," << r << "," << t << "," << rank_closed_form(m, r, t) << "\n";
            }
        }
    }
    return 0;
}

int cmd_odd_compare(int p, int m, int t, const CommonOpts& opts) {
    const BigMat a = build_A(m, m);
    const BigMat ap = build_A_prime(p, m);
    const BigInt even_rank = rank_closed_form(m, m, t);
    const BigInt odd_rank = rank_odd_model(p, m, t);
    if (opts.json) {
        nlohmann::ordered_json j;
        j["command"] = "odd-compare";
        j["params"] = {{"p", p}, {"m", m}, {"t", t}};
        j["matrix_A"] = matrix_json(a);
        j["matrix_A_prime"] = matrix_json(ap);
        j["rank_even_q2t"] = even_rank.str();
        j["rank_odd_model"] = odd_rank.str();
        nlohmann::ordered_json diff = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < ap.size(); ++i) {
            for (std::size_t j2 = 0; j2 < ap.size(); ++j2) {
                if (i < a.size() && j2 < a.size() && a.at(i, j2) != ap.at(i, j2)) {
                    diff.push_back({{"i", i + 1},
                                    {"j", j2 + 1},
                                    {"A", a.at(i, j2).str()},
                                    {"A_prime", ap.at(i, j2).str()}});
                }
            }
        }
        j["differences"] = diff;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    print_matrix(std::cout, a, "A (characteristic 2, r = m)");
    print_matrix(std::cout, ap, "A' (p = " + std::to_string(p) + " model)");
    std::cout << "rank over GF(2^" << t << "): " << even_rank << "\n";
    std::cout << "odd-model value (p=" << p << ", t=" << t << "): " << odd_rank << "\n";
    std::cout << "entry differences (1-based):\n";
    bool any = false;
    for (std::size_t i = 0; i < std::min(a.size(), ap.size()); ++i) {
        for (std::size_t j = 0; j < std::min(a.size(), ap.size()); ++j) {
            if (a.at(i, j) != ap.at(i, j)) {
                any = true;
                std::cout << "  (" << i + 1 << "," << j + 1 << "): " << a.at(i, j)
                          << " vs " << ap.at(i, j) << "\n";
            }
        }
    }
    if (!any) std::cout << "  none\n";
    return 0;
}

int cmd_export_matrix(int m, int r, int t, const std::string& out_path, bool force) {
    BigInt bits;
    if (too_large(m, r, t, &bits) && !force) {
        std::cerr << "refusing: B_{" << r << ",1} holds " << bits
                  << " bits (> 2^34); rerun with --force\n";
        return 2;
    }
    const SympSpace sp(m, t);
    const BitMatrix b = incidence_matrix(sp, r);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    write_sms(out, b);
    std::cout << "wrote " << b.nrows() << "x" << b.ncols() << " matrix to " << out_path
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact 2-ranks of symplectic incidence matrices (GF(2^t))"};
    app.require_subcommand(1);

    int m = 2, r = 1, t = 1, p = 3, threads = 1, m_max = 4, t_max = 3;
    bool force = false, use_m4r = false;
    std::string out_path, sms_path;
    CommonOpts opts;

    auto* formula = app.add_subcommand("formula", "closed-form rank and the matrix A");
    formula->add_option("--m", m, "half the dimension of the symplectic space")->required();
    formula->add_option("--r", r, "subspace dimension")->required();
    formula->add_option("--t", t, "field degree: q = 2^t")->required();
    add_common(formula, opts);

    auto* brute = app.add_subcommand("bruteforce",
                                     "enumerate B_{r,1}, stream its GF(2) rank, compare");
    brute->add_option("--m", m)->required();
    brute->add_option("--r", r)->required();
    brute->add_option("--t", t)->required();
    brute->add_option("--emit-matrix", out_path, "also write the matrix in SMS format");
    brute->add_option("--from-sms", sms_path, "rank a previously exported SMS file instead");
    brute->add_flag("--force", force, "ignore the scale guard");
    brute->add_flag("--m4r", use_m4r, "use the block-table elimination kernel");
    brute->add_option("--threads", threads, "worker threads for the rank engine");
    add_common(brute, opts);

    auto* verify = app.add_subcommand("verify-sbf",
                                      "verify the admissible-SBF basis numerically");
    verify->add_option("--m", m)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--t", t)->required();
    verify->add_flag("--force", force, "ignore the point-count guard");
    verify->add_option("--threads", threads, "worker threads for the rank engine");
    add_common(verify, opts);

    auto* dims = app.add_subcommand("dims", "filtration dimension table");
    dims->add_option("--m", m)->required();
    add_common(dims, opts);

    auto* table = app.add_subcommand("table", "CSV sweep of formula ranks");
    table->add_option("--m-max", m_max, "largest m (from 2)");
    table->add_option("--t-max", t_max, "largest t (from 1)");
    table->add_option("--out", out_path, "CSV path (stdout when omitted)");

    auto* oddc = app.add_subcommand("odd-compare", "A vs A': even/odd characteristic models");
    oddc->add_option("--p", p, "odd-model prime (2 allowed for comparison)")->required();
    oddc->add_option("--m", m)->required();
    oddc->add_option("--t", t)->required();
    add_common(oddc, opts);

    auto* exportm = app.add_subcommand("export-matrix", "write B_{r,1} in SMS format");
    exportm->add_option("--m", m)->required();
    exportm->add_option("--r", r)->required();
    exportm->add_option("--t", t)->required();
    exportm->add_option("--out", out_path, "output path")->required();
    exportm->add_flag("--force", force, "ignore the scale guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (formula->parsed()) return cmd_formula(m, r, t, opts);
        if (brute->parsed())
            return cmd_bruteforce(m, r, t, out_path, sms_path, force, use_m4r, threads, opts);
        if (verify->parsed()) return cmd_verify_sbf(m, r, t, force, threads, opts);
        if (dims->parsed()) return cmd_dims(m, opts);
        if (table->parsed()) return cmd_table(m_max, t_max, out_path);
        if (oddc->parsed()) return cmd_odd_compare(p, m, t, opts);
        if (exportm->parsed()) return cmd_export_matrix(m, r, t, out_path, force);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
