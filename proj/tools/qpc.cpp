// Command-line front end: builders, verifiers, the concatenation sweep and
// the ternary length-13 rank-12 reproduction, all over the canonical code
// and partition file formats.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpc/concat.hpp"
#include "qpc/constructions.hpp"
#include "qpc/error.hpp"
#include "qpc/kernels.hpp"
#include "qpc/perfect.hpp"

using json = nlohmann::json;
using namespace qpc;

namespace {

void emit_report(const std::string& path, const json& report) {
    if (path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("IoError", "cannot open " + path + " for writing");
    os << report.dump(2) << '\n';
}

json weight_histogram(const WeightDistribution& wd) {
    json h = json::object();
    for (size_t i = 0; i < wd.counts.size(); ++i)
        if (wd.counts[i] != 0) h[std::to_string(i)] = wd.counts[i];
    return h;
}

unsigned thread_count(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("QPC_THREADS")) return unsigned(std::atoi(env));
    return 1;
}

int run_verify(const std::string& input, const std::string& report_path) {
    Code c = read_code_file(input);
    PerfectReport rep = is_perfect(c);

    json report;
    report["perfect"] = rep.is_perfect;
    report["method"] = rep.method;
    report["rank"] = code_rank(c);
    report["defect_count"] = rep.coverage_defects;
    if (rep.is_perfect) {
        Theorem1Result t1 = theorem1_check(c);
        report["dual_weight_histogram"] = weight_histogram(t1.dual_weights);
        report["theorem1_ok"] = t1.ok;
        if (c.field().q() != 2)
            report["theorem2_ok"] = check_theorem2(c).ok();
        else
            report["theorem2_ok"] = nullptr;  // theorem 2 is stated for q != 2
    } else {
        report["dual_weight_histogram"] = weight_histogram(weight_distribution(orthogonal(c)));
        report["theorem1_ok"] = false;
        report["theorem2_ok"] = false;
    }
    emit_report(report_path, report);
    return rep.is_perfect ? 0 : 1;
}

int run_sweep(unsigned q, unsigned m, const std::string& report_path, unsigned threads) {
    Partition p1 = space_partition(q, m);
    Partition p2 = mds_partition(q, m);
    RankSurvey survey = sweep_ranks(p1, p2, threads);

    json report;
    report["total"] = survey.total;
    json counts = json::object(), witnesses = json::object();
    size_t max_rank = 0;
    for (const auto& [r, cnt] : survey.counts) {
        counts[std::to_string(r)] = cnt;
        witnesses[std::to_string(r)] = format_permutation(survey.witnesses.at(r));
        max_rank = std::max(max_rank, r);
    }
    report["ranks"] = counts;
    report["witnesses"] = witnesses;
    report["max_rank"] = max_rank;
    emit_report(report_path, report);
    return 0;
}

int run_ternary13(const std::string& out, const std::string& report_path) {
    Partition p1 = space_partition(3, 2);
    Partition p2 = mds_partition(3, 2);
    Rank12Witness witness = search_rank12(p1, p2);

    PerfectReport rep = is_perfect(witness.code);
    Theorem1Result t1 = theorem1_check(witness.code);
    Matrix pv = witness_vectors();
    bool independent = span_dim(*pv.field, pv.rows) == 12;
    Word w(13, 0);
    for (int i = 4; i < 13; ++i) w[i] = 1;
    bool orthogonal_to_w = true;
    for (const Word& v : pv.rows)
        if (dot(*pv.field, w, v) != 0) orthogonal_to_w = false;

    json report;
    report["perfect"] = rep.is_perfect;
    report["method"] = rep.method;
    report["rank"] = code_rank(witness.code);
    report["dual_weight_histogram"] = weight_histogram(t1.dual_weights);
    report["theorem1_ok"] = t1.ok;
    report["alpha"] = format_permutation(witness.alpha);
    report["witness_vectors_independent"] = independent;
    report["witness_vectors_orthogonal_to_dual_word"] = orthogonal_to_w;
    emit_report(report_path, report);

    if (!out.empty()) write_code_file(out, witness.code);
    return (rep.is_perfect && code_rank(witness.code) == 12 && independent && orthogonal_to_w)
               ? 0
               : 1;
}

int run_decompose(const std::string& input, const std::string& w_digits,
                  const std::string& report_path) {
    Code c = read_code_file(input);
    Word w;
    if (!w_digits.empty()) {
        for (char ch : w_digits) w.push_back(uint8_t(ch - '0'));
    } else {
        auto m = admissible_m(c.field().q(), c.length());
        if (!m) throw Error("LengthNotAdmissible", "no admissible m for this length");
        size_t target = 1;
        for (unsigned i = 0; i + 1 < *m; ++i) target *= c.field().q();
        for (const Word& dw : orthogonal(c).enumerate()) {
            size_t wt = 0;
            for (uint8_t x : dw) wt += x != 0;
            if (wt == target) {
                w = dw;
                break;
            }
        }
        if (w.empty()) throw Error("NotDualWord", "no dual word of weight q^(m-1) exists");
    }
    Decomposition d = decompose(c, w);
    json report;
    std::string w_text;
    for (uint8_t x : d.w) w_text += char('0' + x);
    report["w"] = w_text;
    report["prefix_len"] = d.prefix_len;
    report["suffix_len"] = d.suffix_len;
    report["inner_count"] = d.inner.size();
    report["outer_count"] = d.outer.size();
    emit_report(report_path, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-ary 1-perfect code toolkit"};
    app.require_subcommand(1);
    bool no_simd = false;
    app.add_flag("--no-simd", no_simd, "force the scalar kernel backend");

    unsigned q = 3, m = 2;
    size_t n = 9;
    std::string out, input, report_path, kind, alpha_text, p1_dir, p2_dir, w_digits;
    unsigned threads = 0;

    auto* cmd_hamming = app.add_subcommand("hamming", "write a Hamming code file");
    cmd_hamming->add_option("--q", q)->required();
    cmd_hamming->add_option("--m", m)->required();
    cmd_hamming->add_option("-o,--out", out)->required();

    auto* cmd_simplex = app.add_subcommand("simplex", "write a simplex code file");
    cmd_simplex->add_option("--q", q)->required();
    cmd_simplex->add_option("--m", m)->required();
    cmd_simplex->add_option("-o,--out", out)->required();

    auto* cmd_mds = app.add_subcommand("mds", "write a trivial MDS (sum-zero) code file");
    cmd_mds->add_option("--q", q)->required();
    cmd_mds->add_option("--n", n)->required();
    cmd_mds->add_option("-o,--out", out)->required();

    auto* cmd_cpp = app.add_subcommand("cpp", "write the distance-3 MDS subcode file");
    cmd_cpp->add_option("--q", q)->required();
    cmd_cpp->add_option("--m", m)->required();
    cmd_cpp->add_option("-o,--out", out)->required();

    auto* cmd_partition = app.add_subcommand("partition", "write a coset partition directory");
    cmd_partition->add_option("--kind", kind)->required()->check(CLI::IsMember({"space", "mds"}));
    cmd_partition->add_option("--q", q)->required();
    cmd_partition->add_option("--m", m)->required();
    cmd_partition->add_option("-o,--out", out)->required();

    auto* cmd_verify = app.add_subcommand("verify", "check perfection and the structure theorems");
    cmd_verify->add_option("file", input)->required();
    cmd_verify->add_option("--report", report_path);

    auto* cmd_rank = app.add_subcommand("rank", "print the rank of a code file");
    cmd_rank->add_option("file", input)->required();

    auto* cmd_dual = app.add_subcommand("dual", "write the orthogonal code");
    cmd_dual->add_option("file", input)->required();
    cmd_dual->add_option("-o,--out", out)->required();

    auto* cmd_weights = app.add_subcommand("weights", "print the weight distribution");
    cmd_weights->add_option("file", input)->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "split a code along a dual word");
    cmd_decompose->add_option("file", input)->required();
    cmd_decompose->add_option("--w", w_digits, "dual word as base-q digits");
    cmd_decompose->add_option("--report", report_path);

    auto* cmd_concat = app.add_subcommand("concat", "assemble a code from two partitions");
    cmd_concat->add_option("--p1", p1_dir)->required();
    cmd_concat->add_option("--p2", p2_dir)->required();
    cmd_concat->add_option("--alpha", alpha_text)->required();
    cmd_concat->add_option("-o,--out", out)->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "rank survey over all permutations");
    cmd_sweep->add_option("--q", q);
    cmd_sweep->add_option("--m", m);
    cmd_sweep->add_option("--report", report_path);
    cmd_sweep->add_option("--threads", threads);

    auto* cmd_ternary13 =
        app.add_subcommand("ternary13", "reproduce the length-13 rank-12 ternary code");
    cmd_ternary13->add_option("-o,--out", out);
    cmd_ternary13->add_option("--report", report_path);

    CLI11_PARSE(app, argc, argv);
    if (no_simd) kernels::force_scalar(true);

    try {
        if (cmd_hamming->parsed()) {
            write_code_file(out, hamming_code(q, m).to_code());
        } else if (cmd_simplex->parsed()) {
            write_code_file(out, simplex_code(q, m).to_code());
        } else if (cmd_mds->parsed()) {
            write_code_file(out, trivial_mds(q, n).to_code());
        } else if (cmd_cpp->parsed()) {
            write_code_file(out, extract_cpp(q, m).to_code());
        } else if (cmd_partition->parsed()) {
            write_partition_dir(out, kind == "space" ? space_partition(q, m)
                                                     : mds_partition(q, m));
        } else if (cmd_verify->parsed()) {
            return run_verify(input, report_path);
        } else if (cmd_rank->parsed()) {
            std::cout << code_rank(read_code_file(input)) << '\n';
        } else if (cmd_dual->parsed()) {
            write_code_file(out, orthogonal(read_code_file(input)).to_code());
        } else if (cmd_weights->parsed()) {
            std::cout << weight_histogram(weight_distribution(read_code_file(input))).dump(2)
                      << '\n';
        } else if (cmd_decompose->parsed()) {
            return run_decompose(input, w_digits, report_path);
        } else if (cmd_concat->parsed()) {
            Partition p1 = read_partition_dir(p1_dir);
            Partition p2 = read_partition_dir(p2_dir);
            write_code_file(out, concatenate(p1, p2, parse_permutation(alpha_text)));
        } else if (cmd_sweep->parsed()) {
            return run_sweep(q, m, report_path, thread_count(threads));
        } else if (cmd_ternary13->parsed()) {
            return run_ternary13(out, report_path);
        }
    } catch (const Error& e) {
        std::cerr << "ERROR " << e.code() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ERROR Internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
