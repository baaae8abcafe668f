// Benchmark and instrumentation CLI for the Gabidulin decoder library.
//
// Subcommands: bench-field, bench-decoders, count-ops, complexity,
// roundtrip, basis-info.  Exit codes: 0 success, 1 decode failure,
// 2 bad arguments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rankdec/bench.hpp"
#include "rankdec/nb_build.hpp"
#include "rankdec/report.hpp"

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot open output file: " + out_file);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric Gabidulin decoder benchmarks"};
    app.require_subcommand(1);

    std::string basis = "poly";
    std::string decoder = "wba";
    std::string format = "md";
    std::string out_file;
    std::uint64_t seed = 1;
    std::uint64_t calls = 1000000;
    int trials = 100;
    int tau = 55;
    int n = 113;
    int k = 3;
    int cm = 501;
    int cinv = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "64-bit RNG seed");
        cmd->add_option("--format", format, "output format: md, csv or json")
            ->check(CLI::IsMember({"md", "csv", "json"}));
        cmd->add_option("--out", out_file, "write the report to FILE instead of stdout");
    };

    CLI::App* c_bf = app.add_subcommand("bench-field", "time the field operations of one basis");
    c_bf->add_option("--basis", basis, "poly or normal")->check(CLI::IsMember({"poly", "normal"}));
    c_bf->add_option("--calls", calls, "function calls per operation (>= 10^4)");
    add_common(c_bf);

    CLI::App* c_bd = app.add_subcommand("bench-decoders", "time both decoders on identical inputs");
    c_bd->add_option("--trials", trials, "number of decodings");
    c_bd->add_option("--n", n, "code length");
    c_bd->add_option("--k", k, "code dimension");
    add_common(c_bd);

    CLI::App* c_co = app.add_subcommand("count-ops", "per-decoding operation call counts");
    c_co->add_option("--decoder", decoder, "wba or tdd")->check(CLI::IsMember({"wba", "tdd"}));
    c_co->add_option("--trials", trials, "number of decodings");
    c_co->add_option("--n", n, "code length");
    c_co->add_option("--k", k, "code dimension");
    add_common(c_co);

    CLI::App* c_cx = app.add_subcommand("complexity", "theoretical GF(2) operation counts");
    c_cx->add_option("--n", n, "code length");
    c_cx->add_option("--k", k, "code dimension");
    c_cx->add_option("--tau", tau, "error rank for the TDD table");
    c_cx->add_option("--cm", cm, "normal basis complexity C_M");
    c_cx->add_option("--cinv", cinv, "modeled inversion cost in GF(2) additions");
    add_common(c_cx);

    CLI::App* c_rt = app.add_subcommand("roundtrip", "decode random instances with both decoders");
    c_rt->add_option("--trials", trials, "number of instances");
    c_rt->add_option("--tau", tau, "error rank");
    c_rt->add_option("--n", n, "code length");
    c_rt->add_option("--k", k, "code dimension");
    add_common(c_rt);

    CLI::App* c_bi = app.add_subcommand("basis-info", "show the shipped normal basis context");
    add_common(c_bi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const rankdec::ReportFormat fmt = rankdec::parse_format(format);

        if (c_bf->parsed()) {
            auto rep = rankdec::bench_field(basis, calls, seed, rankdec::default_ctx());
            emit(rankdec::render(rep, fmt), out_file);
        } else if (c_bd->parsed()) {
            auto rep = rankdec::bench_decoders(trials, seed, rankdec::default_ctx(), n, k);
            emit(rankdec::render(rep, fmt), out_file);
        } else if (c_co->parsed()) {
            auto kind = decoder == "wba" ? rankdec::DecoderKind::wba : rankdec::DecoderKind::tdd;
            auto rep = rankdec::count_ops(kind, trials, seed, rankdec::default_ctx(), n, k);
            emit(rankdec::render(rep, fmt), out_file);
        } else if (c_cx->parsed()) {
            rankdec::ComplexityParams p;
            p.n = n;
            p.k = k;
            p.tau = tau;
            p.c_m = cm;
            p.c_inv = cinv;
            std::string text = rankdec::render(rankdec::complexity_wba(p), fmt);
            text += "\n";
            text += rankdec::render(rankdec::complexity_tdd(p), fmt);
            emit(text, out_file);
        } else if (c_rt->parsed()) {
            auto rep = rankdec::roundtrip(trials, tau, seed, rankdec::default_ctx(), n, k);
            std::ostringstream os;
            os << "wba: " << rep.wba_ok << "/" << rep.trials << " OK\n";
            os << "tdd: " << rep.tdd_ok << "/" << rep.trials << " OK\n";
            os << "agreement: " << rep.agree << "/" << rep.trials << "\n";
            emit(os.str(), out_file);
            if (rep.wba_ok != rep.trials || rep.tdd_ok != rep.trials) return 1;
        } else if (c_bi->parsed()) {
            const auto& ctx = rankdec::default_ctx();
            std::ostringstream os;
            os << "normal basis context (" << RANKDEC_CTX_FILE << ")\n";
            os << "  m         " << ctx.m << "\n";
            os << "  C_M       " << ctx.complexity << "\n";
            os << "  self-dual " << (ctx.self_dual ? "yes" : "no") << "\n";
            os << "  alpha     " << rankdec::to_hex(ctx.alpha) << "\n";
            emit(os.str(), out_file);
        }
    } catch (const rankdec::decode_failure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
