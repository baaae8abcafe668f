#pragma once

#include <array>
#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include "rankdec/code.hpp"
#include "rankdec/counting.hpp"
#include "rankdec/tdd.hpp"
#include "rankdec/wba.hpp"

// Instrumentation and benchmark drivers: per-decode operation counts over
// fresh random instances, per-operation CPU timings, and the decoder
// timing comparison.

namespace rankdec {

inline NormalBasisCtx load_ctx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open normal basis ctx file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return nb_ctx_parse(text);
}

#ifdef RANKDEC_CTX_FILE
inline const NormalBasisCtx& default_ctx() {
    static const NormalBasisCtx ctx = load_ctx_file(RANKDEC_CTX_FILE);
    return ctx;
}
#endif

inline double cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return double(ts.tv_sec) + double(ts.tv_nsec) * 1e-9;
}

enum class DecoderKind { wba, tdd };

struct OpCountReport {
    DecoderKind decoder = DecoderKind::wba;
    int trials = 0;
    std::uint64_t seed = 0;
    int n = 0, k = 0, tau = 0;
    OpCounts totals;

    double avg(std::uint64_t total) const { return trials ? double(total) / trials : 0.0; }
};

struct DecodeInstance {
    GabidulinCode code;
    std::vector<PolyElem> msg;
    std::vector<PolyElem> received;
};

// fresh random code, message and rank-tau error
inline DecodeInstance make_instance(int n, int k, int tau, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    DecodeInstance inst;
    inst.code = gen_code(n, k, rng());
    inst.msg.resize(k);
    for (auto& e : inst.msg) e = random_coords<poly_basis_tag>(rng);
    inst.received = encode(inst.code, inst.msg);
    std::vector<PolyElem> err = sample_error(n, tau, rng());
    for (int j = 0; j < n; ++j) inst.received[j] = poly_add(inst.received[j], err[j]);
    return inst;
}

// Average per-decode operation counts at rank tau_max, instance preparation
// excluded from the counters.
inline OpCountReport count_ops(DecoderKind decoder, int trials, std::uint64_t seed,
                               const NormalBasisCtx& ctx, int n = 113, int k = 3) {
    if (trials < 1) throw std::invalid_argument("count_ops needs at least one trial");
    OpCountReport rep;
    rep.decoder = decoder;
    rep.trials = trials;
    rep.seed = seed;
    rep.n = n;
    rep.k = k;
    rep.tau = (n - k) / 2;

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        DecodeInstance inst = make_instance(n, k, rep.tau, rng());
        std::vector<PolyElem> decoded;
        if (decoder == DecoderKind::wba) {
            PolyField base;
            Counted<PolyField> f(base, rep.totals);
            decoded = wba_decode(f, inst.code, inst.received, WbaMode::constant_time, rng());
        } else {
            TddPrecomp pre = tdd_precompute(inst.code, ctx);
            std::vector<NormalElem> r(n);
            for (int j = 0; j < n; ++j) r[j] = ctx.to_normal(inst.received[j]);
            NormalField base(ctx);
            Counted<NormalField> f(base, rep.totals);
            auto mnb = tdd_decode(f, pre, r);
            decoded.resize(k);
            for (int i = 0; i < k; ++i) decoded[i] = ctx.to_poly(mnb[i]);
        }
        if (decoded != inst.msg)
            throw decode_failure("count_ops: decoder returned a wrong message at trial " +
                                 std::to_string(t));
    }
    return rep;
}

// ---- per-operation timing -------------------------------------------------

struct BenchFieldRow {
    std::string op;
    bool present = false;
    std::uint64_t calls = 0;
    double seconds = 0;

    double sec_per_1e6() const { return calls ? seconds / double(calls) * 1e6 : 0.0; }
};

struct BenchFieldReport {
    std::string basis;
    std::uint64_t calls = 0;
    std::uint64_t seed = 0;
    std::uint64_t checksum = 0;  // defeats dead-code elimination
    std::string cpu;
    std::string compiler;
    std::vector<BenchFieldRow> rows;

    const BenchFieldRow* find(const std::string& op) const {
        for (const auto& r : rows)
            if (r.op == op && r.present) return &r;
        return nullptr;
    }
};

namespace detail {

inline std::string cpu_model() {
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find("model name");
        if (pos != std::string::npos) {
            auto colon = line.find(':');
            if (colon != std::string::npos) return line.substr(colon + 2);
        }
    }
    return "unknown";
}

inline std::string compiler_id() {
#if defined(__clang__)
    return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    return std::string("gcc ") + __VERSION__;
#else
    return "unknown";
#endif
}

}  // namespace detail

inline BenchFieldReport bench_field(const std::string& basis, std::uint64_t calls,
                                    std::uint64_t seed, const NormalBasisCtx& ctx) {
    if (calls < 10000) throw std::invalid_argument("bench_field needs at least 10^4 calls");
    BenchFieldReport rep;
    rep.basis = basis;
    rep.calls = calls;
    rep.seed = seed;
    rep.cpu = detail::cpu_model();
    rep.compiler = detail::compiler_id();

    std::mt19937_64 rng(seed);
    constexpr int kPool = 256;
    std::uint64_t sink = 0;

    auto time_op = [&](const std::string& name, bool present, auto&& body) {
        BenchFieldRow row;
        row.op = name;
        row.present = present;
        row.calls = calls;
        if (present) {
            double t0 = cpu_seconds();
            body();
            row.seconds = cpu_seconds() - t0;
        }
        rep.rows.push_back(row);
    };

    if (basis == "poly") {
        std::array<PolyElem, kPool> pool;
        for (auto& e : pool) e = random_nonzero_coords<poly_basis_tag>(rng);
        time_op("add", true, [&] {
            PolyElem acc{};
            for (std::uint64_t i = 0; i < calls; ++i) acc = poly_add(acc, pool[i % kPool]);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("multiply", true, [&] {
            PolyElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i) acc = poly_mul(acc, pool[i % kPool]);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("set shift table", false, [] {});
        time_op("multiply shift tables", false, [] {});
        time_op("multiply by alpha^[i]", false, [] {});
        time_op("q-power", false, [] {});
        time_op("square", true, [&] {
            PolyElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i) {
                acc = poly_square(acc);
                acc.lo |= 1;  // keep nonzero
            }
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("invert", true, [&] {
            PolyElem acc{1, 0};
            for (std::uint64_t i = 0; i < calls; ++i) {
                acc = poly_inv(poly_add(acc, pool[i % kPool]));
                acc.lo |= 1;
            }
            sink ^= acc.lo ^ acc.hi;
        });
    } else if (basis == "normal") {
        std::array<NormalElem, kPool> pool;
        for (auto& e : pool) e = random_nonzero_coords<normal_basis_tag>(rng);
        std::array<ShiftTable, 16> tables;
        for (int i = 0; i < 16; ++i) tables[i] = nb_make_shift_table(pool[i]);
        time_op("add", true, [&] {
            NormalElem acc{};
            for (std::uint64_t i = 0; i < calls; ++i) acc = nb_add(acc, pool[i % kPool]);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("multiply", true, [&] {
            NormalElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i) acc = nb_mul(acc, pool[i % kPool], ctx);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("set shift table", true, [&] {
            ShiftTable st;
            for (std::uint64_t i = 0; i < calls; ++i) {
                st = nb_make_shift_table(pool[i % kPool]);
                sink ^= st[1].lo;
            }
        });
        time_op("multiply shift tables", true, [&] {
            NormalElem acc{};
            for (std::uint64_t i = 0; i < calls; ++i) {
                const ShiftTable& ta = tables[i % 16];
                const ShiftTable& tb = tables[(i + 7) % 16];
                acc = nb_add(acc, nb_mul_shift_tables(ta, 0, tb, 0, ctx));
            }
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("multiply by alpha^[i]", true, [&] {
            NormalElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i)
                acc = nb_mul_alpha_pow(nb_add(acc, pool[i % kPool]), int(i % 127), ctx);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("q-power", true, [&] {
            NormalElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i) acc = nb_qpow(acc, int(i % 126) + 1);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("square", true, [&] {
            NormalElem acc = pool[0];
            for (std::uint64_t i = 0; i < calls; ++i) acc = nb_qpow(acc, 1);
            sink ^= acc.lo ^ acc.hi;
        });
        time_op("invert", true, [&] {
            NormalField f(ctx);
            NormalElem acc = f.one();
            for (std::uint64_t i = 0; i < calls; ++i) {
                acc = f.inv(nb_add(acc, pool[i % kPool]));
                acc.lo |= 1;
            }
            sink ^= acc.lo ^ acc.hi;
        });
    } else {
        throw std::invalid_argument("basis must be poly or normal");
    }
    rep.checksum = sink;
    return rep;
}

// ---- decoder timing comparison ---------------------------------------------

struct BenchDecodersReport {
    int trials = 0;
    std::uint64_t seed = 0;
    int n = 0, k = 0, tau = 0;
    double wba_seconds = 0;
    double tdd_seconds = 0;
    std::string cpu;
    std::string compiler;

    double wba_per_decode() const { return trials ? wba_seconds / trials : 0; }
    double tdd_per_decode() const { return trials ? tdd_seconds / trials : 0; }
    double ratio() const { return wba_seconds > 0 ? tdd_seconds / wba_seconds : 0; }
};

// Times both decoders on identical inputs (fresh random instance per trial).
inline BenchDecodersReport bench_decoders(int trials, std::uint64_t seed,
                                          const NormalBasisCtx& ctx, int n = 113, int k = 3) {
    if (trials < 10) throw std::invalid_argument("bench_decoders needs at least 10 trials");
    BenchDecodersReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.n = n;
    rep.k = k;
    rep.tau = (n - k) / 2;
    rep.cpu = detail::cpu_model();
    rep.compiler = detail::compiler_id();

    NormalField fnb(ctx);
    std::mt19937_64 rng(seed);
    std::uint64_t sink = 0;
    for (int t = 0; t < trials; ++t) {
        DecodeInstance inst = make_instance(n, k, rep.tau, rng());
        std::uint64_t wseed = rng();

        double t0 = cpu_seconds();
        auto mw = wba_decode(inst.code, inst.received, WbaMode::constant_time, wseed);
        rep.wba_seconds += cpu_seconds() - t0;
        sink ^= mw[0].lo;

        TddPrecomp pre = tdd_precompute(inst.code, ctx);
        std::vector<NormalElem> r(n);
        for (int j = 0; j < n; ++j) r[j] = ctx.to_normal(inst.received[j]);
        t0 = cpu_seconds();
        auto mt = tdd_decode(fnb, pre, r);
        rep.tdd_seconds += cpu_seconds() - t0;
        sink ^= mt[0].lo;

        if (mw != inst.msg || ctx.to_poly(mt[0]) != inst.msg[0])
            throw decode_failure("bench_decoders: decoder disagreement at trial " + std::to_string(t));
    }
    (void)sink;
    return rep;
}

// ---- round-trip driver ------------------------------------------------------

struct RoundtripReport {
    int trials = 0;
    int tau = 0;
    std::uint64_t seed = 0;
    int n = 0, k = 0;
    int wba_ok = 0;
    int tdd_ok = 0;
    int agree = 0;
};

inline RoundtripReport roundtrip(int trials, int tau, std::uint64_t seed,
                                 const NormalBasisCtx& ctx, int n = 113, int k = 3) {
    RoundtripReport rep;
    rep.trials = trials;
    rep.tau = tau;
    rep.seed = seed;
    rep.n = n;
    rep.k = k;
    NormalField fnb(ctx);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        DecodeInstance inst = make_instance(n, k, tau, rng());
        auto mw = wba_decode(inst.code, inst.received, WbaMode::constant_time, rng());
        TddPrecomp pre = tdd_precompute(inst.code, ctx);
        std::vector<NormalElem> r(n);
        for (int j = 0; j < n; ++j) r[j] = ctx.to_normal(inst.received[j]);
        auto mt_nb = tdd_decode(fnb, pre, r);
        std::vector<PolyElem> mt(k);
        for (int i = 0; i < k; ++i) mt[i] = ctx.to_poly(mt_nb[i]);
        rep.wba_ok += mw == inst.msg;
        rep.tdd_ok += mt == inst.msg;
        rep.agree += mw == mt;
    }
    return rep;
}

}  // namespace rankdec
