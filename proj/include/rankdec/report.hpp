#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rankdec/bench.hpp"
#include "rankdec/complexity.hpp"

// Markdown, CSV and JSON renderings of the reports.  Markdown mirrors the
// table layout the harness reproduces; the JSON key set for operation
// counts is part of the CLI contract.

namespace rankdec {

enum class ReportFormat { md, csv, json };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "md") return ReportFormat::md;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("format must be md, csv or json");
}

inline const char* decoder_name(DecoderKind d) { return d == DecoderKind::wba ? "wba" : "tdd"; }

// ---- operation counts -------------------------------------------------------

inline std::string render(const OpCountReport& r, ReportFormat fmt) {
    struct Cell {
        const char* key;
        std::uint64_t total;
        bool used;
    };
    const bool wba = r.decoder == DecoderKind::wba;
    const Cell cells[] = {
        {"add", r.totals.add, true},
        {"multiply", r.totals.multiply, wba},
        {"set_shift_table", r.totals.set_shift_table, !wba},
        {"multiply_shift_tables", r.totals.multiply_shift_tables, !wba},
        {"mul_alpha_pow", r.totals.mul_alpha_pow, !wba},
        {"q_power", r.totals.q_power, !wba},
        {"square", r.totals.square, true},
        {"invert", r.totals.invert, true},
    };
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::json: {
            nlohmann::json j;
            for (const auto& c : cells) j[c.key] = r.avg(c.total);
            j["trials"] = r.trials;
            j["seed"] = r.seed;
            j["decoder"] = decoder_name(r.decoder);
            j["n"] = r.n;
            j["k"] = r.k;
            j["tau"] = r.tau;
            os << j.dump(2) << "\n";
            break;
        }
        case ReportFormat::csv: {
            os << "operation,calls_per_decoding\n";
            for (const auto& c : cells)
                os << c.key << "," << (c.used ? std::to_string(r.avg(c.total)) : "-") << "\n";
            break;
        }
        case ReportFormat::md: {
            os << "Average number of function calls per decoding (" << decoder_name(r.decoder)
               << ", n=" << r.n << ", k=" << r.k << ", tau=" << r.tau << ", trials=" << r.trials
               << ", seed=" << r.seed << ")\n\n";
            os << "| operation | calls/decoding |\n|---|---|\n";
            os << std::fixed << std::setprecision(1);
            for (const auto& c : cells) {
                os << "| " << c.key << " | ";
                if (c.used)
                    os << r.avg(c.total);
                else
                    os << "-";
                os << " |\n";
            }
            break;
        }
    }
    return os.str();
}

// ---- per-operation timing ---------------------------------------------------

inline std::string render(const BenchFieldReport& r, ReportFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::json: {
            nlohmann::json j;
            j["basis"] = r.basis;
            j["calls"] = r.calls;
            j["seed"] = r.seed;
            j["cpu"] = r.cpu;
            j["compiler"] = r.compiler;
            j["checksum"] = r.checksum;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : r.rows) {
                nlohmann::json e;
                e["op"] = row.op;
                if (row.present) {
                    e["seconds_per_1e6_calls"] = row.sec_per_1e6();
                    e["calls"] = row.calls;
                } else {
                    e["seconds_per_1e6_calls"] = nullptr;
                }
                rows.push_back(e);
            }
            j["rows"] = rows;
            os << j.dump(2) << "\n";
            break;
        }
        case ReportFormat::csv: {
            os << "operation,seconds_per_1e6_calls\n";
            for (const auto& row : r.rows)
                os << row.op << ","
                   << (row.present ? std::to_string(row.sec_per_1e6()) : std::string("-")) << "\n";
            break;
        }
        case ReportFormat::md: {
            os << "CPU time [s] per 10^6 function calls (" << r.basis << " basis, " << r.calls
               << " calls per op, seed=" << r.seed << ")\n\n";
            os << "| operation | " << r.basis << " basis |\n|---|---|\n";
            os << std::scientific << std::setprecision(3);
            for (const auto& row : r.rows) {
                os << "| " << row.op << " | ";
                if (row.present)
                    os << row.sec_per_1e6();
                else
                    os << "-";
                os << " |\n";
            }
            os << "\ncpu: " << r.cpu << "\ncompiler: " << r.compiler << "\n";
            break;
        }
    }
    return os.str();
}

// ---- decoder comparison -----------------------------------------------------

inline std::string render(const BenchDecodersReport& r, ReportFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::json: {
            nlohmann::json j;
            j["trials"] = r.trials;
            j["seed"] = r.seed;
            j["n"] = r.n;
            j["k"] = r.k;
            j["tau"] = r.tau;
            j["wba_seconds_total"] = r.wba_seconds;
            j["tdd_seconds_total"] = r.tdd_seconds;
            j["wba_seconds_per_decode"] = r.wba_per_decode();
            j["tdd_seconds_per_decode"] = r.tdd_per_decode();
            j["tdd_over_wba_ratio"] = r.ratio();
            j["cpu"] = r.cpu;
            j["compiler"] = r.compiler;
            os << j.dump(2) << "\n";
            break;
        }
        case ReportFormat::csv: {
            os << "decoder,total_seconds,seconds_per_decode\n";
            os << "wba," << r.wba_seconds << "," << r.wba_per_decode() << "\n";
            os << "tdd," << r.tdd_seconds << "," << r.tdd_per_decode() << "\n";
            break;
        }
        case ReportFormat::md: {
            os << "Decoding time for " << r.trials << " decodings (n=" << r.n << ", k=" << r.k
               << ", tau=" << r.tau << ", seed=" << r.seed << ")\n\n";
            os << "| decoder | total [s] | per decode [ms] |\n|---|---|---|\n";
            os << std::fixed << std::setprecision(4);
            os << "| wba | " << r.wba_seconds << " | " << r.wba_per_decode() * 1e3 << " |\n";
            os << "| tdd | " << r.tdd_seconds << " | " << r.tdd_per_decode() * 1e3 << " |\n";
            os << "\ntdd/wba time ratio: " << std::setprecision(2) << r.ratio() << "\n";
            os << "cpu: " << r.cpu << "\ncompiler: " << r.compiler << "\n";
            break;
        }
    }
    return os.str();
}

// ---- theoretical complexity -------------------------------------------------

inline std::string render(const ComplexityReport& r, ReportFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case ReportFormat::json: {
            nlohmann::json j;
            j["decoder"] = r.decoder;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : r.rows)
                rows.push_back({{"step", row.step}, {"additions", row.adds}, {"multiplications", row.mults}});
            j["rows"] = rows;
            j["total_additions"] = r.total_adds;
            j["total_multiplications"] = r.total_mults;
            os << j.dump(2) << "\n";
            break;
        }
        case ReportFormat::csv: {
            os << "step,additions,multiplications\n";
            os << std::fixed << std::setprecision(1);
            for (const auto& row : r.rows) os << row.step << "," << row.adds << "," << row.mults << "\n";
            os << "total," << r.total_adds << "," << r.total_mults << "\n";
            break;
        }
        case ReportFormat::md: {
            os << "Theoretical cost of the " << (r.decoder == "wba" ? "WBA" : "TDD")
               << " in GF(2) operations\n\n";
            os << "| step | additions | multiplications |\n|---|---|---|\n";
            os << std::fixed << std::setprecision(1);
            for (const auto& row : r.rows)
                os << "| " << row.step << " | " << row.adds << " | " << row.mults << " |\n";
            os << "| **total** | " << r.total_adds << " | " << r.total_mults << " |\n";
            break;
        }
    }
    return os.str();
}

}  // namespace rankdec
