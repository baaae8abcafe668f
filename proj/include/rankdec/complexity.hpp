#pragma once

#include <string>
#include <vector>

// Theoretical GF(2) operation counts for both decoders, row by row.  Cells
// follow the published cost analysis; parameters stay symbolic so other
// code rates can be tabulated.  Counts can be half-integral (averaged
// pivoting terms), hence double cells.

namespace rankdec {

struct ComplexityParams {
    int n = 113;
    int k = 3;
    int m = 127;
    int tau = 55;
    int c_m = 501;    // normal basis complexity
    int c_inv = 0;    // modeled inversion cost in GF(2) additions

    int d() const { return n - k + 1; }
};

struct ComplexityRow {
    std::string step;
    double adds = 0;
    double mults = 0;
};

struct ComplexityReport {
    std::string decoder;
    std::vector<ComplexityRow> rows;
    double total_adds = 0;
    double total_mults = 0;
};

inline ComplexityReport complexity_wba(const ComplexityParams& p) {
    const double n = p.n, k = p.k, m = p.m, cinv = p.c_inv;
    const double m2m1 = m * m - 1;
    const double red = 2 * m - 2;

    ComplexityReport rep;
    rep.decoder = "wba";

    rep.rows.push_back({"init A,I",
                        m * (2 * k * k - 2 * k) + 2 * k * cinv + (2 * k * k + k) * m2m1 +
                            (1.5 * k * k - 0.5 * k) * red,
                        (2 * k * k + k) * m * m});

    rep.rows.push_back({"init u",
                        m * (2 * k - 1) * (n - k) + (2 * k + 1) * (n - k) * m2m1 +
                            (k - 1) * (n - k) * red,
                        (2 * k + 1) * (n - k) * m * m});

    const double upd_u = n * n - 2 * k * n - n + k * k + k;
    rep.rows.push_back({"update u",
                        upd_u * m + upd_u * m2m1 + (n * n - 2 * k * n + n + k * k - k) / 2 * red,
                        m * m * upd_u});

    rep.rows.push_back({"update polynomials",
                        m * (n * n - k * n) + 2 * cinv * (n - k) + (n * n - k * n + 2 * (n - k)) * m2m1 +
                            (k * k - 2 * n * k + 3 * k + n * n + 2 * n) / 2 * red,
                        m * m * (n * n - k * n + 2 * (n - k))});

    rep.rows.push_back({"left division",
                        (k - 1) * (n - k) / 2 * m + (k - 1) * (n - k) / 2 * m2m1 +
                            (n - k) * (k - 1) * red,
                        m * m * (k - 1) * (n - k) / 2});

    rep.rows.push_back({"compute message", (k + 1) * m, 0});

    for (const auto& r : rep.rows) {
        rep.total_adds += r.adds;
        rep.total_mults += r.mults;
    }
    return rep;
}

inline ComplexityReport complexity_tdd(const ComplexityParams& p) {
    const double n = p.n, k = p.k, m = p.m, tau = p.tau, cm = p.c_m, cinv = p.c_inv;
    const double d = p.d();

    ComplexityReport rep;
    rep.decoder = "tdd";

    rep.rows.push_back({"code transformation", (n - 1) * m * m, n * m * m});

    rep.rows.push_back({"syndromes", (n * (cm - m) + (n - 1) * m) * (d - 1), 0});

    rep.rows.push_back({"bma",
                        m * (d - 1) * ((cinv + d - 2) / 2 * (cm - 1) + (d - 2) / 2),
                        m * m * (d - 1) * (d - 2 + cinv / 2)});

    rep.rows.push_back({"compute e~",
                        (tau * (cm - 1) + tau - 1) * m * (m - d + 1),
                        m * m * (m - d + 1) * tau});

    rep.rows.push_back({"inverse q-transform", n * m * cm, 0});

    rep.rows.push_back({"transform with A+", (n - 1) * n * m, n * n * m});

    rep.rows.push_back({"compute message", m * (k * (k - 1) + (cm - 1) * k * k), m * m * k * k});

    for (const auto& r : rep.rows) {
        rep.total_adds += r.adds;
        rep.total_mults += r.mults;
    }
    return rep;
}

}  // namespace rankdec
