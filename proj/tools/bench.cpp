// Benchmark comparing the serial reference sweeps with the OpenMP kernels.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "symf/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(const std::function<symf::SweepReport()>& f, size_t& cases, bool& ok) {
    const auto start = std::chrono::steady_clock::now();
    symf::SweepReport r = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cases = r.cases;
    ok = r.ok();
    return s;
}

void row(const char* name, const std::function<symf::SweepReport(bool)>& sweep) {
    size_t cases = 0;
    bool ok_serial = false, ok_parallel = false;
    double ts = seconds([&] { return sweep(false); }, cases, ok_serial);
    double tp = seconds([&] { return sweep(true); }, cases, ok_parallel);
    std::printf("%-34s %8zu cases  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
                cases, ts, tp, tp > 0 ? ts / tp : 0.0,
                ok_serial && ok_parallel ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    row("schur vs tableaux oracle (w<=8)",
        [](bool par) { return symf::sweep_schur_vs_lr(8, 4, par); });
    row("hl vs x-expansion oracle (w<=6)",
        [](bool par) { return symf::sweep_hl_vs_expansion(6, par); });
    row("hl pieri vs psi (w<=6, r<=4)",
        [](bool par) { return symf::sweep_hl_pieri_vs_psi(6, 4, par); });
    row("hl at t=0 vs schur (w<=8)",
        [](bool par) { return symf::sweep_hl_t0_vs_schur(8, par); });
    row("uc vs Koike oracle (w<=6)", [](bool par) { return symf::sweep_uc_vs_koike(6, par); });
    row("uc vs xy oracle (w<=5)", [](bool par) { return symf::sweep_uc_vs_xy(5, par); });
    return 0;
}
