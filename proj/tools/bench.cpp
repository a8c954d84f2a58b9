// Serial reference vs OpenMP kernels: determinant, graded dimensions, centre.

#include "cherednik/centre.hpp"
#include "cherednik/wronski.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace cherednik;

namespace {

double seconds(const std::function<void()> &f, int repeats)
{
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i)
        f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

bool compare(const char *name, int repeats, const std::function<bool(Execution)> &run)
{
    bool same = true;
    bool serial_result = false;
    const double ts = seconds([&] { serial_result = run(Execution::serial); }, repeats);
    bool parallel_result = false;
    const double tp = seconds([&] { parallel_result = run(Execution::parallel); }, repeats);
    same = serial_result && parallel_result;
    std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
                same ? "results agree" : "RESULTS DIFFER");
    return same;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"serial vs parallel kernels"};
    bool quick = false;
    int repeats = 3;
    app.add_flag("--quick", quick, "small sizes, single repeat");
    app.add_option("--repeats", repeats)->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    if (quick)
        repeats = 1;

    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    std::printf("threads: %d\n", parallel_threads());
    const Partition lambda = quick ? Partition::from_parts({3, 2, 1}) : Partition::from_parts({4, 3, 2, 1});
    const auto basis = schubert_basis(lambda);
    const PolyMatrix m = wronski_matrix(basis.polys);
    const MPoly reference = determinant(m, Execution::serial);
    bool ok = compare(("wronskian " + to_string(lambda)).c_str(), repeats,
                      [&](Execution e) { return determinant(m, e) == reference; });

    const Partition mu = quick ? Partition::from_parts({3, 2, 1}) : Partition::from_parts({4, 2, 1});
    const auto p = direct_presentation(mu);
    const auto series = hilbert_series_formula(mu);
    ok &= compare(("graded dimensions " + to_string(mu)).c_str(), repeats, [&](Execution e) {
        return graded_dimensions_from_presentation(p, default_max_degree(mu), e) == series;
    });

    const int n = quick ? 3 : 4;
    const Integer expected = centre_dimension(n, 2, Execution::serial);
    ok &= compare(("centre n=" + std::to_string(n) + " l=2").c_str(), repeats,
                  [&](Execution e) { return centre_presentation(n, 2, true, e).total_dimension == expected; });
    return ok ? 0 : 1;
}
