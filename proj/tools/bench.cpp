// Compares the serial reference kernels against the parallel ones and checks
// that both produce identical output.

#include <chrono>
#include <cstdio>

#include "CLI11.hpp"
#include "ribbon/complexes.hpp"

using namespace ribbon;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

template <typename F>
std::pair<double, std::vector<graph>> timed(F&& f) {
    auto t0 = clk::now();
    auto result = f();
    return {ms_since(t0), std::move(result)};
}

bool same(const std::vector<graph>& a, const std::vector<graph>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel benchmark"};
    int edges = 5, jobs = 0, genus = 2, punctures = 1, max_degree = 2;
    app.add_option("--edges", edges, "rose census size");
    app.add_option("--jobs", jobs, "parallel worker count (0 = all cores)");
    app.add_option("--genus", genus, "closure benchmark genus");
    app.add_option("--punctures", punctures, "closure benchmark punctures");
    app.add_option("--max-degree", max_degree, "closure degree bound");
    CLI11_PARSE(app, argc, argv);

    std::printf("%-28s %12s %12s %9s %6s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "equal");
    try {
        auto [ts, census_s] = timed([&] { return rose_census(edges); });
        auto [tp, census_p] = timed([&] { return rose_census_parallel(edges, jobs); });
        std::printf("%-28s %12.1f %12.1f %8.2fx %6s\n",
                    ("rose census n=" + std::to_string(edges)).c_str(), ts, tp, ts / tp,
                    same(census_s, census_p) ? "yes" : "NO");

        surface type{genus, punctures};
        auto seeds = roses_of_type(type);
        auto [cs, closure_s] = timed([&] { return closure_serial(seeds, max_degree); });
        auto [cp, closure_p] = timed([&] { return closure_parallel(seeds, max_degree, jobs); });
        std::printf("%-28s %12.1f %12.1f %8.2fx %6s\n",
                    ("closure (" + std::to_string(genus) + "," + std::to_string(punctures) +
                     ") k=" + std::to_string(max_degree))
                        .c_str(),
                    cs, cp, cs / cp, same(closure_s, closure_p) ? "yes" : "NO");
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
