// Compares the serial reference enumeration against the OpenMP kernel on
// the matrices the acceptance suite leans on, and checks they agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hforge/invariants.hpp"

using namespace hforge;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench(const std::string& label, const Chm& h, int d) {
    auto t0 = Clock::now();
    MinorSpectrum serial = minor_spectrum_serial(h, d);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    MinorSpectrum parallel = minor_spectrum(h, d);
    double tp = seconds_since(t0);

    std::printf("%-24s d=%d  minors=%-10llu serial=%8.3fs  parallel(%d)=%8.3fs  speedup=%.2fx  %s\n",
                label.c_str(), d,
                static_cast<unsigned long long>(serial.total_multiplicity()), ts,
                omp_get_max_threads(), tp, ts / tp,
                serial == parallel ? "agree" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) omp_set_num_threads(std::stoi(argv[1]));
    std::printf("minor enumeration: serial reference vs OpenMP kernel (%d threads)\n",
                omp_get_max_threads());

    bench("P7 (exact, Q(i sqrt 3))", fixture("P7"), 3);
    bench("U15 (exact, Q(i sqrt 15))", fixture("U15"), 3);
    bench("H12 as CHM (rational)", chm_from_real(stored_real_hadamard(12)), 5);
    bench("H12 as CHM (rational)", chm_from_real(stored_real_hadamard(12)), 7);
    bench("F13 (float)", fourier(13), 5);
    return 0;
}
