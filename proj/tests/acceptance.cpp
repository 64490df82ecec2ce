#include <chrono>
#include <cstdio>

#include "qres/selfcheck.hpp"

using namespace qres::selfcheck;

int main(int argc, char** argv)
{
    const Scale scale = argc > 1 ? parse_scale(argv[1]) : Scale::Full;
    int failed = 0;
    for (const auto& suite : acceptance_suites()) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r = suite.run(scale, 1000 + suite.id);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s  [%zu instances, %zu failures, %.1fs] %s\n", r.id,
                    r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.instances, r.failures, secs, r.note.c_str());
        std::fflush(stdout);
        failed += !r.passed();
    }
    return failed ? 1 : 0;
}
