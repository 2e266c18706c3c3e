#include <cstdio>
#include <string>
#include <vector>

#include <towerlab/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    towerlab::RunReport report = towerlab::dispatch(args);
    if (!report.out.empty()) std::fputs(report.out.c_str(), stdout);
    for (const auto& w : report.warnings) std::fprintf(stderr, "%s\n", w.c_str());
    return report.exit_code;
}
