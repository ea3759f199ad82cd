// One line per acceptance criterion; exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "hdr/suites/suites.hpp"

namespace {

using hdr::suites::SuiteReport;

std::string render(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.id << " " << r.name << " " << (r.passed ? "pass" : "FAIL") << "\n";
        for (const auto& [k, v] : r.facts) out << "  " << k << ": " << v << "\n";
        for (const auto& f : r.failures) out << "  failure: " << f << "\n";
    }
    return out.str();
}

}  // namespace

int main() {
    // criterion -> time limit in seconds; 8 shares the budget of 4 and 7
    const double limits[] = {0, 10, 30, 60, 120, 30, 60, 300, 420};
    hdr::suites::Context ctx;
    ctx.seed = 42;
    bool all = true;
    std::vector<SuiteReport> reports;
    for (const auto& s : hdr::suites::all_suites()) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteReport r;
        try {
            r = s.run(ctx);
        } catch (const std::exception& e) {
            r = SuiteReport{s.id, s.name, true, {}, {}};
            r.check(false, std::string("aborted: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < limits[s.id];
        bool ok = r.passed && in_time;
        all = all && ok;
        std::printf("criterion %d %-15s %s  (%.2fs, limit %.0fs)\n", s.id, s.name.c_str(), ok ? "PASS" : "FAIL", secs,
                    limits[s.id]);
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        if (!in_time) std::printf("    over the time limit\n");
        reports.push_back(std::move(r));
    }

    auto t0 = std::chrono::steady_clock::now();
    hdr::suites::Context a, b;
    a.seed = b.seed = 42;
    std::string ra = render(hdr::suites::run_all(a)), rb = render(hdr::suites::run_all(b));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool same = ra == rb;
    all = all && same;
    std::printf("criterion 9 %-15s %s  (%.2fs, %zu bytes each)\n", "determinism", same ? "PASS" : "FAIL", secs, ra.size());
    return all ? 0 : 1;
}
