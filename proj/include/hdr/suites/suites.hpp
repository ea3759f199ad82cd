#pragma once

// Seeded invariant suites, shared by the acceptance binary and `hdrtool selftest`.
// Reports contain no timings so that equal seeds give equal output.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hdr/higgs/log_higgs.hpp"

namespace hdr::suites {

struct SuiteReport {
    int id = 0;
    std::string name;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> facts;  // ordered key/value pairs
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what);
    void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
    void fact(const std::string& key, long long value) { facts.emplace_back(key, std::to_string(value)); }
};

struct Context {
    std::uint64_t seed = 42;
    std::size_t enum_guard = higgs::kDefaultEnumGuard;
    std::size_t iter_guard = 50;
    // degree-zero Higgs bundles certified semistable by earlier suites
    std::vector<higgs::LogHiggsBundle> hig0;
    std::vector<std::string> hig0_origin;
};

SuiteReport discriminant_suite(Context& ctx);
SuiteReport monodromy_suite(Context& ctx);
SuiteReport birkhoff_suite(Context& ctx);
SuiteReport cartier_suite(Context& ctx);
SuiteReport functoriality_suite(Context& ctx);
SuiteReport nearby_suite(Context& ctx);
SuiteReport flow_suite(Context& ctx);
SuiteReport semipositivity_suite(Context& ctx);  // reads ctx.hig0

struct SuiteEntry {
    int id;
    std::string name;
    std::function<SuiteReport(Context&)> run;
};
// in order 1..8; suite 8 relies on 4 and 7 having run first
const std::vector<SuiteEntry>& all_suites();

std::vector<SuiteReport> run_all(Context& ctx);

}  // namespace hdr::suites
