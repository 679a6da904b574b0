#include "cpm/report.hpp"

#include <algorithm>
#include <cstdio>

namespace cpm {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "fail";
}

bool VerificationReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

size_t VerificationReport::count(Status s) const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void VerificationReport::add(std::string name, bool passed, std::string anchor, std::string witness,
                             double elapsed_ms) {
    checks.push_back({std::move(name), passed ? Status::pass : Status::fail, std::move(anchor), std::move(witness),
                      elapsed_ms});
}

void VerificationReport::skip(std::string name, std::string anchor, std::string reason) {
    checks.push_back({std::move(name), Status::skipped, std::move(anchor), std::move(reason), 0});
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* VerificationReport::find(const std::string& name) const {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {
thread_local double g_check_tol = 1e-9;
}

double check_tol() { return g_check_tol; }

ScopedTolerance::ScopedTolerance(double tol) : prev_(g_check_tol) { g_check_tol = tol; }
ScopedTolerance::~ScopedTolerance() { g_check_tol = prev_; }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace cpm
