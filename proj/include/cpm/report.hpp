#pragma once
#include <chrono>
#include <string>
#include <vector>

namespace cpm {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string anchor;
    std::string witness;
    double elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    int N = 0;
    std::vector<Check> checks;

    // overall pass iff every non-skipped check passes
    bool ok() const;
    size_t count(Status s) const;
    void add(std::string name, bool passed, std::string anchor, std::string witness = "", double elapsed_ms = 0);
    void skip(std::string name, std::string anchor, std::string reason);
    void append(const VerificationReport& other);
    const Check* find(const std::string& name) const;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// Threshold for numeric pass/fail decisions in verification suites: 1e-9 unless a
// ScopedTolerance is active on the calling thread.
double check_tol();

class ScopedTolerance {
public:
    explicit ScopedTolerance(double tol);
    ~ScopedTolerance();
    ScopedTolerance(const ScopedTolerance&) = delete;
    ScopedTolerance& operator=(const ScopedTolerance&) = delete;

private:
    double prev_;
};

// Short scientific rendering used in witnesses.
std::string sci(double x);

}  // namespace cpm
