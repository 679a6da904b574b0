// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "cpm/cpm_groups.hpp"
#include "cpm/fermat.hpp"
#include "cpm/hyperelliptic.hpp"
#include "cpm/lines.hpp"
#include "cpm/resolution.hpp"
#include "cpm/theta.hpp"

using namespace cpm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void take(const VerificationReport& r, int N) {
        for (auto& c : r.checks)
            if (c.status == Status::fail) {
                ok = false;
                if (detail.size() < 400) detail += " [N=" + std::to_string(N) + "] " + c.name + ": " + c.witness;
            }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += " " + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    Stopwatch sw;
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string(" exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << sw.ms() / 1000.0
              << " s)" << o.detail << "\n";
}

const uint64_t kSeed = 20261015;

}  // namespace

int main() {
    criterion(1, "group orders 4N^3 and 96N^3 for N = 2..5 within 60 s", [] {
        Outcome o;
        Stopwatch sw;
        for (int N = 2; N <= 5; ++N) {
            auto b = build(N);
            o.require(b.GN.size() == static_cast<size_t>(4 * N * N * N), "|G_N| wrong at N=" + std::to_string(N));
            o.require(b.Gt.size() == static_cast<size_t>(96 * N * N * N),
                      "|G~_N| wrong at N=" + std::to_string(N));
        }
        o.require(sw.ms() < 60000, "took longer than 60 s");
        return o;
    });

    criterion(2, "presentations and conjugation tables for N = 2..5", [] {
        Outcome o;
        for (int N = 2; N <= 5; ++N) {
            auto b = build(N);
            o.take(verify_presentations(b), N);
            o.take(verify_conjugation_tables(b), N);
        }
        return o;
    });

    criterion(3, "structure, subgroup lattice and dihedral quotient for N = 2..5", [] {
        Outcome o;
        for (int N = 2; N <= 5; ++N) {
            auto b = build(N);
            o.take(verify_structure(b), N);
            o.take(verify_subgroup_lattice(b), N);
            o.take(verify_dihedral(b), N);
        }
        return o;
    });

    criterion(4, "fibration: 1000 points per N = 2..4 on surface and fiber, equivariant", [] {
        Outcome o;
        for (int N = 2; N <= 4; ++N) {
            auto b = build(N);
            o.take(verify_fibration(b, 1000, kSeed), N);
            o.take(fixed_point_check(b, 50, kSeed), N);
        }
        return o;
    });

    criterion(5, "12N^2 lines, orbit decomposition and covers for N = 2..4", [] {
        Outcome o;
        for (int N = 2; N <= 4; ++N) o.take(verify_lines(build(N), kSeed), N);
        return o;
    });

    criterion(6, "hyperelliptic quotients for N = 2..6", [] {
        Outcome o;
        for (int N = 2; N <= 6; ++N) o.take(verify_quotients(build(N), std::max(4 * N, 24), kSeed), N);
        return o;
    });

    criterion(7, "resolution of the cyclic quotient points for N = 2..12", [] {
        Outcome o;
        for (int N = 2; N <= 12; ++N) o.take(verify_resolution(N), N);
        for (int N = 2; N <= 5; ++N) o.take(classify_orbifold(build(N)), N);
        return o;
    });

    criterion(8, "theta transformation laws, identities and N = 2 uniformization", [] {
        Outcome o;
        o.take(verify_theta(cplx(0.2, 0.9), 20, kSeed), 2);
        o.take(verify_theta(cplx(-0.35, 1.4), 20, kSeed + 1), 2);
        return o;
    });

    criterion(9, "CLI reports are byte-identical for equal seeds", [] {
        Outcome o;
        for (int N : {2, 3}) {
            std::vector<std::string> args = {"all", "--N", std::to_string(N), "--seed", "7", "--samples", "30"};
            std::ostringstream o1, o2, e1, e2;
            int c1 = run_cli(args, o1, e1), c2 = run_cli(args, o2, e2);
            o.require(c1 == 0 && c2 == 0, "nonzero exit at N=" + std::to_string(N));
            o.require(o1.str() == o2.str() && !o1.str().empty(), "outputs differ at N=" + std::to_string(N));
        }
        return o;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}
