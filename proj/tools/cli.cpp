#include "cli.hpp"

#include <CLI11.hpp>
#include <regex>
#include <sstream>

#include "cpm/cpm_groups.hpp"
#include "cpm/fermat.hpp"
#include "cpm/hyperelliptic.hpp"
#include "cpm/lines.hpp"
#include "cpm/resolution.hpp"
#include "cpm/theta.hpp"

namespace cpm {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kMaxAllN = 6;
const char* kDefaultTau = "0.2+0.9i";

struct Options {
    int N = 2;
    int samples = 100;
    uint64_t seed = 0;
    std::optional<double> tol;
    bool timings = false;
    std::string type = "A";
    std::string tau = kDefaultTau;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ojson orbit_json(const CpmGroupBundle& b) {
    LineSet ls(b.N);
    ojson arr = ojson::array();
    for (auto& o : line_orbits(b, ls)) {
        ojson members = ojson::array();
        for (int k : o.members) members.push_back(ls.lines()[k].str());
        arr.push_back({{"family", to_string(o.family)},
                       {"size", o.members.size()},
                       {"kind", o.horizontal ? "horizontal" : "fiber " + degenerate_fiber(o.fiber).label},
                       {"lines", members}});
    }
    return arr;
}

ojson resolution_json(SingKind kind, int N) {
    ResolutionData r = resolve({kind, N});
    ojson curves = ojson::array(), charts = ojson::array();
    for (size_t j = 0; j < r.self_intersection.size(); ++j)
        curves.push_back({{"curve", "E_" + std::to_string(j + 1)}, {"self_intersection", r.self_intersection[j]}});
    for (auto& c : r.charts) charts.push_back({{"u", c[0]}, {"v", c[1]}});
    auto [m1, m2] = divisor_multiplicities({kind, N});
    ojson out{{"type", to_string(kind)}, {"curves", curves}, {"charts", charts},
              {"multiplicities",
               {{"z1^N", {{"E", m1.E}, {"D_0", m1.D0}, {"D_N", m1.DN}}},
                {"z2^N", {{"E", m2.E}, {"D_0", m2.D0}, {"D_N", m2.DN}}}}}};
    if (kind == SingKind::A) {
        ChiAnalysis chi = chi_analysis(N);
        ojson img = ojson::array();
        for (auto& c : chi.curves) {
            ojson e{{"curve", c.curve}, {"image", to_string(c.image)}};
            if (c.image == ChiImage::cover) e["degree"] = c.degree;
            img.push_back(e);
        }
        out["chi"] = {{"curves", img}};
        if (chi.fundamental_point) {
            out["chi"]["fundamental_point"] = "o_" + std::to_string(*chi.fundamental_point);
            out["chi"]["blowup_degree"] = chi.blowup_degree;
        }
    }
    return out;
}

cplx tau_of(const Options& o) {
    auto t = parse_complex(o.tau);
    if (!t) throw UsageError("--tau: expected a complex number like 0.2+0.9i, got '" + o.tau + "'");
    if (t->imag() < kMinImTau) throw UsageError("--tau: imaginary part must be at least " + std::to_string(kMinImTau));
    return *t;
}

std::vector<VerificationReport> theta_reports(const Options& o) {
    return {verify_theta(tau_of(o), std::min(o.samples, 20), o.seed)};
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& s) {
    static const std::regex re(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
    static const std::regex pure_imag(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
    std::smatch m;
    if (std::regex_match(s, m, pure_imag)) {
        double im = m[1].matched ? std::stod(m[1]) : 1.0;
        return cplx(0, im);
    }
    if (!std::regex_match(s, m, re) || (!m[1].matched && !m[2].matched)) return std::nullopt;
    double re_part = m[1].matched ? std::stod(m[1]) : 0.0;
    double im = 0;
    if (m[2].matched) im = (m[2] == "-" ? -1.0 : 1.0) * (m[3].matched ? std::stod(m[3]) : 1.0);
    return cplx(re_part, im);
}

ojson report_json(const std::string& suite, int N, const std::vector<VerificationReport>& reports, bool timings) {
    ojson checks = ojson::array();
    bool ok = true;
    for (auto& r : reports) {
        ok = ok && r.ok();
        for (auto& c : r.checks)
            checks.push_back({{"check", r.suite + ": " + c.name},
                              {"status", to_string(c.status)},
                              {"anchor", c.anchor},
                              {"witness", c.witness},
                              {"elapsed_ms", timings ? c.elapsed_ms : 0.0}});
    }
    return {{"version", kToolVersion}, {"N", N}, {"suite", suite}, {"checks", checks}, {"overall", ok ? "pass" : "fail"}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_tol) {
    CLI::App app{"Verification suites for the chiral Potts symmetry groups and rapidity surfaces", "cpm"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool samples) {
        c->add_option("--N", o.N, "Number of Potts states")->check(CLI::Range(2, 64));
        if (samples) {
            c->add_option("--samples", o.samples, "Random samples per check")->check(CLI::PositiveNumber);
            c->add_option("--seed", o.seed, "Random seed");
        }
        c->add_option("--tol", o.tol, "Numeric tolerance (overrides CPM_TOL)")->check(CLI::PositiveNumber);
        c->add_flag("--timings", o.timings, "Report elapsed_ms per check");
    };
    auto* group = app.add_subcommand("group", "Group constructions")->require_subcommand(1);
    auto* group_verify = group->add_subcommand("verify", "All group-theoretic suites");
    auto* group_order = group->add_subcommand("order", "Orders of G_N and its modular extension");
    auto* fibration = app.add_subcommand("fibration", "Fermat surface fibration")->require_subcommand(1);
    auto* fib_verify = fibration->add_subcommand("verify", "Fibration, base group and fixed points");
    auto* lines = app.add_subcommand("lines", "Lines on the Fermat surface")->require_subcommand(1);
    auto* lines_orbits = lines->add_subcommand("orbits", "Line orbits, covers and intersections");
    auto* quotient = app.add_subcommand("quotient", "Hyperelliptic quotients")->require_subcommand(1);
    auto* quot_verify = quotient->add_subcommand("verify", "Quotient maps, symmetries and singularities");
    auto* resolve_cmd = app.add_subcommand("resolve", "Resolution data of the quotient singularities");
    auto* theta = app.add_subcommand("theta", "N = 2 theta uniformization")->require_subcommand(1);
    auto* theta_verify = theta->add_subcommand("verify", "Theta laws, identities and correspondence");
    auto* all = app.add_subcommand("all", "Every suite");
    for (auto* c : {group_verify, group_order, lines_orbits}) common(c, false);
    for (auto* c : {fib_verify, quot_verify, all}) common(c, true);
    common(resolve_cmd, false);
    resolve_cmd->add_option("--type", o.type, "Singularity type")->check(CLI::IsMember({"diag", "A"}));
    theta_verify->add_option("--tau", o.tau, "Modular parameter, e.g. 0.2+0.9i");
    theta_verify->add_option("--samples", o.samples, "Random samples")->check(CLI::PositiveNumber);
    theta_verify->add_option("--seed", o.seed, "Random seed");
    theta_verify->add_option("--tol", o.tol, "Numeric tolerance (overrides CPM_TOL)")->check(CLI::PositiveNumber);
    theta_verify->add_flag("--timings", o.timings, "Report elapsed_ms per check");
    all->add_option("--tau", o.tau, "Modular parameter for the N = 2 theta suite");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    double tol = 1e-9;
    if (env_tol) {
        try {
            size_t pos = 0;
            tol = std::stod(*env_tol, &pos);
            if (pos != env_tol->size() || !(tol > 0)) throw std::invalid_argument("bad");
        } catch (const std::exception&) {
            err << "CPM_TOL: expected a positive number, got '" << *env_tol << "'\n";
            return 2;
        }
    }
    if (o.tol) tol = *o.tol;
    ScopedTolerance scoped(tol);

    std::string suite;
    ojson extra;
    std::vector<VerificationReport> reps;
    try {
        if (*group_verify) {
            suite = "group verify";
            reps.push_back(verify_all_groups(build(o.N)));
        } else if (*group_order) {
            suite = "group order";
            CpmGroupBundle b = build(o.N);
            long long n3 = 1LL * o.N * o.N * o.N;
            VerificationReport r{"orders", o.N, {}};
            r.add("|G_N| = 4N^3", b.GN.size() == static_cast<size_t>(4 * n3), "order of G_N", std::to_string(b.GN.size()));
            r.add("|G~_N| = 96N^3", b.Gt.size() == static_cast<size_t>(96 * n3), "order of the modular extension",
                  std::to_string(b.Gt.size()));
            reps.push_back(r);
            extra = {{"G_N", b.GN.size()}, {"G_tilde_N", b.Gt.size()}};
        } else if (*fib_verify) {
            suite = "fibration verify";
            CpmGroupBundle b = build(o.N);
            reps.push_back(verify_fibration(b, o.samples, o.seed));
            reps.push_back(fixed_point_check(b, std::min(o.samples, 50), o.seed + 1));
        } else if (*lines_orbits) {
            suite = "lines orbits";
            CpmGroupBundle b = build(o.N);
            reps.push_back(verify_lines(b, o.seed));
            extra = {{"orbits", orbit_json(b)}};
        } else if (*quot_verify) {
            suite = "quotient verify";
            CpmGroupBundle b = build(o.N);
            reps.push_back(verify_quotients(b, o.samples, o.seed));
            reps.push_back(classify_orbifold(b));
        } else if (*resolve_cmd) {
            suite = "resolve";
            reps.push_back(verify_resolution(o.N));
            extra = resolution_json(o.type == "diag" ? SingKind::diag : SingKind::A, o.N);
        } else if (*theta_verify) {
            suite = "theta verify";
            o.N = 2;
            reps = theta_reports(o);
        } else if (*all) {
            suite = "all";
            if (o.N > kMaxAllN)
                throw UsageError("all: N = " + std::to_string(o.N) + " is beyond desk scale; use N <= " +
                                 std::to_string(kMaxAllN));
            CpmGroupBundle b = build(o.N);
            reps.push_back(verify_all_groups(b));
            reps.push_back(verify_fibration(b, o.samples, o.seed));
            reps.push_back(fixed_point_check(b, std::min(o.samples, 50), o.seed + 1));
            reps.push_back(verify_lines(b, o.seed + 2));
            reps.push_back(verify_quotients(b, o.samples, o.seed + 3));
            reps.push_back(classify_orbifold(b));
            reps.push_back(verify_resolution(o.N));
            if (o.N == 2) {
                for (auto& r : theta_reports(o)) reps.push_back(r);
            } else {
                VerificationReport r{"theta", o.N, {}};
                r.skip("theta suite", "theta uniformization of the N = 2 fibers", "only defined for N = 2");
                reps.push_back(r);
            }
        }
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    }

    ojson j = report_json(suite, o.N, reps, o.timings);
    if (!extra.is_null()) j["result"] = extra;
    out << j.dump(2) << "\n";
    size_t pass = 0, fail = 0, skip = 0;
    for (auto& r : reps) pass += r.count(Status::pass), fail += r.count(Status::fail), skip += r.count(Status::skipped);
    err << suite << " (N=" << o.N << "): " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return fail == 0 ? 0 : 1;
}

}  // namespace cpm
