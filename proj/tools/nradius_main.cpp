// nradius: numerical-radius toolkit command line.
//
// Subcommands: compute, bound, verify, lemmas, repro, list-bounds, list-lemmas.
// Exit codes: 0 ok, 1 check failure or violation, 2 usage error, 3 data error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nradius/apps.hpp"
#include "nradius/catalog.hpp"
#include "nradius/lemmas.hpp"
#include "nradius/matfun.hpp"
#include "nradius/matrix_io.hpp"
#include "nradius/numrad.hpp"
#include "nradius/rng.hpp"
#include "nradius/verify.hpp"

namespace {

using namespace nradius;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct ParamFlags {
    std::string alpha;
    double beta = -1, mu = -1, lambda = -1, r = -1, s = -1, p = -1;
    int n = -1;
    bool beta_set = false, mu_set = false, lambda_set = false, r_set = false, s_set = false,
         p_set = false, n_set = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    cmd->add_option("--alpha", f.alpha, "complex alpha as RE or RE,IM");
    cmd->add_option("--beta", f.beta, "beta >= 0")->each([&](const std::string&) { f.beta_set = true; });
    cmd->add_option("--mu", f.mu, "mu in [0,1]")->each([&](const std::string&) { f.mu_set = true; });
    cmd->add_option("--lambda", f.lambda, "lambda in [0,1]")->each([&](const std::string&) { f.lambda_set = true; });
    cmd->add_option("--r", f.r, "r >= 1")->each([&](const std::string&) { f.r_set = true; });
    cmd->add_option("--s", f.s, "s >= 1")->each([&](const std::string&) { f.s_set = true; });
    cmd->add_option("--n", f.n, "integer n")->each([&](const std::string&) { f.n_set = true; });
    cmd->add_option("--p", f.p, "p > 1; q is derived from 1/p + 1/q = 1")
        ->each([&](const std::string&) { f.p_set = true; });
}

BoundParams to_params(const ParamFlags& f) {
    BoundParams p;
    if (!f.alpha.empty()) {
        double re = 0, im = 0;
        const auto comma = f.alpha.find(',');
        try {
            if (comma == std::string::npos) {
                re = std::stod(f.alpha);
            } else {
                re = std::stod(f.alpha.substr(0, comma));
                im = std::stod(f.alpha.substr(comma + 1));
            }
        } catch (const std::exception&) {
            throw ParamOutOfDomainError("--alpha expects RE or RE,IM");
        }
        p.alpha = Complex(re, im);
    }
    if (f.beta_set) p.beta = f.beta;
    if (f.mu_set) p.mu = f.mu;
    if (f.lambda_set) p.lambda_exp = f.lambda;
    if (f.r_set) p.r = f.r;
    if (f.s_set) p.s = f.s;
    if (f.n_set) p.n = f.n;
    if (f.p_set) {
        if (f.p <= 1.0) throw ParamOutOfDomainError("--p must exceed 1");
        p.p = f.p;
        p.q = f.p / (f.p - 1.0);
    }
    return p;
}

BoundInput input_from_files(const BoundDescriptor& d, const std::vector<std::string>& files) {
    std::vector<ComplexMatrix> mats;
    mats.reserve(files.size());
    for (const auto& f : files) mats.push_back(read_matrix_auto(f));
    auto need = [&](std::size_t k) {
        if (mats.size() != k)
            throw ShapeMismatchError(d.id + ": expected " + std::to_string(k) +
                                     " --in files, got " + std::to_string(mats.size()));
    };
    switch (d.input_shape) {
        case InputShape::Single:
            need(1);
            return BoundInput::single(mats[0]);
        case InputShape::Pair:
            need(2);
            return BoundInput::pair(mats[0], mats[1]);
        case InputShape::Blocks2x2:
            need(4);
            return BoundInput::blocks2x2(mats[0], mats[1], mats[2], mats[3]);
        case InputShape::BlocksNxN:
            return BoundInput::blocks_nxn(std::move(mats));
        case InputShape::SingleRow:
            if (mats.empty()) throw ShapeMismatchError(d.id + ": needs at least one --in file");
            return BoundInput::single_row(std::move(mats));
        case InputShape::TripleAXB:
            need(3);
            return BoundInput::triple(mats[0], mats[1], mats[2]);
        case InputShape::TripleList:
            if (mats.empty() || mats.size() % 3 != 0)
                throw ShapeMismatchError(d.id + ": needs 3k --in files");
            return BoundInput::triple_list(std::move(mats));
    }
    throw ShapeMismatchError("unknown input shape");
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

int run_compute(const std::string& path, const std::string& what, double rtol) {
    const ComplexMatrix m = read_matrix_auto(path);
    if (what == "omega") {
        std::cout << format_g12(numerical_radius(m, rtol).value) << "\n";
    } else if (what == "norm") {
        std::cout << format_g12(op_norm(m)) << "\n";
    } else if (what == "specrad") {
        std::cout << format_g12(spectral_radius(m)) << "\n";
    } else if (what == "abs") {
        std::cout << matrix_to_json(matrix_abs(m)) << "\n";
    } else {
        std::cerr << "unknown --what value: " << what << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_bound(const std::string& id, const std::vector<std::string>& files, const ParamFlags& pf,
              bool check) {
    const BoundDescriptor& d = find_bound(id);
    const BoundParams params = to_params(pf);
    const BoundInput input = input_from_files(d, files);
    if (!check) {
        std::cout << format_g12(evaluate_bound(id, input, params)) << "\n";
        return kExitOk;
    }
    const CheckResult res = check_bound(id, input, params);
    std::cout << "bound " << format_g12(res.bound) << "\n";
    std::cout << "omega_power " << format_g12(res.omega_power) << "\n";
    std::cout << "slack " << format_g12(res.slack) << "\n";
    std::cout << "holds " << (res.holds ? "true" : "false") << "\n";
    return res.holds ? kExitOk : kExitCheckFailure;
}

int run_verify(const std::string& bounds_csv, const std::string& ensemble, int dim, int count,
               std::uint64_t seed, const std::string& grid_name, const std::string& out,
               const std::string& format) {
    std::vector<std::string> ids;
    if (bounds_csv == "all") {
        for (const auto& d : list_bounds()) ids.push_back(d.id);
    } else {
        ids = split_ids(bounds_csv);
        for (const auto& id : ids) find_bound(id);  // validate early
    }
    EnsembleSpec spec;
    spec.kind = ensemble_kind_from_name(ensemble);
    spec.dim = dim;
    spec.count = count;
    spec.seed = seed;
    ParamGrid grid;
    if (grid_name == "default")
        grid = default_param_grid();
    else if (grid_name == "quick")
        grid = quick_param_grid();
    else {
        std::cerr << "unknown --grid preset: " << grid_name << "\n";
        return kExitUsage;
    }
    const VerificationReport report = run_trials(ids, spec, grid, count);
    const ReportFormat fmt = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    emit_report(report, fmt, out);
    std::cout << "trials " << report.records.size() << " violations " << report.summary.violations
              << " errors " << report.summary.errors << "\n";
    if (report.summary.violations > 0) {
        for (const auto& rec : report.records) {
            if (rec.error || rec.holds) continue;
            std::cerr << "violation: bound=" << rec.bound_id << " trial=" << rec.trial
                      << " dim=" << rec.dim << " seed=" << spec.seed
                      << " ensemble=" << ensemble_kind_name(spec.kind)
                      << " omega_power=" << format_g17(rec.omega_power)
                      << " bound=" << format_g17(rec.bound) << "\n";
        }
        return kExitCheckFailure;
    }
    return kExitOk;
}

int run_lemmas(const std::string& id, int trials, std::uint64_t seed) {
    std::vector<std::string> ids;
    if (id == "all") {
        for (const auto& d : list_lemmas()) ids.push_back(d.id);
    } else {
        find_lemma(id);
        ids.push_back(id);
    }
    const std::vector<Complex> alphas = {Complex(2, 0),  Complex(3, 0),     Complex(0.5, 0),
                                         Complex(1, 1),  Complex(-1, 0),    Complex(1e-3, 1e-3)};
    const std::vector<double> betas = {0, 0.5, 1, 5};
    const std::vector<double> rs = {1, 1.5, 2};
    const std::vector<int> ns = {1, 2, 3};
    const std::vector<double> mus = {0, 0.25, 0.5, 1};
    long total_violations = 0;
    for (const auto& lid : ids) {
        const LemmaDescriptor& d = find_lemma(lid);
        GaussianStream g(mix64(seed ^ fnv1a(lid)));
        long violations = 0;
        for (int t = 0; t < trials; ++t) {
            const int dim = 2 + t % 7;
            std::vector<ComplexVector> vecs;
            for (int k = 0; k < d.arity; ++k) {
                ComplexVector v(dim);
                for (int i = 0; i < dim; ++i) {
                    const double re = g.next();
                    const double im = g.next();
                    v[i] = Complex(re, im);
                }
                vecs.push_back(std::move(v));
            }
            BoundParams p;
            if (d.needs_alpha) p.alpha = alphas[t % alphas.size()];
            if (d.needs_beta) p.beta = betas[t % betas.size()];
            if (d.needs_r) p.r = rs[t % rs.size()];
            if (d.needs_n) p.n = ns[t % ns.size()];
            if (d.needs_mu) p.mu = mus[t % mus.size()];
            const LemmaCheck chk = evaluate_lemma(lid, vecs, p);
            if (!chk.holds) ++violations;
        }
        std::cout << lid << " trials " << trials << " violations " << violations << "\n";
        total_violations += violations;
    }
    return total_violations == 0 ? kExitOk : kExitCheckFailure;
}

int run_repro(const std::string& which) {
    std::vector<CheckLine> lines;
    const bool single = which != "all";
    if (which == "quantum")
        lines = run_scenario(build_quantum());
    else if (which == "volterra")
        lines = run_scenario(build_volterra());
    else if (which == "fractional")
        lines = run_scenario(build_fractional());
    else if (which == "fpde")
        lines = run_scenario(build_fpde());
    else if (which == "example")
        lines = run_scenario(build_example());
    else if (which == "all")
        lines = repro_all();
    else {
        std::cerr << "unknown scenario: " << which << "\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const auto& l : lines) {
        if (!single) std::cout << l.scenario << " ";
        std::cout << l.name << " " << format_f12(l.measured) << " expected "
                  << format_g12(l.expected) << " " << (l.pass ? "PASS" : "FAIL");
        if (!l.note.empty()) std::cout << " (" << l.note << ")";
        std::cout << "\n";
        all_pass = all_pass && l.pass;
    }
    return all_pass ? kExitOk : kExitCheckFailure;
}

int run_list_bounds() {
    for (const auto& d : list_bounds()) {
        const char* shape = "";
        switch (d.input_shape) {
            case InputShape::Single: shape = "single"; break;
            case InputShape::Pair: shape = "pair"; break;
            case InputShape::Blocks2x2: shape = "blocks2x2"; break;
            case InputShape::BlocksNxN: shape = "blocksNxN"; break;
            case InputShape::SingleRow: shape = "single_row"; break;
            case InputShape::TripleAXB: shape = "triple_AXB"; break;
            case InputShape::TripleList: shape = "triple_list"; break;
        }
        std::cout << d.id << "\n  shape: " << shape
                  << "\n  controls: omega^" << omega_exponent_doc(d.id)
                  << (d.side == BoundSide::LowerOnOmegaPower ? " (lower bound)" : "")
                  << (d.lhs_kind == LhsKind::OperatorNorm
                          ? " [operator norm]"
                          : d.lhs_kind == LhsKind::SpectralRadius ? " [spectral radius]" : "")
                  << "\n  params: " << d.param_domain.describe() << "\n  input: " << d.input_doc
                  << "\n  citation: " << d.citation << "\n";
    }
    std::cout << "total " << list_bounds().size() << " bounds\n";
    return kExitOk;
}

int run_list_lemmas() {
    for (const auto& d : list_lemmas()) {
        std::cout << d.id << "\n  arity: " << d.arity << "\n  params:";
        bool any = false;
        if (d.needs_alpha) { std::cout << " alpha"; any = true; }
        if (d.needs_beta) { std::cout << " beta"; any = true; }
        if (d.needs_r) { std::cout << " r"; any = true; }
        if (d.needs_n) { std::cout << " n(min " << d.min_n << ")"; any = true; }
        if (d.needs_mu) { std::cout << " mu"; any = true; }
        if (!any) std::cout << " none";
        std::cout << "\n  statement: " << d.statement << "\n";
    }
    std::cout << "total " << list_lemmas().size() << " lemmas\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical-radius toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute omega / norm / spectral radius / abs");
    std::string compute_in, compute_what = "omega";
    double compute_rtol = 1e-10;
    compute->add_option("--in", compute_in, "matrix file")->required();
    compute->add_option("--what", compute_what, "omega|norm|specrad|abs");
    compute->add_option("--rtol", compute_rtol, "sweep refinement tolerance");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate a catalog bound");
    std::string bound_id;
    std::vector<std::string> bound_in;
    bool bound_check = false;
    ParamFlags bound_params;
    bound->add_option("--id", bound_id, "bound id (see list-bounds)")->required();
    bound->add_option("--in", bound_in, "operand matrix files, positional per the bound's shape")
        ->required();
    bound->add_flag("--check", bound_check, "also compute omega^k and the holds flag");
    add_param_flags(bound, bound_params);

    // verify
    auto* verify = app.add_subcommand("verify", "randomized soundness sweep");
    std::string verify_bounds = "all", verify_ensemble, verify_grid = "default",
                verify_out, verify_format = "json";
    int verify_dim = 4, verify_count = 100;
    std::uint64_t verify_seed = 0;
    verify->add_option("--bounds", verify_bounds, "comma-separated ids or 'all'");
    verify->add_option("--ensemble", verify_ensemble,
                       "ginibre-complex|hermitian|psd|normal|nilpotent-sq-zero|"
                       "nonneg-entrywise|unitary")
        ->required();
    verify->add_option("--dim", verify_dim, "block dimension 1..16")->required();
    verify->add_option("--count", verify_count, "trials per bound")->required();
    verify->add_option("--seed", verify_seed, "64-bit seed")->required();
    verify->add_option("--grid", verify_grid, "parameter grid preset: default|quick");
    verify->add_option("--out", verify_out, "report output path")->required();
    verify->add_option("--format", verify_format, "json|csv");

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "fuzz the vector lemmas");
    std::string lemmas_id = "all";
    int lemmas_trials = 10000;
    std::uint64_t lemmas_seed = 0;
    lemmas->add_option("--id", lemmas_id, "lemma id or 'all'");
    lemmas->add_option("--trials", lemmas_trials, "trials per lemma")->required();
    lemmas->add_option("--seed", lemmas_seed, "64-bit seed")->required();

    // repro
    auto* repro = app.add_subcommand("repro", "reproduction scenarios");
    std::string repro_scenario = "all";
    repro->add_option("--scenario", repro_scenario, "quantum|volterra|fractional|fpde|example|all");

    app.add_subcommand("list-bounds", "print the bound catalog");
    app.add_subcommand("list-lemmas", "print the lemma catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(compute_in, compute_what, compute_rtol);
        if (bound->parsed()) return run_bound(bound_id, bound_in, bound_params, bound_check);
        if (verify->parsed())
            return run_verify(verify_bounds, verify_ensemble, verify_dim, verify_count,
                              verify_seed, verify_grid, verify_out, verify_format);
        if (lemmas->parsed()) return run_lemmas(lemmas_id, lemmas_trials, lemmas_seed);
        if (repro->parsed()) return run_repro(repro_scenario);
        if (app.get_subcommand("list-bounds")->parsed()) return run_list_bounds();
        if (app.get_subcommand("list-lemmas")->parsed()) return run_list_lemmas();
    } catch (const UnknownBoundError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownLemmaError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamOutOfDomainError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const BadDimError& e) {  // flag-derived: ensemble kind or dimension
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
